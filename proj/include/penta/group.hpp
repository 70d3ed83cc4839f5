#pragma once

#include <string>
#include <vector>

#include "penta/errors.hpp"

namespace penta {

/// Finite group as a Cayley table. Elements are indices 0..order-1.
struct GroupTable {
    std::string name;
    int order = 0;
    int unit = 0;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    std::vector<std::string> labels;

    int op(int a, int b) const { return mul[a][b]; }
    int inverse(int a) const { return inv[a]; }

    static GroupTable cyclic(int n, const std::string& name) {
        GroupTable g;
        g.name = name;
        g.order = n;
        g.unit = 0;
        g.mul.assign(n, std::vector<int>(n, 0));
        g.inv.assign(n, 0);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
            g.inv[a] = (n - a) % n;
            g.labels.push_back(std::to_string(a));
        }
        return g;
    }
};

namespace detail {
inline std::vector<std::vector<int>> perms3() {
    return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
}
}  // namespace detail

/// Symmetric group on three letters; elements are the permutations of
/// {0,1,2} in lexicographic order, labelled by their one-line form.
inline GroupTable make_s3() {
    auto ps = detail::perms3();
    GroupTable g;
    g.name = "S3";
    g.order = 6;
    auto find = [&](const std::vector<int>& p) {
        for (size_t i = 0; i < ps.size(); ++i)
            if (ps[i] == p) return static_cast<int>(i);
        throw Error("permutation lookup failed");
    };
    g.unit = find({0, 1, 2});
    g.mul.assign(6, std::vector<int>(6, 0));
    g.inv.assign(6, 0);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int i = 0; i < 3; ++i) c[i] = ps[a][ps[b][i]];  // (ab)(i) = a(b(i))
            g.mul[a][b] = find(c);
        }
        std::vector<int> ai(3);
        for (int i = 0; i < 3; ++i) ai[ps[a][i]] = i;
        g.inv[a] = find(ai);
        g.labels.push_back(std::to_string(ps[a][0]) + std::to_string(ps[a][1]) +
                           std::to_string(ps[a][2]));
    }
    return g;
}

inline GroupTable make_z2() { return GroupTable::cyclic(2, "Z2"); }
inline GroupTable make_z3() { return GroupTable::cyclic(3, "Z3"); }

}  // namespace penta
