#pragma once

#include <concepts>
#include <string>

namespace penta {

/// Everything the generic tensor/point machinery needs from a coefficient
/// ring: arithmetic with exact (or tolerance-defined) equality plus a way to
/// make 0 and 1 in the same ring instance as an existing value.
template <class R>
concept scalar_ring = requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { ring_inv(a) } -> std::convertible_to<R>;
    { zero_like(a) } -> std::convertible_to<R>;
    { one_like(a) } -> std::convertible_to<R>;
    { scalar_str(a) } -> std::convertible_to<std::string>;
};

}  // namespace penta
