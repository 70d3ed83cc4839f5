#pragma once

#include <string>

namespace penta {

/// Outcome of one equation check. A fail always carries a counterexample.
struct RelationReport {
    enum class Status { pass, fail, skipped };

    std::string equation;
    std::string backend;
    Status status = Status::skipped;
    std::string counterexample;  // empty unless status == fail
    long samples = 0;
    long retries = 0;
    double ms = 0.0;
    std::string note;

    bool passed() const { return status == Status::pass; }

    static RelationReport pass(std::string equation, std::string backend, long samples = 0,
                               long retries = 0) {
        RelationReport r;
        r.equation = std::move(equation);
        r.backend = std::move(backend);
        r.status = Status::pass;
        r.samples = samples;
        r.retries = retries;
        return r;
    }
    static RelationReport fail(std::string equation, std::string backend, std::string witness,
                               long samples = 0, long retries = 0) {
        RelationReport r;
        r.equation = std::move(equation);
        r.backend = std::move(backend);
        r.status = Status::fail;
        r.counterexample = witness.empty() ? "unspecified witness" : std::move(witness);
        r.samples = samples;
        r.retries = retries;
        return r;
    }
    static RelationReport skipped(std::string equation, std::string backend, std::string why) {
        RelationReport r;
        r.equation = std::move(equation);
        r.backend = std::move(backend);
        r.status = Status::skipped;
        r.note = std::move(why);
        return r;
    }
};

inline const char* status_str(RelationReport::Status s) {
    switch (s) {
        case RelationReport::Status::pass: return "pass";
        case RelationReport::Status::fail: return "fail";
        default: return "skipped";
    }
}

}  // namespace penta
