#pragma once

#include <stdexcept>
#include <string>

namespace penta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// scalar-core
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};
struct IncompatibleRings : Error {
    explicit IncompatibleRings(const std::string& what = "operands from different ring instances")
        : Error(what) {}
};
struct TruncationUnderflow : Error {
    explicit TruncationUnderflow(const std::string& what) : Error(what) {}
};

// tensor-ops
struct DuplicateLeg : Error {
    explicit DuplicateLeg(const std::string& what = "duplicate leg index") : Error(what) {}
};
struct LegOutOfRange : Error {
    explicit LegOutOfRange(const std::string& what = "leg index out of range") : Error(what) {}
};
struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what = "operator arity mismatch") : Error(what) {}
};
struct SingularOperator : Error {
    explicit SingularOperator(const std::string& what = "operator is singular") : Error(what) {}
};
struct DenseMaterializationRefused : Error {
    explicit DenseMaterializationRefused(const std::string& what) : Error(what) {}
};

// point-maps
struct DomainError : Error {
    explicit DomainError(const std::string& what = "map undefined at point", int factor = -1)
        : Error(what), factor_index(factor) {}
    int factor_index = -1;
};
struct RetryBudgetExhausted : Error {
    explicit RetryBudgetExhausted(const std::string& what) : Error(what) {}
};
struct MissingInverseRule : Error {
    explicit MissingInverseRule(const std::string& what = "no inverse rule registered") : Error(what) {}
};

// hopf-odouble
struct AxiomViolation : Error {
    AxiomViolation(const std::string& axiom_, const std::string& where)
        : Error("Hopf axiom violated: " + axiom_ + " at " + where), axiom(axiom_) {}
    std::string axiom;
};
struct RepresentationMismatch : Error {
    explicit RepresentationMismatch(const std::string& what) : Error(what) {}
};

// qdilog
struct WindowExceeded : Error {
    explicit WindowExceeded(const std::string& what) : Error(what) {}
};
struct FloorExceeded : Error {
    explicit FloorExceeded(const std::string& what) : Error(what) {}
};
struct ConvergenceStalled : Error {
    explicit ConvergenceStalled(const std::string& what) : Error(what) {}
};

// cli-harness
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace penta
