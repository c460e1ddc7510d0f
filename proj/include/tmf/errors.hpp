#pragma once

#include <stdexcept>
#include <string>

namespace tmf {

// Base class for all domain errors.  CLI maps these to exit code 1
// (input) or 2 (congruence failure), see tools/tmf_forms.cpp.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("constant term is zero, series is not a unit") {}
};

struct BadConstantTerm : Error {
    explicit BadConstantTerm(const std::string& msg) : Error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(long p) : Error("not a prime: " + std::to_string(p)) {}
};

struct DenominatorNotInvertible : Error {
    long index;
    DenominatorNotInvertible(long idx, const std::string& msg)
        : Error(msg), index(idx) {}
};

struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& msg) : Error(msg) {}
};

struct NotInRing : Error {
    explicit NotInRing(const std::string& msg) : Error(msg) {}
};

struct BadNormalization : Error {
    explicit BadNormalization(const std::string& msg) : Error(msg) {}
};

struct LatticeError : Error {
    explicit LatticeError(const std::string& msg) : Error(msg) {}
};

struct NotSymmetric : LatticeError {
    explicit NotSymmetric(const std::string& msg) : LatticeError(msg) {}
};

struct NotEven : LatticeError {
    explicit NotEven(const std::string& msg) : LatticeError(msg) {}
};

struct NotUnimodular : LatticeError {
    explicit NotUnimodular(const std::string& msg) : LatticeError(msg) {}
};

struct NotPositiveDefinite : LatticeError {
    explicit NotPositiveDefinite(const std::string& msg) : LatticeError(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct DimensionNot24k : Error {
    explicit DimensionNot24k(int dim)
        : Error("lattice dimension " + std::to_string(dim) +
                " is not a multiple of 24") {}
};

struct NonIntegralResidue : Error {
    explicit NonIntegralResidue(const std::string& msg) : Error(msg) {}
};

struct OddTermResidual : Error {
    explicit OddTermResidual(const std::string& msg) : Error(msg) {}
};

struct PairNotCongruent : Error {
    explicit PairNotCongruent(const std::string& msg) : Error(msg) {}
};

struct MissingEntry : Error {
    explicit MissingEntry(const std::string& msg) : Error(msg) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace tmf
