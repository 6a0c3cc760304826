#pragma once

#include <stdexcept>
#include <string>

#include "hblab/defs.hpp"

namespace hblab {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the documented domain (|z| >= 1, radius out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Isolated singular point hit during evaluation: h'(z) = 0, |omega(z)| >= 1,
// branch point of a series operation. Supremum scans treat these as skippable.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Non-finite value produced at a sample point; carries the offending point.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, Complex where)
        : Error(what), where_(where) {}
    Complex where() const { return where_; }

private:
    Complex where_;
};

// A declared flag or normalization class does not match the object.
class ContractError : public Error {
public:
    using Error::Error;
};

// Theorem hypothesis not satisfied (diverged seminorm, hyperbolic norm too
// large, non-univalent input to a construction that requires it).
class HypothesisError : public Error {
public:
    using Error::Error;
};

// A grid scan could not produce a result (all samples failed, or more than
// the tolerated fraction of samples errored out).
class ScanError : public Error {
public:
    using Error::Error;
};

// Bad command-line or suite arguments.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace hblab
