#pragma once

#include <stdexcept>
#include <string>

namespace symmult {

/// Raised when an input exceeds a configured resource cap.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on ill-formed inputs (size mismatches, invalid partitions, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a quantity that must be an integer fails its rounding
/// tolerance, signalling inconsistent inputs or a bug.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for a group/subgroup combination with no multiplicity backend.
class UnsupportedPairing : public std::invalid_argument {
public:
    explicit UnsupportedPairing(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the multiplicity estimator when fewer shots than the
/// Hoeffding requirement were provided. Carries the required count.
class UndersampledError : public std::runtime_error {
public:
    UndersampledError(const std::string& what, unsigned long long required)
        : std::runtime_error(what), required_shots(required) {}
    unsigned long long required_shots;
};

} // namespace symmult
