// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_ERRORS_HPP
#define SCLAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sclag {

/// Base class for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid parameter or out-of-domain argument (alpha <= -1, s <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An adaptive scheme ran out of budget before reaching the requested
/// tolerance; carries the error estimate it did reach.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : Error(what + " (achieved " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

/// The working precision is exhausted: a quantity that is positive in exact
/// arithmetic came out nonpositive. Retry with more precision_bits.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// A pole, a singular denominator or a singular orbit point was hit.
class SingularityError : public Error {
public:
    using Error::Error;
};

} // namespace sclag

#endif
