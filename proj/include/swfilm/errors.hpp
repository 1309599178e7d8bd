#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace swfilm {

// Base class for all model errors. Context accumulated by callers is
// prepended to the original message, so the root cause stays last.
class Error : public std::runtime_error {
public:
    explicit Error(std::string msg) : std::runtime_error(msg), msg_(std::move(msg)) {}

    void add_context(const std::string& ctx) {
        msg_ = ctx + ": " + msg_;
    }

    const char* what() const noexcept override { return msg_.c_str(); }

private:
    std::string msg_;
};

// Invalid parameter value (violated type invariant, bad argument).
class DomainError : public Error {
    using Error::Error;
};

// Logarithm branch point hit exactly: q1 == omega with zero collisions.
class BranchPointError : public DomainError {
    using DomainError::DomainError;
};

// A mode-sum denominator vanished (plasma resonance with zero collisions).
class ResonanceError : public Error {
public:
    ResonanceError(std::string msg, long mode) : Error(std::move(msg)), mode_index(mode) {}
    long mode_index;
};

// Series did not reach the requested tolerance within max_terms.
// Carries the best estimate so callers can inspect how close it got.
class ConvergenceError : public Error {
public:
    ConvergenceError(std::string msg, std::complex<double> best, long terms, double tail)
        : Error(std::move(msg)), best_estimate(best), terms_used(terms), tail_bound(tail) {}
    std::complex<double> best_estimate;
    long terms_used;
    double tail_bound;
};

// Degenerate optical configuration (vanishing Fresnel denominator,
// amplitude pole); unreachable for passive films, signals bad input.
class DegenerateError : public Error {
    using Error::Error;
};

// Bad CLI flag, config-file line, or sweep specification.
class ConfigError : public Error {
    using Error::Error;
};

// Unreadable or unwritable file.
class IoError : public Error {
    using Error::Error;
};

} // namespace swfilm
