#ifndef BLOWUP_ERRORS_HPP
#define BLOWUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blowup {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression text could not be parsed; `pos` is a 0-based offset into the input.
struct ParseError : Error {
    std::size_t pos;
    ParseError(std::size_t p, const std::string& msg)
        : Error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Extension polynomial has a term outside the canonical support for its
// splitting type.
struct CanonicalSupportViolation : Error {
    long zexp, udeg;
    CanonicalSupportViolation(long z, long u, const std::string& msg)
        : Error(msg), zexp(z), udeg(u) {}
};

// A truncation window cut off data that the computation needed.
struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& msg) : Error(msg) {}
};

// A dimension failed to settle within the configured number of enlargements.
struct NonStabilized : Error {
    explicit NonStabilized(const std::string& msg) : Error(msg) {}
};

// A closed-form value and its brute-force counterpart disagree, or a hard
// bound was violated. Never swallowed silently.
struct CrossCheckMismatch : Error {
    explicit CrossCheckMismatch(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace blowup

#endif
