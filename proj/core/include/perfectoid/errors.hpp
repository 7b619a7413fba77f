#pragma once

#include <stdexcept>
#include <string>

namespace perfectoid {

/// Base class for all domain errors raised by the library. CLI maps these
/// to exit code 1; anything else is a bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact integer arithmetic left the configured 64-bit carrier.
struct ArithmeticOverflow : Error {
    explicit ArithmeticOverflow(const std::string& msg) : Error("arithmetic-overflow: " + msg) {}
};

/// A truncated-series product exceeded the term-count cap.
struct TruncationOverflow : Error {
    explicit TruncationOverflow(const std::string& msg) : Error("truncation-overflow: " + msg) {}
};

/// Operands with incompatible ambient data (prime, length, precision).
struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& msg) : Error("ambient-mismatch: " + msg) {}
};

/// Configuration outside the supported ranges (e.g. p = 7).
struct UnsupportedConfig : Error {
    explicit UnsupportedConfig(const std::string& msg) : Error("unsupported-configuration: " + msg) {}
};

/// A size cap (Witt polynomial terms, iteration budget) was exceeded.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error("cap-exceeded: " + msg) {}
};

/// A persisted Witt polynomial cache failed its integrality / ghost checks.
struct CacheIntegrityError : Error {
    explicit CacheIntegrityError(const std::string& msg) : Error("cache-integrity: " + msg) {}
};

/// A seminorm descriptor that would be unbounded on its ring.
struct BoundednessViolation : Error {
    explicit BoundednessViolation(const std::string& msg) : Error("boundedness-violation: " + msg) {}
};

/// A quantity was requested at a precision the element does not carry.
struct BelowPrecision : Error {
    explicit BelowPrecision(const std::string& msg) : Error("below-precision: " + msg) {}
};

/// Malformed JSON input or schema mismatch.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse-error: " + msg) {}
};

} // namespace perfectoid
