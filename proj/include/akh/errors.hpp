#pragma once

#include <stdexcept>
#include <string>

namespace akh {

// Bad user input: malformed braid text, out-of-range generator, bad flag value.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds a configured size limit (crossing count, page bound, ...).
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal invariant: d^2 != 0, negative beta exponent, a surgery
// that changes the cycle count by anything other than one.  Always a bug.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// require(): invariant check that survives release builds.
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace akh
