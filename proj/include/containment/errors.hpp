#pragma once

#include <stdexcept>
#include <string>

namespace containment {

// Bad input: malformed files, out-of-range parameters, illegal moves.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured budget (states, nodes, sizes).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A checked invariant failed (proven bound broken, paired monotonicity
// violated). Escalated loudly: the offending instance rides in what().
struct AssertionViolation : std::runtime_error {
    explicit AssertionViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace containment
