#pragma once

#include <stdexcept>
#include <string>

namespace eszlab {

// Bad user input: malformed polynomial text, unreadable file, violated
// precondition of a public operation.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A theorem-backed invariant failed (Schwartz-Zippel, Cauchy-Schwarz,
// Bezout, degree bounds). Always a bug in this library.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Numeric iteration did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void ensure_invariant(bool ok, const std::string& what)
{
    if (!ok) throw InvariantViolation(what);
}

} // namespace eszlab
