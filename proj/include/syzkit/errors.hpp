#ifndef SYZKIT_ERRORS_HPP
#define SYZKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syzkit {

// Unreadable or malformed input (files, order strings, JSON schemas).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a documented precondition:
// dimension mismatch, non-commuting matrices, non-reduced basis, ...
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency breach. If one of these escapes, a kernel produced
// data that contradicts its own contract.
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The leading module fails the staircase-shape requirement that lets
// multiplication matrices be read off a reduced basis. The message names
// the offending generator and the variable pair.
struct assumption_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace syzkit

#endif
