#pragma once

#include <stdexcept>
#include <string>

namespace ksc {

// Base for all library errors; each concrete type maps to a distinct CLI exit code.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed (diagram files, flag lists).  Exit code 2.
struct parse_error : error {
    using error::error;
};

// A documented precondition was violated (zero polynomial fed to canonicalize,
// invalid parameter tuple, malformed in-memory diagram).  Exit code 3.
struct precondition_error : error {
    using error::error;
};

// The Alexander-matrix minor had determinant zero: the input was not a valid
// single-component knot diagram.  Exit code 4.
struct degenerate_determinant_error : error {
    using error::error;
};

// det(V - V^T) != +-1, so V is not a Seifert matrix of a knot.  Exit code 5.
struct invalid_seifert_error : error {
    using error::error;
};

// Projected enumeration size exceeds the configured record cap.  Exit code 6.
struct budget_infeasible_error : error {
    using error::error;
};

// Budget below the threshold where the asymptotic machinery applies
// (optimal_d < 2, or a binomial argument in the growth chain is nonpositive).
// Exit code 7.
struct too_small_budget_error : error {
    using error::error;
};

// File could not be read or written.  Exit code 8.
struct io_error : error {
    using error::error;
};

} // namespace ksc
