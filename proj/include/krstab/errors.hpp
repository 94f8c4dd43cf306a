#pragma once

#include <stdexcept>
#include <string>

namespace krstab {

// Input violates a structural precondition (bad indices, malformed shape, ...).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A bitableau required to be standard is not.
struct not_standard_error : invalid_input {
    using invalid_input::invalid_input;
};

// A two-row array violates the canonical ordering invariant.
struct not_canonical_error : invalid_input {
    using invalid_input::invalid_input;
};

// Zero polynomial where a nonzero one is required (e.g. initial monomial).
struct zero_polynomial_error : invalid_input {
    using invalid_input::invalid_input;
};

// checkStraighteningOrder demands a non-standard ordered pair of minors.
struct already_standard_error : invalid_input {
    using invalid_input::invalid_input;
};

// A slice linear system is not square/invertible; indicates a broken basis,
// which the correspondence rules out. Treated as an internal error.
struct inconsistent_basis_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A bounded search exhausted its node budget before completing.
struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace krstab
