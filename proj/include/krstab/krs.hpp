#pragma once

#include <string>
#include <utility>
#include <vector>

#include "krstab/polyring.hpp"
#include "krstab/tableaux.hpp"

namespace krstab {

// Two-row array in canonical form: top row u non-decreasing, and bottom row
// v non-increasing within each run of equal u. Encodes a monomial
// prod_i X_{u_i v_i}.
class TwoRowArray {
  public:
    TwoRowArray() = default;
    TwoRowArray(std::vector<int> u, std::vector<int> v); // throws not_canonical_error

    // Canonical reordering of arbitrary pairs (top, bottom).
    static TwoRowArray from_pairs(std::vector<std::pair<int, int>> pairs);

    int size() const { return static_cast<int>(u_.size()); }
    bool empty() const { return u_.empty(); }
    const std::vector<int>& u() const { return u_; }
    const std::vector<int>& v() const { return v_; }

    friend bool operator==(const TwoRowArray&, const TwoRowArray&) = default;

  private:
    std::vector<int> u_;
    std::vector<int> v_;
};

std::string to_string(const TwoRowArray& a);

Monomial monomial_of(const TwoRowArray& a);
TwoRowArray monomial_to_array(const Monomial& m);
// Swap the two rows and recanonicalize (matrix transposition on cells).
TwoRowArray array_transpose(const TwoRowArray& a);

struct DeletionStep {
    int ell = 0;
    int r = 0;
    Bitableau rest;
};

// One step of the deletion algorithm on a non-empty standard bitableau:
// remove the pivot box of the largest left entry (bottom-most occurrence),
// push its right partner upward, expelling one value from the first row.
DeletionStep krs_delete_step(const Bitableau& b);

// Full correspondence: standard bitableau to canonical two-row array.
TwoRowArray krs_forward(const Bitableau& b);
// Inverse correspondence by row insertion.
Bitableau krs_inverse(const TwoRowArray& a);

// Monomial image KRS(b) = monomial of krs_forward(b).
Monomial krs_monomial(const Bitableau& b);
// Shape of the insertion tableau of a canonical array.
Shape krs_shape(const TwoRowArray& a);

} // namespace krstab
