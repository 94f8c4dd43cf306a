#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "krstab/krs.hpp"
#include "krstab/linalg.hpp"
#include "krstab/polyring.hpp"
#include "krstab/tableaux.hpp"

namespace krstab {

// Standard representation: standard bitableaux with nonzero coefficients.
using StandardRep = std::map<Bitableau, Rational>;

Polynomial evaluate(const StandardRep& rep);

// Per-multidegree exact linear algebra for the standard-bitableau basis.
// Slices are cached; each holds the expansion matrix of the slice's standard
// bitableaux in monomial coordinates and its inverse.
class StraightenEngine {
  public:
    explicit StraightenEngine(GridSize g) : g_(g) {}

    const GridSize& grid() const { return g_; }

    struct Slice {
        Multidegree v;
        std::vector<Bitableau> basis;    // canonical enumeration order
        std::vector<Monomial> monomials; // diagonal order, descending
        RatMatrix matrix;                // matrix[i][j] = coef of monomial i in basis j
        RatMatrix inverse;               // filled on first solve
    };

    // Throws inconsistent_basis_error if the slice system is not square
    // (the straightening law rules this out). The inverse is computed lazily
    // by standard_representation, not here.
    const Slice& slice(const Multidegree& v);

    StandardRep standard_representation(const Polynomial& f);
    StandardRep standard_representation(const Bitableau& b);

    // K-linear extension of the correspondence: each standard term maps to
    // its image monomial.
    Polynomial krs_automorphism(const Polynomial& f);

  private:
    Slice& slice_mut(const Multidegree& v);
    void ensure_inverse(Slice& s);

    GridSize g_;
    std::map<Multidegree, Slice> cache_;
    std::mutex mutex_;
};

struct StraighteningCheck {
    bool pass = true;
    StandardRep rep;
    std::vector<std::string> violations;
};

// The standard representation of D contains a term of D's own shape.
StraighteningCheck check_straightening_shape(StraightenEngine& eng, const Bitableau& D);

// For a non-standard ordered pair (d1, d2): every standard term of d1*d2 is
// eps*eta with eps strictly below d1 and eta (possibly empty) strictly above
// d2 in the minor order. Throws already_standard_error when d1 <= d2.
StraighteningCheck check_straightening_order(StraightenEngine& eng, const Minor& d1,
                                             const Minor& d2);

} // namespace krstab
