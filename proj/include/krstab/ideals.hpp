#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krstab/invariants.hpp"
#include "krstab/straighten.hpp"

namespace krstab {

// Ideal families with a standard-bitableau basis, given by a predicate on
// standard bitableaux. Sum is predicate-or, Intersection is predicate-and.
class IdealFamily {
  public:
    enum class Kind {
        It,          // minors of size t
        ItSymbolic,  // symbolic power: gamma_t >= k
        Jkd,         // alpha_k >= d
        IShape,      // gamma_t >= gamma_t(sigma) for every t
        ProductOfIt, // gamma_j >= gamma_j(t_1..t_r) for every j
        Cogenerated, // first factor not >= delta
        JDeltaK,     // gamma_delta >= k
        Sum,
        Intersection,
    };

    static IdealFamily It(GridSize g, int t);
    static IdealFamily ItSymbolic(GridSize g, int t, long long k);
    static IdealFamily Jkd(GridSize g, int k, long long d);
    static IdealFamily IShape(GridSize g, Shape sigma);
    static IdealFamily ProductOfIt(GridSize g, std::vector<int> ts);
    static IdealFamily Cogenerated(GridSize g, Minor delta);
    static IdealFamily JDeltaK(GridSize g, Minor delta, long long k);
    static IdealFamily Sum(std::vector<IdealFamily> members);
    static IdealFamily Intersection(std::vector<IdealFamily> members);

    Kind kind() const { return kind_; }
    const GridSize& grid() const { return g_; }
    std::string name() const;

    // Standard-basis predicate. Throws not_standard_error if sigma is not
    // standard (the empty bitableau 1 is standard and never a member).
    bool contains(const Bitableau& sigma) const;

    // Membership of an arbitrary product of minors, by the family's own
    // invariant bound on the factors. Exact for the gamma/alpha families
    // (their invariants characterize membership of products) and for
    // Cogenerated (the ideal is prime, so some factor must lie in it).
    // For JDeltaK and Sum the bound is sufficient but not known to be
    // necessary; use membership() when an exact answer is required.
    bool contains_product(const Bitableau& delta) const;

  private:
    IdealFamily() = default;

    Kind kind_ = Kind::It;
    GridSize g_{1, 1};
    int t_ = 0;
    long long k_ = 0;
    Shape shape_{};
    std::vector<int> ts_;
    Minor delta_{};
    std::vector<IdealFamily> members_;
};

// One multigraded slice of a family: its standard basis, the reduced row
// echelon form of the basis expansions over the slice monomials (descending
// diagonal order), and the pivot monomials (= initial monomials of the slice).
struct SliceBasis {
    Multidegree multidegree;
    std::vector<Bitableau> standard_basis;
    std::vector<Monomial> slice_monomials;
    RatMatrix echelon;
    std::vector<Monomial> initial_monomials;
};

// Throws inconsistent_basis_error if the echelon rank differs from the
// basis size (the basis expansions are linearly independent).
SliceBasis slice_of(const IdealFamily& fam, const Multidegree& v, StraightenEngine& eng);

// Exact ideal membership: every standard-representation term passes the
// family predicate. The zero polynomial is a member.
bool membership(const Polynomial& f, const IdealFamily& fam, StraightenEngine& eng);

// --- in-KRS and G-KRS checks -----------------------------------------------

struct InKRSSlice {
    Multidegree v;
    bool pass = true;
    std::vector<Monomial> krs_only; // KRS images missing from the initial set
    std::vector<Monomial> ini_only; // initial monomials missing from the KRS set
};

struct InKRSResult {
    bool pass = true;
    long long slices_checked = 0;
    std::vector<InKRSSlice> slices; // failing slices only
};

// KRS(I) = ini(I) slice-wise for every multidegree of total degree <= bound.
InKRSResult check_in_krs(const IdealFamily& fam, int degree_bound, StraightenEngine& eng);

enum class ProductMembership {
    FamilyPredicate, // contains_product on the candidate
    ExactRep,        // straightening: all standard-representation terms pass
};

// Search for a bitableau witness Delta with ini(Delta) = m and Delta in fam,
// over all inc-decompositions of m. eng may be null in FamilyPredicate mode.
std::optional<Bitableau> gkrs_witness(const IdealFamily& fam, const Monomial& m,
                                      StraightenEngine* eng, ProductMembership mode);

struct GKRSFailure {
    Bitableau sigma;
    Monomial image;
};

struct GKRSResult {
    bool pass = true;
    long long checked = 0;
    std::vector<GKRSFailure> failures;
};

// For every standard basis element Sigma up to the bound, some
// inc-decomposition of KRS(Sigma) lies in the family.
GKRSResult check_gkrs(const IdealFamily& fam, int degree_bound, StraightenEngine& eng,
                      ProductMembership mode = ProductMembership::FamilyPredicate);

// --- Stanley-Reisner side ----------------------------------------------------

// Maximal cell set containing no t-diagonal; cells sorted.
struct Facet {
    std::vector<Cell> cells;
    bool operator==(const Facet&) const = default;
    auto operator<=>(const Facet&) const = default;
};

bool facet_contains(const Facet& f, const Cell& c);

// All facets of the complex of t-diagonal-free cell sets, sorted. The budget
// caps search tree nodes; throws budget_exceeded_error beyond it.
std::vector<Facet> facets(const GridSize& g, int t, long long budget = 4'000'000);

bool facets_pure(const std::vector<Facet>& fs);

// Total exponent of m on cells outside f.
long long exponent_mass_outside(const Monomial& m, const Facet& f);

// m lies in the k-th power of every facet prime, i.e. the mass outside each
// facet is >= k.
bool monomial_symbolic_membership(const Monomial& m, const std::vector<Facet>& fs,
                                  long long k);
// Convenience overload: computes the facets of the grid and cross-checks the
// answer against deg(m) - w_t(m) >= k; throws inconsistent_basis_error if the
// two disagree.
bool monomial_symbolic_membership(const Monomial& m, const GridSize& g, int t, long long k,
                                  long long budget = 4'000'000);

// True if the support of m contains a strictly increasing chain of t cells.
bool has_t_diagonal_divisor(const Monomial& m, int t);

struct SymbolicSliceCheck {
    Multidegree v;
    bool symbolic_equals_facets = true; // ini of ItSymbolic(t,k) slice == facet set
    bool power_decomposition = true;    // ini of ProductOfIt(t^k) slice == nested facet set
    std::vector<std::string> notes;
};

struct SymbolicInitialResult {
    bool pass = true;
    long long slices_checked = 0;
    std::vector<SymbolicSliceCheck> failing;
};

// Slice-wise: the initial monomials of the symbolic power match the facet
// intersection, and the initial monomials of the ordinary power match the
// nested facet intersection over j = 1..t with exponents k(t+1-j).
SymbolicInitialResult verify_symbolic_initial(const GridSize& g, int t, long long k,
                                              int degree_bound, StraightenEngine& eng,
                                              long long budget = 4'000'000);

// --- cogenerated ideals -------------------------------------------------------

struct CogeneratedCheck {
    Minor delta;
    bool nonvanishing_pass = true; // gamma_delta(S) != 0 implies gamma_delta(KRS(S)) != 0
    bool in_krs_pass = true;
    bool gkrs_pass = true;
    long long checked = 0;
    std::vector<std::string> failures;
};

// Asserted facts about I(delta): the nonvanishing implication over all
// standard bitableaux up to the bound, in-KRS, and G-KRS.
CogeneratedCheck check_cogenerated(const Minor& delta, int degree_bound,
                                   StraightenEngine& eng);

struct CogeneratedExploration {
    Minor delta;
    long long k = 1;
    int degree_bound = 0;
    // (a) is gamma_delta invariant under the correspondence
    long long a_checked = 0;
    long long a_mismatches = 0;
    std::vector<std::string> a_examples;
    // (b) does every standard term of a gamma_delta >= k product keep the bound
    long long b_checked = 0;
    long long b_violations = 0;
    std::vector<std::string> b_examples;
    // (c) do k-fold products of basis elements keep gamma_delta >= k termwise
    long long c_checked = 0;
    long long c_violations = 0;
    std::vector<std::string> c_examples;
    // (d) slice comparison of the k-bound family against the symbolic power,
    // exact only when delta = [1..t-1|1..t-1]
    bool d_computable = false;
    bool d_equal = true;
    std::string d_note;
};

// Empirical tables only; asserts nothing. Throws budget_exceeded_error when
// the candidate enumeration exceeds the budget.
CogeneratedExploration explore_cogenerated(const Minor& delta, long long k, int degree_bound,
                                           StraightenEngine& eng, long long budget = 4'000'000);

// First standard bitableau (by degree, then enumeration order) whose KRS
// image differs from its initial monomial, up to the bound.
std::optional<Bitableau> find_krs_ini_mismatch(const GridSize& g, int degree_bound);

} // namespace krstab
