#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "krstab/errors.hpp"
#include "krstab/ideals.hpp"
#include "krstab/invariants.hpp"
#include "krstab/krs.hpp"
#include "krstab/polyring.hpp"
#include "krstab/straighten.hpp"
#include "krstab/tableaux.hpp"

using namespace krstab;

namespace {

// Longest chain of support cells strictly increasing in both coordinates.
int support_chain(const Monomial& m) {
    std::vector<Cell> cells;
    for (const auto& [c, e] : m.exps()) cells.push_back(c);
    int n = static_cast<int>(cells.size());
    std::vector<int> dp(n, 1);
    int best = n == 0 ? 0 : 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (cells[j].row < cells[i].row && cells[j].col < cells[i].col) {
                dp[i] = std::max(dp[i], dp[j] + 1);
                best = std::max(best, dp[i]);
            }
    return best;
}

} // namespace

TEST_CASE("family constructors validate their parameters") {
    GridSize g{2, 2};
    CHECK_THROWS_AS(IdealFamily::It(g, 0), invalid_input);
    CHECK_THROWS_AS(IdealFamily::It(g, 3), invalid_input);
    CHECK_THROWS_AS(IdealFamily::ItSymbolic(g, 2, 0), invalid_input);
    CHECK_THROWS_AS(IdealFamily::Jkd(g, 0, 1), invalid_input);
    CHECK_THROWS_AS(IdealFamily::Jkd(g, 1, 0), invalid_input);
    CHECK_THROWS_AS(IdealFamily::IShape(g, Shape({3})), invalid_input);
    CHECK_THROWS_AS(IdealFamily::ProductOfIt(g, {}), invalid_input);
    CHECK_THROWS_AS(IdealFamily::Cogenerated(g, Minor()), invalid_input);
    CHECK_THROWS_AS(IdealFamily::Cogenerated(g, Minor({3}, {1})), invalid_input);
    CHECK_THROWS_AS(IdealFamily::JDeltaK(g, Minor({1}, {1}), 0), invalid_input);
    CHECK_THROWS_AS(IdealFamily::Sum({}), invalid_input);
    CHECK_THROWS_AS(
        IdealFamily::Sum({IdealFamily::It(g, 2), IdealFamily::It(GridSize{3, 3}, 2)}),
        invalid_input);
}

TEST_CASE("contains matches the defining invariant bounds") {
    GridSize g{2, 2};
    auto i2 = IdealFamily::It(g, 2);
    auto sym = IdealFamily::ItSymbolic(g, 2, 2);
    auto jkd = IdealFamily::Jkd(g, 1, 2);
    auto cog = IdealFamily::Cogenerated(g, Minor({1}, {2}));
    auto jdk = IdealFamily::JDeltaK(g, Minor({1}, {2}), 1);
    auto both = IdealFamily::Intersection({i2, cog});
    auto either = IdealFamily::Sum({i2, cog});

    CHECK_THROWS_AS(i2.contains(Bitableau({Minor({1}, {2}), Minor({2}, {1})})),
                    not_standard_error);

    for (int d = 0; d <= 4; ++d) {
        for (const Bitableau& b : enumerate_standard_bitableaux(g, TotalDegree{d})) {
            CHECK(i2.contains(b) == (gamma_t(2, b) >= 1));
            CHECK(sym.contains(b) == (gamma_t(2, b) >= 2));
            // alpha_1 is the largest factor size.
            CHECK(jkd.contains(b) == (shape_alpha(b.shape(), 1) >= 2));
            bool head_above = !b.empty() && minor_leq(Minor({1}, {2}), b.factors().front());
            CHECK(cog.contains(b) == (!b.empty() && !head_above));
            CHECK(jdk.contains(b) == (gamma_delta(Minor({1}, {2}), b) >= 1));
            CHECK(both.contains(b) == (i2.contains(b) && cog.contains(b)));
            CHECK(either.contains(b) == (i2.contains(b) || cog.contains(b)));
        }
    }

    // The unit is never a member.
    CHECK_FALSE(i2.contains(Bitableau()));
    CHECK_FALSE(either.contains(Bitableau()));
}

TEST_CASE("shape families bound every gamma at once") {
    GridSize g{2, 2};
    auto ish = IdealFamily::IShape(g, Shape({2, 1}));
    auto pit = IdealFamily::ProductOfIt(g, {2, 1});
    for (int d = 0; d <= 4; ++d) {
        for (const Bitableau& b : enumerate_standard_bitableaux(g, TotalDegree{d})) {
            bool want = gamma_t(1, b) >= 3 && gamma_t(2, b) >= 1;
            CHECK(ish.contains(b) == want);
            CHECK(pit.contains(b) == want);
        }
    }
}

TEST_CASE("product membership agrees with exact straightening membership") {
    GridSize g{2, 2};
    StraightenEngine eng(g);
    std::vector<IdealFamily> fams = {
        IdealFamily::It(g, 2),
        IdealFamily::ItSymbolic(g, 2, 2),
        IdealFamily::Jkd(g, 1, 2),
        IdealFamily::Cogenerated(g, Minor({1}, {2})),
    };
    auto minors = enumerate_all_minors(g);
    for (const IdealFamily& fam : fams) {
        for (const Minor& a : minors) {
            for (const Minor& b : minors) {
                Bitableau prod({a, b}); // possibly non-standard
                CHECK(fam.contains_product(prod) ==
                      membership(expand_bitableau(prod), fam, eng));
            }
        }
    }

    // Membership splits across the standard representation: X12*X21 has a
    // term of shape (1,1) outside I_2 while the determinant is inside.
    auto i2 = fams[0];
    Polynomial f = Polynomial(Monomial::variable(1, 2).times(Monomial::variable(2, 1)));
    CHECK_FALSE(membership(f, i2, eng));
    CHECK(membership(expand_minor(Minor({1, 2}, {1, 2})), i2, eng));
    CHECK(membership(Polynomial::zero(), i2, eng));
}

TEST_CASE("slice of the determinant ideal on the square grid") {
    GridSize g{2, 2};
    StraightenEngine eng(g);
    auto i2 = IdealFamily::It(g, 2);

    SliceBasis s = slice_of(i2, Multidegree({1, 1}, {1, 1}), eng);
    REQUIRE(s.standard_basis.size() == 1);
    CHECK(s.standard_basis[0] == Bitableau({Minor({1, 2}, {1, 2})}));
    REQUIRE(s.slice_monomials.size() == 2);
    CHECK(s.slice_monomials[0] == Monomial::variable(1, 1).times(Monomial::variable(2, 2)));
    CHECK(s.slice_monomials[1] == Monomial::variable(1, 2).times(Monomial::variable(2, 1)));
    REQUIRE(s.echelon.size() == 1);
    CHECK(s.echelon[0][0] == Rational(1));
    CHECK(s.echelon[0][1] == Rational(-1));
    CHECK(s.initial_monomials ==
          std::vector<Monomial>{Monomial::variable(1, 1).times(Monomial::variable(2, 2))});

    StraightenEngine wrong({3, 3});
    CHECK_THROWS_AS(slice_of(i2, Multidegree({1, 1}, {1, 1}), wrong), invalid_input);
}

TEST_CASE("initial space equals the correspondence image slice-wise") {
    GridSize g{2, 3};
    StraightenEngine eng(g);
    InKRSResult r = check_in_krs(IdealFamily::It(g, 2), 4, eng);
    CHECK(r.pass);
    CHECK(r.slices.empty());
    CHECK(r.slices_checked > 0);
}

TEST_CASE("witness search over inc-decompositions") {
    GridSize g{2, 2};
    StraightenEngine eng(g);
    auto i2 = IdealFamily::It(g, 2);

    Monomial diag = Monomial::variable(1, 1).times(Monomial::variable(2, 2));
    Monomial anti = Monomial::variable(1, 2).times(Monomial::variable(2, 1));

    for (auto mode : {ProductMembership::FamilyPredicate, ProductMembership::ExactRep}) {
        StraightenEngine* ep = mode == ProductMembership::FamilyPredicate ? nullptr : &eng;
        auto w = gkrs_witness(i2, diag, ep, mode);
        REQUIRE(w.has_value());
        CHECK(*w == Bitableau({Minor({1, 2}, {1, 2})}));
        CHECK(expand_bitableau(*w).initial_monomial() == diag);
        CHECK_FALSE(gkrs_witness(i2, anti, ep, mode).has_value());
    }
    CHECK_THROWS_AS(gkrs_witness(i2, diag, nullptr, ProductMembership::ExactRep),
                    invalid_input);

    for (auto mode : {ProductMembership::FamilyPredicate, ProductMembership::ExactRep}) {
        GKRSResult r = check_gkrs(i2, 3, eng, mode);
        CHECK(r.pass);
        CHECK(r.failures.empty());
        CHECK(r.checked > 0);
    }
}

TEST_CASE("facets of the diagonal-free complex") {
    auto fs = facets({2, 2}, 2);
    std::vector<Facet> want = {Facet{{{1, 1}, {1, 2}, {2, 1}}}, Facet{{{1, 2}, {2, 1}, {2, 2}}}};
    CHECK(fs == want);
    CHECK(facets_pure(fs));
    CHECK(facet_contains(fs[0], {1, 2}));
    CHECK_FALSE(facet_contains(fs[0], {2, 2}));

    // Staircases on the 3x3 grid: binomial(4,2) of them, each of 5 cells.
    auto f2 = facets({3, 3}, 2);
    CHECK(f2.size() == 6);
    CHECK(facets_pure(f2));
    CHECK(f2.front().cells.size() == 5);

    auto f3 = facets({3, 3}, 3);
    CHECK(f3.size() == 3);
    CHECK(facets_pure(f3));
    CHECK(f3.front().cells.size() == 8);

    CHECK_THROWS_AS(facets({3, 3}, 2, 1), budget_exceeded_error);
}

TEST_CASE("symbolic power membership through facet primes") {
    auto fs = facets({2, 2}, 2);
    Monomial m = Monomial::variable(1, 1).times(Monomial::variable(2, 2));
    CHECK(exponent_mass_outside(Monomial::variable(1, 1).times(
                                    Monomial::variable(2, 2).times(Monomial::variable(2, 2))),
                                fs[0]) == 2);
    CHECK(monomial_symbolic_membership(m, fs, 1));
    CHECK_FALSE(monomial_symbolic_membership(m, fs, 2));
    CHECK(monomial_symbolic_membership(m.times(m), fs, 2));

    // The grid overload cross-checks against deg - w_t internally and throws
    // if the two characterizations ever disagree.
    for (auto [g, maxdeg] : {std::pair<GridSize, int>{{2, 2}, 4}, {{3, 3}, 3}}) {
        for (int d = 0; d <= maxdeg; ++d)
            for (const Monomial& mm : enumerate_monomials(g, TotalDegree{d}))
                for (int t = 2; t <= 3; ++t) {
                    if (t > std::min(g.rows, g.cols)) continue;
                    for (long long k = 1; k <= 2; ++k)
                        CHECK_NOTHROW(monomial_symbolic_membership(mm, g, t, k));
                }
    }

    for (int d = 0; d <= 3; ++d)
        for (const Monomial& mm : enumerate_monomials(GridSize{3, 3}, TotalDegree{d}))
            for (int t = 1; t <= 3; ++t)
                CHECK(has_t_diagonal_divisor(mm, t) == (support_chain(mm) >= t));
}

TEST_CASE("initial ideals of symbolic and ordinary powers match the facet description") {
    GridSize g{2, 2};
    StraightenEngine eng(g);
    for (long long k = 1; k <= 2; ++k) {
        SymbolicInitialResult r = verify_symbolic_initial(g, 2, k, 4, eng);
        CHECK(r.pass);
        CHECK(r.failing.empty());
        CHECK(r.slices_checked > 0);
    }
    StraightenEngine eng3({3, 3});
    SymbolicInitialResult r = verify_symbolic_initial({3, 3}, 2, 1, 3, eng3);
    CHECK(r.pass);
    CHECK(r.failing.empty());
}

TEST_CASE("cogenerated ideal checks and exploration") {
    StraightenEngine eng({2, 2});
    CogeneratedCheck c = check_cogenerated(Minor({1}, {1}), 3, eng);
    CHECK(c.nonvanishing_pass);
    CHECK(c.in_krs_pass);
    CHECK(c.gkrs_pass);
    CHECK(c.checked > 0);
    CHECK(c.failures.empty());

    StraightenEngine eng23({2, 3});
    CogeneratedCheck c2 = check_cogenerated(Minor({1}, {2}), 3, eng23);
    CHECK(c2.nonvanishing_pass);
    CHECK(c2.in_krs_pass);
    CHECK(c2.gkrs_pass);

    // gamma_[1|1] is gamma_2, which the correspondence preserves; the slice
    // comparison applies because [1|1] has the initial-segment form.
    CogeneratedExploration ex = explore_cogenerated(Minor({1}, {1}), 1, 3, eng);
    CHECK(ex.a_checked > 0);
    CHECK(ex.a_mismatches == 0);
    CHECK(ex.b_violations == 0);
    CHECK(ex.c_violations == 0);
    CHECK(ex.d_computable);
    CHECK(ex.d_equal);

    CogeneratedExploration ex2 = explore_cogenerated(Minor({1}, {2}), 1, 3, eng23);
    CHECK(ex2.a_checked > 0);
    CHECK_FALSE(ex2.d_computable);

    CHECK_THROWS_AS(explore_cogenerated(Minor({1}, {1}), 1, 2, eng, 1), budget_exceeded_error);
}

TEST_CASE("first divergence between the correspondence and initial monomials") {
    Bitableau expect({Minor({1}, {1}), Minor({2}, {2})});
    auto found22 = find_krs_ini_mismatch({2, 2}, 3);
    REQUIRE(found22.has_value());
    CHECK(*found22 == expect);
    auto found33 = find_krs_ini_mismatch({3, 3}, 3);
    REQUIRE(found33.has_value());
    CHECK(*found33 == expect);

    // On a single-row grid the correspondence is the identity on monomials.
    CHECK_FALSE(find_krs_ini_mismatch({1, 5}, 4).has_value());
}
