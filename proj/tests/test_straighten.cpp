#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "krstab/errors.hpp"
#include "krstab/polyring.hpp"
#include "krstab/straighten.hpp"
#include "krstab/tableaux.hpp"

using namespace krstab;

namespace {

Polynomial var(int r, int c) { return Polynomial(Monomial::variable(r, c)); }

} // namespace

TEST_CASE("the classic two-by-two rewrite") {
    StraightenEngine eng({2, 2});

    // X12*X21 = [1|1][2|2] - [1,2|1,2].
    Polynomial f = var(1, 2).times(var(2, 1));
    StandardRep rep = eng.standard_representation(f);

    Bitableau prod({Minor({1}, {1}), Minor({2}, {2})});
    Bitableau det({Minor({1, 2}, {1, 2})});
    REQUIRE(rep.size() == 2);
    CHECK(rep.at(prod) == Rational(1));
    CHECK(rep.at(det) == Rational(-1));
    CHECK(evaluate(rep) == f);
}

TEST_CASE("standard expansions are fixed points") {
    StraightenEngine eng({2, 3});
    for (int d = 0; d <= 3; ++d) {
        for (const Bitableau& b : enumerate_standard_bitableaux({2, 3}, TotalDegree{d})) {
            StandardRep rep = eng.standard_representation(b);
            REQUIRE(rep.size() == 1);
            CHECK(rep.begin()->first == b);
            CHECK(rep.begin()->second == Rational(1));
        }
    }
}

TEST_CASE("representation is linear and inverts evaluate") {
    StraightenEngine eng({2, 2});
    Polynomial f = var(1, 2).times(var(2, 1));
    Polynomial g = var(1, 1).plus(var(2, 2)).times(var(1, 1).plus(var(2, 2)));

    StandardRep rf = eng.standard_representation(f);
    StandardRep rg = eng.standard_representation(g);
    StandardRep rsum = eng.standard_representation(f.scaled(Rational(3, 2)).plus(g));

    StandardRep expect = rg;
    for (const auto& [b, c] : rf) {
        Rational v = expect.count(b) ? expect.at(b) : Rational(0);
        v = v + c * Rational(3, 2);
        if (v == Rational(0)) expect.erase(b);
        else expect[b] = v;
    }
    CHECK(rsum == expect);

    CHECK(evaluate(rsum) == f.scaled(Rational(3, 2)).plus(g));
    CHECK(eng.standard_representation(Polynomial::zero()).empty());
    CHECK(evaluate(StandardRep{}) == Polynomial::zero());
}

TEST_CASE("linear extension of the correspondence on the standard basis") {
    StraightenEngine eng({2, 2});

    Bitableau prod({Minor({1}, {1}), Minor({2}, {2})});
    CHECK(eng.krs_automorphism(expand_bitableau(prod)) ==
          Polynomial(Monomial::variable(1, 2).times(Monomial::variable(2, 1))));
    CHECK(eng.krs_automorphism(expand_minor(Minor({1, 2}, {1, 2}))) ==
          Polynomial(Monomial::variable(1, 1).times(Monomial::variable(2, 2))));

    for (int d = 0; d <= 3; ++d) {
        for (const Bitableau& b : enumerate_standard_bitableaux({2, 2}, TotalDegree{d})) {
            CHECK(eng.krs_automorphism(expand_bitableau(b)) == Polynomial(krs_monomial(b)));
        }
    }

    // Linearity carries coefficients through.
    Polynomial f = expand_bitableau(prod).scaled(Rational(5)).minus(
        expand_minor(Minor({1, 2}, {1, 2})));
    Polynomial want = Polynomial(Monomial::variable(1, 2).times(Monomial::variable(2, 1)))
                          .scaled(Rational(5))
                          .minus(Polynomial(Monomial::variable(1, 1).times(Monomial::variable(2, 2))));
    CHECK(eng.krs_automorphism(f) == want);
}

TEST_CASE("straightening a non-standard pair stays within the order bounds") {
    StraightenEngine eng({2, 3});
    auto minors = enumerate_all_minors({2, 3});
    int straightened = 0, rejected = 0;
    for (const Minor& d1 : minors) {
        for (const Minor& d2 : minors) {
            if (minor_leq(d1, d2)) {
                CHECK_THROWS_AS(check_straightening_order(eng, d1, d2), already_standard_error);
                ++rejected;
            } else {
                StraighteningCheck c = check_straightening_order(eng, d1, d2);
                CHECK(c.pass);
                CHECK(c.violations.empty());
                CHECK(evaluate(c.rep) == expand_minor(d1).times(expand_minor(d2)));
                ++straightened;
            }
        }
    }
    CHECK(straightened + rejected == 81);
    CHECK(straightened > 0);
    CHECK(rejected > 0);
}

TEST_CASE("standard representations keep a term of the original shape") {
    StraightenEngine eng({2, 2});
    auto minors = enumerate_all_minors({2, 2});
    for (const Minor& d1 : minors) {
        for (const Minor& d2 : minors) {
            StraighteningCheck c = check_straightening_shape(eng, Bitableau({d1, d2}));
            CHECK(c.pass);
            CHECK(c.violations.empty());
        }
    }
}

TEST_CASE("slice systems are square with matching bases") {
    StraightenEngine eng({2, 3});
    GridSize g{2, 3};
    for (int d = 0; d <= 4; ++d) {
        for (const Multidegree& v : enumerate_multidegrees(g, d)) {
            const auto& s = eng.slice(v);
            auto basis = enumerate_standard_bitableaux(
                g, MultidegreeConstraint{v.row_deg(), v.col_deg()});
            auto mons = enumerate_monomials(g, v);
            CHECK(s.basis == basis);
            CHECK(s.basis.size() == s.monomials.size());
            CHECK(std::is_sorted(s.monomials.begin(), s.monomials.end(),
                                 [](const Monomial& a, const Monomial& b) { return a > b; }));
            std::vector<Monomial> sorted_mons = s.monomials;
            std::sort(sorted_mons.begin(), sorted_mons.end());
            std::sort(mons.begin(), mons.end());
            CHECK(sorted_mons == mons);
            CHECK(s.matrix.size() == s.monomials.size());
            if (!s.matrix.empty()) CHECK(s.matrix.front().size() == s.basis.size());
        }
    }
}
