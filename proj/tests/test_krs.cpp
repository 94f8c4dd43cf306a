#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "krstab/errors.hpp"
#include "krstab/krs.hpp"
#include "krstab/polyring.hpp"
#include "krstab/tableaux.hpp"

using namespace krstab;

namespace {

Bitableau bt(std::vector<Minor> ms) { return Bitableau(std::move(ms)); }

// The diagonal monomial of a single minor, computed without the library.
Monomial diagonal_of(const Minor& m) {
    Monomial out;
    for (int i = 0; i < m.size(); ++i) out = out.times(Monomial::variable(m.rows()[i], m.cols()[i]));
    return out;
}

} // namespace

TEST_CASE("two-row array canonical form is validated") {
    CHECK_NOTHROW(TwoRowArray({1, 1, 2}, {3, 1, 2}));
    CHECK_THROWS_AS(TwoRowArray({1, 1}, {1, 2}), not_canonical_error); // v increases inside a run
    CHECK_THROWS_AS(TwoRowArray({2, 1}, {1, 1}), not_canonical_error); // u decreases
    CHECK_THROWS_AS(TwoRowArray({1}, {1, 2}), not_canonical_error);    // ragged
    CHECK_THROWS_AS(TwoRowArray({0, 1}, {1, 1}), not_canonical_error); // entries start at 1

    TwoRowArray a = TwoRowArray::from_pairs({{1, 1}, {2, 3}, {1, 2}, {2, 1}});
    CHECK(a.u() == std::vector<int>{1, 1, 2, 2});
    CHECK(a.v() == std::vector<int>{2, 1, 3, 1});

    CHECK(TwoRowArray().empty());
    CHECK(TwoRowArray::from_pairs({}) == TwoRowArray());
}

TEST_CASE("arrays and monomials are two views of the same data") {
    TwoRowArray a({1, 1, 3}, {2, 2, 1});
    Monomial m = monomial_of(a);
    CHECK(m.degree() == 3);
    CHECK(m.exponent({1, 2}) == 2);
    CHECK(m.exponent({3, 1}) == 1);
    CHECK(monomial_to_array(m) == a);

    // Round trip across every monomial of low degree on a small grid.
    GridSize g{2, 3};
    for (int d = 0; d <= 3; ++d) {
        for (const Monomial& mm : enumerate_monomials(g, TotalDegree{d})) {
            TwoRowArray arr = monomial_to_array(mm);
            CHECK(arr.size() == d);
            CHECK(monomial_of(arr) == mm);
        }
    }
}

TEST_CASE("array transpose is an involution matching cell transposition") {
    TwoRowArray a({1, 1, 2, 4}, {3, 1, 2, 2});
    TwoRowArray t = array_transpose(a);
    CHECK(array_transpose(t) == a);

    Monomial m = monomial_of(a);
    Monomial mt = monomial_of(t);
    CHECK(mt.degree() == m.degree());
    for (const auto& [cell, e] : m.exps()) {
        CHECK(mt.exponent({cell.col, cell.row}) == e);
    }
}

TEST_CASE("deletion step on a worked instance") {
    // Sigma = [1,3,4,5|1,2,3,6] * [2,6|4,5], hand traced.
    Bitableau sigma = bt({Minor({1, 3, 4, 5}, {1, 2, 3, 6}), Minor({2, 6}, {4, 5})});
    REQUIRE(is_standard(sigma));

    DeletionStep s = krs_delete_step(sigma);
    CHECK(s.ell == 6);
    CHECK(s.r == 3);
    CHECK(s.rest == bt({Minor({1, 3, 4, 5}, {1, 2, 5, 6}), Minor({2}, {4})}));

    CHECK_THROWS_AS(krs_delete_step(Bitableau()), invalid_input);
}

TEST_CASE("full correspondence on the worked instance") {
    Bitableau sigma = bt({Minor({1, 3, 4, 5}, {1, 2, 3, 6}), Minor({2, 6}, {4, 5})});

    TwoRowArray expect({1, 2, 3, 4, 5, 6}, {4, 1, 2, 5, 6, 3});
    CHECK(krs_forward(sigma) == expect);
    CHECK(krs_inverse(expect) == sigma);
    CHECK(krs_shape(expect) == Shape({4, 2}));

    Monomial img = krs_monomial(sigma);
    CHECK(img == monomial_of(expect));
    CHECK(img.exponent({1, 4}) == 1);
    CHECK(img.exponent({6, 3}) == 1);
    CHECK(img.degree() == 6);
}

TEST_CASE("single minors map to their diagonal monomials") {
    GridSize g{3, 3};
    for (const Minor& m : enumerate_all_minors(g)) {
        Bitableau b = bt({m});
        CHECK(krs_monomial(b) == diagonal_of(m));
        CHECK(krs_shape(krs_forward(b)) == b.shape());
    }
}

TEST_CASE("correspondence rejects non-standard input") {
    Bitableau skew = bt({Minor({1}, {2}), Minor({2}, {1})});
    REQUIRE_FALSE(is_standard(skew));
    CHECK_THROWS_AS(krs_forward(skew), not_standard_error);
    CHECK_THROWS_AS(krs_monomial(skew), not_standard_error);
}

TEST_CASE("bijection onto all monomials, multidegree by multidegree") {
    GridSize g{2, 2};
    for (int d = 0; d <= 4; ++d) {
        std::set<Monomial> images;
        std::map<std::pair<std::vector<int>, std::vector<int>>, int> image_degs;
        for (const Bitableau& b : enumerate_standard_bitableaux(g, TotalDegree{d})) {
            Monomial img = krs_monomial(b);
            CHECK(images.insert(img).second); // injective
            // Multidegree is preserved.
            Multidegree src = Multidegree::of(b, g);
            Multidegree dst = Multidegree::of(img, g);
            CHECK(src == dst);
            image_degs[{src.row_deg(), src.col_deg()}]++;
        }
        std::set<Monomial> all;
        for (const Monomial& m : enumerate_monomials(g, TotalDegree{d})) all.insert(m);
        CHECK(images == all); // surjective onto the degree-d slice

        // Inverse really inverts, checked on the same slice.
        for (const Monomial& m : all) {
            Bitableau b = krs_inverse(monomial_to_array(m));
            CHECK(krs_monomial(b) == m);
        }
        (void)image_degs;
    }
}

TEST_CASE("insertion and deletion are mutually inverse on a bigger grid") {
    GridSize g{2, 3};
    for (int d = 0; d <= 3; ++d) {
        for (const Bitableau& b : enumerate_standard_bitableaux(g, TotalDegree{d})) {
            CHECK(krs_inverse(krs_forward(b)) == b);
        }
    }
}
