#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "krstab/tableaux.hpp"

namespace krstab {

using Rational = mpq_class;

// Canonical "p" / "p/q" / "-p/q" forms.
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    auto operator<=>(const Cell&) const = default;
};

// Power product of grid variables X_ij, exponents >= 1, cells ascending.
// The total order operator<=> is the diagonal term order: lexicographic with
// variable priority X11 > X12 > ... > X1n > X21 > ... (cells ascending).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<Cell, int>> exps);

    static Monomial variable(int row, int col) { return Monomial({{{row, col}, 1}}); }

    const std::vector<std::pair<Cell, int>>& exps() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int degree() const;
    int exponent(const Cell& c) const;
    bool fits(const GridSize& g) const;

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide_into(const Monomial& o) const; // o / *this, requires divides

    friend bool operator==(const Monomial&, const Monomial&) = default;
    std::strong_ordering operator<=>(const Monomial& o) const;

  private:
    std::vector<std::pair<Cell, int>> exps_;
};

std::string to_string(const Monomial& m);

// Row and column usage counts of a monomial or bitableau on a fixed grid.
class Multidegree {
  public:
    Multidegree() = default;
    Multidegree(std::vector<int> row_deg, std::vector<int> col_deg);

    static Multidegree of(const Monomial& m, const GridSize& g);
    static Multidegree of(const Bitableau& b, const GridSize& g);

    const std::vector<int>& row_deg() const { return row_deg_; }
    const std::vector<int>& col_deg() const { return col_deg_; }
    int total() const;

    friend bool operator==(const Multidegree&, const Multidegree&) = default;
    auto operator<=>(const Multidegree&) const = default;

  private:
    std::vector<int> row_deg_;
    std::vector<int> col_deg_;
};

std::string to_string(const Multidegree& v);

// Exact-rational polynomial in the grid variables; terms held in decreasing
// diagonal order, so iteration starts at the initial term.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

    Polynomial() = default;
    explicit Polynomial(const Monomial& m, const Rational& c = 1);

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(Monomial()); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    Polynomial& add_term(const Monomial& m, const Rational& c);
    Polynomial plus(const Polynomial& o) const;
    Polynomial minus(const Polynomial& o) const;
    Polynomial times(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    const Monomial& initial_monomial() const; // throws zero_polynomial_error
    const Rational& initial_coef() const;

    // Multihomogeneous components keyed by multidegree.
    std::map<Multidegree, Polynomial> split_by_multidegree(const GridSize& g) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    TermMap terms_;
};

std::string to_string(const Polynomial& p);

// Signed expansion of a minor of the generic matrix.
Polynomial expand_minor(const Minor& m);
Polynomial expand_bitableau(const Bitableau& b);

// Product of the main-diagonal variables of a minor or of all factors.
Monomial diagonal_monomial(const Minor& m);
Monomial diagonal_monomial(const Bitableau& b);

// All monomials of the exact total degree on the grid, decreasing diagonal
// order. Degree 0 yields the monomial 1.
std::vector<Monomial> enumerate_monomials(const GridSize& g, TotalDegree c);
// All monomials with the given multidegree, decreasing diagonal order.
std::vector<Monomial> enumerate_monomials(const GridSize& g, const Multidegree& v);

// All multidegrees of the exact total degree, ascending lexicographic order.
std::vector<Multidegree> enumerate_multidegrees(const GridSize& g, int total);

} // namespace krstab
