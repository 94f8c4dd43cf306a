#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "krstab/errors.hpp"

namespace krstab {

struct GridSize {
    int rows = 0;
    int cols = 0;
    friend bool operator==(const GridSize&, const GridSize&) = default;
};

// Minor of a generic matrix, written [a_1..a_t|b_1..b_t]: row indices and
// column indices strictly increasing, 1-based, same length t >= 0.
// The empty minor denotes the constant 1.
class Minor {
  public:
    Minor() = default;
    Minor(std::vector<int> rows, std::vector<int> cols);

    int size() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }

    bool fits(const GridSize& g) const;
    Minor transposed() const { return Minor(cols_, rows_); }

    friend bool operator==(const Minor&, const Minor&) = default;
    // Total order used for canonical factor ordering and enumeration output:
    // larger size first, then rows lexicographic, then cols lexicographic.
    std::strong_ordering operator<=>(const Minor& o) const;

  private:
    std::vector<int> rows_;
    std::vector<int> cols_;
};

enum class MinorOrder { Equal, LessEq, GreaterEq, Incomparable };

// Partial order on minors: a <= b iff size(a) >= size(b) and
// a.rows[i] <= b.rows[i], a.cols[i] <= b.cols[i] for all i < size(b).
MinorOrder compare_minors(const Minor& a, const Minor& b);
bool minor_leq(const Minor& a, const Minor& b);

// Weakly decreasing positive parts; may be empty.
class Shape {
  public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int total() const;
    Shape conjugate() const;

    friend bool operator==(const Shape&, const Shape&) = default;
    std::strong_ordering operator<=>(const Shape& o) const { return parts_ <=> o.parts_; }

  private:
    std::vector<int> parts_;
};

// gamma_t(s) = sum_i max(s_i - t + 1, 0), t >= 1.
long long shape_gamma(const Shape& s, int t);
// alpha_k(s) = s_1 + ... + s_k.
long long shape_alpha(const Shape& s, int k);

enum class ShapeOrderMode { GammaOrder, Containment };

// Whether s precedes t in the chosen order.
// GammaOrder: gamma_u(t) >= gamma_u(s) for every u >= 1.
// Containment: t_k >= s_k for every k.
bool shape_leq(const Shape& s, const Shape& t, ShapeOrderMode mode);

// Product of minors with weakly decreasing sizes. Factors are kept in a
// canonical order (size descending, then rows/cols lexicographic); empty
// factors are dropped. The empty product denotes 1.
class Bitableau {
  public:
    Bitableau() = default;
    explicit Bitableau(std::vector<Minor> factors);

    const std::vector<Minor>& factors() const { return factors_; }
    int width() const { return static_cast<int>(factors_.size()); }
    bool empty() const { return factors_.empty(); }
    int degree() const;
    Shape shape() const;
    bool fits(const GridSize& g) const;
    Bitableau transposed() const;
    Bitableau times(const Minor& m) const;
    Bitableau times(const Bitableau& o) const;

    friend bool operator==(const Bitableau&, const Bitableau&) = default;
    std::strong_ordering operator<=>(const Bitableau& o) const;

  private:
    std::vector<Minor> factors_;
};

// Chain condition factor_1 <= factor_2 <= ... in the minor partial order.
bool is_standard(const Bitableau& b);

std::string to_string(const Minor& m);
std::string to_string(const Shape& s);
std::string to_string(const Bitableau& b);

// All size-t minors fitting the grid, in canonical (operator<=>) order.
std::vector<Minor> enumerate_minors(const GridSize& g, int t);
// All nonempty minors fitting the grid, canonical order.
std::vector<Minor> enumerate_all_minors(const GridSize& g);

struct TotalDegree {
    int degree;
};
struct MultidegreeConstraint {
    std::vector<int> row_deg; // length = grid rows
    std::vector<int> col_deg; // length = grid cols
};

// Standard bitableaux on the grid with the exact total degree, in canonical
// order. Degree 0 yields the empty bitableau.
std::vector<Bitableau> enumerate_standard_bitableaux(const GridSize& g, TotalDegree c);
// Standard bitableaux with the exact shape, canonical order.
std::vector<Bitableau> enumerate_standard_bitableaux(const GridSize& g, const Shape& c);
// Standard bitableaux whose row/column usage counts match the multidegree.
std::vector<Bitableau> enumerate_standard_bitableaux(const GridSize& g,
                                                     const MultidegreeConstraint& c);

} // namespace krstab
