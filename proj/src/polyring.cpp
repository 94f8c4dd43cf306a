#include "krstab/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace krstab {

Rational rational_from_string(const std::string& s) {
    mpq_class r;
    try {
        r = mpq_class(s, 10);
    } catch (const std::invalid_argument&) {
        throw invalid_input("rational: malformed literal '" + s + "'");
    }
    if (r.get_den() == 0) throw invalid_input("rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Monomial::Monomial(std::vector<std::pair<Cell, int>> exps) : exps_(std::move(exps)) {
    for (const auto& [c, e] : exps_) {
        if (c.row < 1 || c.col < 1) throw invalid_input("Monomial: cell indices must be >= 1");
        if (e < 0) throw invalid_input("Monomial: exponents must be >= 0");
    }
    std::sort(exps_.begin(), exps_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Cell, int>> merged;
    for (const auto& [c, e] : exps_) {
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += e;
        else
            merged.emplace_back(c, e);
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    exps_ = std::move(merged);
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [c, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(const Cell& c) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), c,
                               [](const auto& p, const Cell& x) { return p.first < x; });
    return (it != exps_.end() && it->first == c) ? it->second : 0;
}

bool Monomial::fits(const GridSize& g) const {
    return std::all_of(exps_.begin(), exps_.end(), [&](const auto& p) {
        return p.first.row <= g.rows && p.first.col <= g.cols;
    });
}

Monomial Monomial::times(const Monomial& o) const {
    std::vector<std::pair<Cell, int>> e = exps_;
    e.insert(e.end(), o.exps_.begin(), o.exps_.end());
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [c, e] : exps_)
        if (o.exponent(c) < e) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    if (!divides(o)) throw invalid_input("Monomial: quotient is not a monomial");
    std::vector<std::pair<Cell, int>> e;
    for (const auto& [c, eo] : o.exps()) e.emplace_back(c, eo - exponent(c));
    return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        // Next cell in priority order (ascending) present in either monomial.
        Cell c;
        if (i == exps_.size())
            c = o.exps_[j].first;
        else if (j == o.exps_.size())
            c = exps_[i].first;
        else
            c = std::min(exps_[i].first, o.exps_[j].first);
        int ea = (i < exps_.size() && exps_[i].first == c) ? exps_[i].second : 0;
        int eb = (j < o.exps_.size() && o.exps_[j].first == c) ? o.exps_[j].second : 0;
        if (ea != eb) return ea <=> eb;
        if (i < exps_.size() && exps_[i].first == c) ++i;
        if (j < o.exps_.size() && o.exps_[j].first == c) ++j;
    }
    return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, e] : m.exps()) {
        if (!first) os << '*';
        first = false;
        os << 'X' << c.row << c.col;
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

Multidegree::Multidegree(std::vector<int> row_deg, std::vector<int> col_deg)
    : row_deg_(std::move(row_deg)), col_deg_(std::move(col_deg)) {
    for (int d : row_deg_)
        if (d < 0) throw invalid_input("Multidegree: negative row degree");
    for (int d : col_deg_)
        if (d < 0) throw invalid_input("Multidegree: negative column degree");
}

Multidegree Multidegree::of(const Monomial& m, const GridSize& g) {
    if (!m.fits(g)) throw invalid_input("Multidegree: monomial does not fit the grid");
    std::vector<int> r(g.rows, 0), c(g.cols, 0);
    for (const auto& [cell, e] : m.exps()) {
        r[cell.row - 1] += e;
        c[cell.col - 1] += e;
    }
    return Multidegree(std::move(r), std::move(c));
}

Multidegree Multidegree::of(const Bitableau& b, const GridSize& g) {
    if (!b.fits(g)) throw invalid_input("Multidegree: bitableau does not fit the grid");
    std::vector<int> r(g.rows, 0), c(g.cols, 0);
    for (const Minor& m : b.factors()) {
        for (int x : m.rows()) ++r[x - 1];
        for (int x : m.cols()) ++c[x - 1];
    }
    return Multidegree(std::move(r), std::move(c));
}

int Multidegree::total() const {
    return std::accumulate(row_deg_.begin(), row_deg_.end(), 0);
}

std::string to_string(const Multidegree& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.row_deg().size(); ++i) os << (i ? "," : "") << v.row_deg()[i];
    os << '|';
    for (size_t i = 0; i < v.col_deg().size(); ++i) os << (i ? "," : "") << v.col_deg()[i];
    os << ')';
    return os.str();
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.emplace(m, c);
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
        terms_.erase(it);
    }
    return *this;
}

Polynomial Polynomial::plus(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::minus(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::times(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

const Monomial& Polynomial::initial_monomial() const {
    if (terms_.empty()) throw zero_polynomial_error("initial monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::initial_coef() const {
    if (terms_.empty()) throw zero_polynomial_error("initial coefficient of the zero polynomial");
    return terms_.begin()->second;
}

std::map<Multidegree, Polynomial> Polynomial::split_by_multidegree(const GridSize& g) const {
    std::map<Multidegree, Polynomial> out;
    for (const auto& [m, c] : terms_) out[Multidegree::of(m, g)].add_term(m, c);
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || m.is_one()) {
            os << rational_to_string(a);
            if (!m.is_one()) os << '*';
        }
        if (!m.is_one()) os << to_string(m);
    }
    return os.str();
}

Polynomial expand_minor(const Minor& mi) {
    if (mi.empty()) return Polynomial::one();
    const int t = mi.size();
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial out;
    do {
        int inversions = 0;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<std::pair<Cell, int>> exps;
        for (int i = 0; i < t; ++i)
            exps.push_back({{mi.rows()[i], mi.cols()[perm[i]]}, 1});
        out.add_term(Monomial(std::move(exps)), (inversions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Polynomial expand_bitableau(const Bitableau& b) {
    Polynomial out = Polynomial::one();
    for (const Minor& m : b.factors()) out = out.times(expand_minor(m));
    return out;
}

Monomial diagonal_monomial(const Minor& m) {
    std::vector<std::pair<Cell, int>> exps;
    for (int i = 0; i < m.size(); ++i) exps.push_back({{m.rows()[i], m.cols()[i]}, 1});
    return Monomial(std::move(exps));
}

Monomial diagonal_monomial(const Bitableau& b) {
    Monomial out;
    for (const Minor& m : b.factors()) out = out.times(diagonal_monomial(m));
    return out;
}

std::vector<Monomial> enumerate_monomials(const GridSize& g, TotalDegree c) {
    if (c.degree < 0) throw invalid_input("TotalDegree: degree must be >= 0");
    std::vector<Monomial> out;
    std::vector<std::pair<Cell, int>> exps;
    auto rec = [&](auto&& self, int row, int col, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(exps);
            return;
        }
        if (row > g.rows) return;
        int nrow = col == g.cols ? row + 1 : row;
        int ncol = col == g.cols ? 1 : col + 1;
        for (int e = remaining; e >= 1; --e) {
            exps.push_back({{row, col}, e});
            self(self, nrow, ncol, remaining - e);
            exps.pop_back();
        }
        self(self, nrow, ncol, remaining);
    };
    rec(rec, 1, 1, c.degree);
    std::sort(out.begin(), out.end(), std::greater<Monomial>());
    return out;
}

std::vector<Monomial> enumerate_monomials(const GridSize& g, const Multidegree& v) {
    if (static_cast<int>(v.row_deg().size()) != g.rows ||
        static_cast<int>(v.col_deg().size()) != g.cols)
        throw invalid_input("Multidegree: vector lengths must match the grid");
    std::vector<Monomial> out;
    int rsum = std::accumulate(v.row_deg().begin(), v.row_deg().end(), 0);
    int csum = std::accumulate(v.col_deg().begin(), v.col_deg().end(), 0);
    if (rsum != csum) return out;

    std::vector<int> col_rem = v.col_deg();
    std::vector<std::pair<Cell, int>> exps;
    // Fill the exponent matrix row by row, cell by cell.
    auto rec = [&](auto&& self, int row, int col, int row_rem) -> void {
        if (row > g.rows) {
            out.emplace_back(exps);
            return;
        }
        if (col > g.cols) {
            if (row_rem == 0)
                self(self, row + 1, 1, row + 1 <= g.rows ? v.row_deg()[row] : 0);
            return;
        }
        int emax = std::min(row_rem, col_rem[col - 1]);
        for (int e = emax; e >= 0; --e) {
            if (e > 0) {
                exps.push_back({{row, col}, e});
                col_rem[col - 1] -= e;
            }
            self(self, row, col + 1, row_rem - e);
            if (e > 0) {
                exps.pop_back();
                col_rem[col - 1] += e;
            }
        }
    };
    rec(rec, 1, 1, g.rows >= 1 ? v.row_deg()[0] : 0);
    std::sort(out.begin(), out.end(), std::greater<Monomial>());
    return out;
}

namespace {

// Compositions of total into parts nonnegative entries, ascending lex.
std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == parts - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= rem; ++x) {
            cur[pos] = x;
            self(self, pos + 1, rem - x);
        }
    };
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, total);
    return out;
}

} // namespace

std::vector<Multidegree> enumerate_multidegrees(const GridSize& g, int total) {
    if (total < 0) throw invalid_input("enumerate_multidegrees: negative degree");
    std::vector<Multidegree> out;
    for (const auto& r : compositions(total, g.rows))
        for (const auto& c : compositions(total, g.cols))
            out.emplace_back(r, c);
    return out;
}

} // namespace krstab
