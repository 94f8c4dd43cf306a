#include "krstab/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace krstab {

namespace {

void require_index_vector(const std::vector<int>& v, const char* what) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) throw invalid_input(std::string(what) + ": indices must be >= 1");
        if (i > 0 && v[i] <= v[i - 1])
            throw invalid_input(std::string(what) + ": indices must be strictly increasing");
    }
}

bool leq_raw(const Minor& a, const Minor& b) {
    if (a.size() < b.size()) return false;
    for (int i = 0; i < b.size(); ++i)
        if (a.rows()[i] > b.rows()[i] || a.cols()[i] > b.cols()[i]) return false;
    return true;
}

} // namespace

Minor::Minor(std::vector<int> rows, std::vector<int> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
    if (rows_.size() != cols_.size())
        throw invalid_input("Minor: row and column lists must have equal length");
    require_index_vector(rows_, "Minor rows");
    require_index_vector(cols_, "Minor cols");
}

bool Minor::fits(const GridSize& g) const {
    if (empty()) return true;
    return rows_.back() <= g.rows && cols_.back() <= g.cols;
}

std::strong_ordering Minor::operator<=>(const Minor& o) const {
    if (auto c = o.size() <=> size(); c != 0) return c;
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    return cols_ <=> o.cols_;
}

MinorOrder compare_minors(const Minor& a, const Minor& b) {
    const bool ab = leq_raw(a, b);
    const bool ba = leq_raw(b, a);
    if (ab && ba) return MinorOrder::Equal;
    if (ab) return MinorOrder::LessEq;
    if (ba) return MinorOrder::GreaterEq;
    return MinorOrder::Incomparable;
}

bool minor_leq(const Minor& a, const Minor& b) { return leq_raw(a, b); }

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw invalid_input("Shape: parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw invalid_input("Shape: parts must be weakly decreasing");
    }
}

int Shape::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Shape Shape::conjugate() const {
    std::vector<int> conj;
    for (int k = 1; parts_.empty() ? false : k <= parts_[0]; ++k) {
        int count = 0;
        for (int p : parts_)
            if (p >= k) ++count;
        conj.push_back(count);
    }
    return Shape(std::move(conj));
}

long long shape_gamma(const Shape& s, int t) {
    if (t < 1) throw invalid_input("shape_gamma: t must be >= 1");
    long long g = 0;
    for (int p : s.parts())
        if (p >= t) g += p - t + 1;
    return g;
}

long long shape_alpha(const Shape& s, int k) {
    if (k < 0) throw invalid_input("shape_alpha: k must be >= 0");
    long long a = 0;
    for (int i = 0; i < k && i < s.rows(); ++i) a += s.parts()[i];
    return a;
}

bool shape_leq(const Shape& s, const Shape& t, ShapeOrderMode mode) {
    if (mode == ShapeOrderMode::GammaOrder) {
        int umax = std::max(s.rows() ? s.parts()[0] : 0, t.rows() ? t.parts()[0] : 0);
        for (int u = 1; u <= umax; ++u)
            if (shape_gamma(t, u) < shape_gamma(s, u)) return false;
        return true;
    }
    for (int k = 0; k < s.rows(); ++k) {
        int tk = k < t.rows() ? t.parts()[k] : 0;
        if (tk < s.parts()[k]) return false;
    }
    return true;
}

Bitableau::Bitableau(std::vector<Minor> factors) : factors_(std::move(factors)) {
    std::erase_if(factors_, [](const Minor& m) { return m.empty(); });
    std::sort(factors_.begin(), factors_.end());
}

int Bitableau::degree() const {
    int d = 0;
    for (const Minor& m : factors_) d += m.size();
    return d;
}

Shape Bitableau::shape() const {
    std::vector<int> parts;
    parts.reserve(factors_.size());
    for (const Minor& m : factors_) parts.push_back(m.size());
    return Shape(std::move(parts));
}

bool Bitableau::fits(const GridSize& g) const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](const Minor& m) { return m.fits(g); });
}

Bitableau Bitableau::transposed() const {
    std::vector<Minor> t;
    t.reserve(factors_.size());
    for (const Minor& m : factors_) t.push_back(m.transposed());
    return Bitableau(std::move(t));
}

Bitableau Bitableau::times(const Minor& m) const {
    std::vector<Minor> f = factors_;
    f.push_back(m);
    return Bitableau(std::move(f));
}

Bitableau Bitableau::times(const Bitableau& o) const {
    std::vector<Minor> f = factors_;
    f.insert(f.end(), o.factors_.begin(), o.factors_.end());
    return Bitableau(std::move(f));
}

std::strong_ordering Bitableau::operator<=>(const Bitableau& o) const {
    if (auto c = shape() <=> o.shape(); c != 0) return c;
    auto concat = [](const Bitableau& b, bool rows) {
        std::vector<int> v;
        for (const Minor& m : b.factors())
            for (int x : rows ? m.rows() : m.cols()) v.push_back(x);
        return v;
    };
    if (auto c = concat(*this, true) <=> concat(o, true); c != 0) return c;
    return concat(*this, false) <=> concat(o, false);
}

bool is_standard(const Bitableau& b) {
    for (int i = 0; i + 1 < b.width(); ++i)
        if (!minor_leq(b.factors()[i], b.factors()[i + 1])) return false;
    return true;
}

std::string to_string(const Minor& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m.size(); ++i) os << (i ? "," : "") << m.rows()[i];
    os << '|';
    for (int i = 0; i < m.size(); ++i) os << (i ? "," : "") << m.cols()[i];
    os << ']';
    return os.str();
}

std::string to_string(const Shape& s) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < s.rows(); ++i) os << (i ? "," : "") << s.parts()[i];
    os << ')';
    return os.str();
}

std::string to_string(const Bitableau& b) {
    if (b.empty()) return "1";
    std::string out;
    for (const Minor& m : b.factors()) out += to_string(m);
    return out;
}

namespace {

void combinations(int n, int t, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> c(t);
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == t) {
            f(c);
            return;
        }
        for (int x = next; x <= n - (t - pos - 1); ++x) {
            c[pos] = x;
            self(self, pos + 1, x + 1);
        }
    };
    rec(rec, 0, 1);
}

} // namespace

std::vector<Minor> enumerate_minors(const GridSize& g, int t) {
    if (t < 1 || t > std::min(g.rows, g.cols)) return {};
    std::vector<Minor> out;
    combinations(g.rows, t, [&](const std::vector<int>& rows) {
        combinations(g.cols, t, [&](const std::vector<int>& cols) {
            out.emplace_back(rows, cols);
        });
    });
    return out;
}

std::vector<Minor> enumerate_all_minors(const GridSize& g) {
    std::vector<Minor> out;
    for (int t = std::min(g.rows, g.cols); t >= 1; --t) {
        auto group = enumerate_minors(g, t);
        out.insert(out.end(), group.begin(), group.end());
    }
    return out;
}

namespace {

// Grouped chain search shared by the three enumeration entry points. The
// chain grows with weakly decreasing sizes and consecutive factors related
// by the minor order, so every prefix is itself standard.
struct ChainSearch {
    std::vector<std::vector<Minor>> by_size;
    std::vector<Minor> chain;
    std::vector<Bitableau> out;

    explicit ChainSearch(const GridSize& g) {
        int tmax = std::min(g.rows, g.cols);
        by_size.resize(tmax + 1);
        for (int t = 1; t <= tmax; ++t) by_size[t] = enumerate_minors(g, t);
    }

    int max_size() const { return static_cast<int>(by_size.size()) - 1; }

    bool extends_chain(const Minor& m) const {
        return chain.empty() || minor_leq(chain.back(), m);
    }

    void emit() { out.emplace_back(chain); }

    std::vector<Bitableau> finish() {
        std::sort(out.begin(), out.end());
        return std::move(out);
    }
};

} // namespace

std::vector<Bitableau> enumerate_standard_bitableaux(const GridSize& g, TotalDegree c) {
    if (c.degree < 0) throw invalid_input("TotalDegree: degree must be >= 0");
    ChainSearch s(g);
    auto dfs = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            s.emit();
            return;
        }
        int smax = s.chain.empty() ? s.max_size() : s.chain.back().size();
        for (int sz = std::min(smax, remaining); sz >= 1; --sz) {
            for (const Minor& m : s.by_size[sz]) {
                if (!s.extends_chain(m)) continue;
                s.chain.push_back(m);
                self(self, remaining - sz);
                s.chain.pop_back();
            }
        }
    };
    dfs(dfs, c.degree);
    return s.finish();
}

std::vector<Bitableau> enumerate_standard_bitableaux(const GridSize& g, const Shape& c) {
    if (c.rows() > 0 && c.parts()[0] > std::min(g.rows, g.cols)) return {};
    ChainSearch s(g);
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == c.rows()) {
            s.emit();
            return;
        }
        for (const Minor& m : s.by_size[c.parts()[depth]]) {
            if (!s.extends_chain(m)) continue;
            s.chain.push_back(m);
            self(self, depth + 1);
            s.chain.pop_back();
        }
    };
    dfs(dfs, 0);
    return s.finish();
}

std::vector<Bitableau> enumerate_standard_bitableaux(const GridSize& g,
                                                     const MultidegreeConstraint& c) {
    if (static_cast<int>(c.row_deg.size()) != g.rows ||
        static_cast<int>(c.col_deg.size()) != g.cols)
        throw invalid_input("MultidegreeConstraint: vector lengths must match the grid");
    for (int d : c.row_deg)
        if (d < 0) throw invalid_input("MultidegreeConstraint: degrees must be >= 0");
    for (int d : c.col_deg)
        if (d < 0) throw invalid_input("MultidegreeConstraint: degrees must be >= 0");
    int rsum = std::accumulate(c.row_deg.begin(), c.row_deg.end(), 0);
    int csum = std::accumulate(c.col_deg.begin(), c.col_deg.end(), 0);
    if (rsum != csum) return {};

    ChainSearch s(g);
    std::vector<int> row_rem = c.row_deg, col_rem = c.col_deg;
    auto usable = [&](const Minor& m) {
        for (int r : m.rows())
            if (row_rem[r - 1] == 0) return false;
        for (int cc : m.cols())
            if (col_rem[cc - 1] == 0) return false;
        return true;
    };
    auto apply = [&](const Minor& m, int delta) {
        for (int r : m.rows()) row_rem[r - 1] += delta;
        for (int cc : m.cols()) col_rem[cc - 1] += delta;
    };
    auto dfs = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            s.emit();
            return;
        }
        int smax = s.chain.empty() ? s.max_size() : s.chain.back().size();
        for (int sz = std::min(smax, remaining); sz >= 1; --sz) {
            for (const Minor& m : s.by_size[sz]) {
                if (!s.extends_chain(m) || !usable(m)) continue;
                apply(m, -1);
                s.chain.push_back(m);
                self(self, remaining - sz);
                s.chain.pop_back();
                apply(m, +1);
            }
        }
    };
    dfs(dfs, rsum);
    return s.finish();
}

} // namespace krstab
