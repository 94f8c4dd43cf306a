#include "krstab/krs.hpp"

#include <algorithm>
#include <sstream>

namespace krstab {

TwoRowArray::TwoRowArray(std::vector<int> u, std::vector<int> v)
    : u_(std::move(u)), v_(std::move(v)) {
    if (u_.size() != v_.size())
        throw not_canonical_error("TwoRowArray: rows must have equal length");
    for (size_t i = 0; i < u_.size(); ++i) {
        if (u_[i] < 1 || v_[i] < 1)
            throw not_canonical_error("TwoRowArray: entries must be >= 1");
        if (i > 0) {
            if (u_[i] < u_[i - 1])
                throw not_canonical_error("TwoRowArray: top row must be non-decreasing");
            if (u_[i] == u_[i - 1] && v_[i] > v_[i - 1])
                throw not_canonical_error(
                    "TwoRowArray: bottom row must be non-increasing under equal top entries");
        }
    }
}

TwoRowArray TwoRowArray::from_pairs(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    std::vector<int> u, v;
    u.reserve(pairs.size());
    v.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        u.push_back(a);
        v.push_back(b);
    }
    return TwoRowArray(std::move(u), std::move(v));
}

std::string to_string(const TwoRowArray& a) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < a.size(); ++i) os << (i ? "," : "") << a.u()[i];
    os << " | ";
    for (int i = 0; i < a.size(); ++i) os << (i ? "," : "") << a.v()[i];
    os << ')';
    return os.str();
}

Monomial monomial_of(const TwoRowArray& a) {
    std::vector<std::pair<Cell, int>> exps;
    for (int i = 0; i < a.size(); ++i) exps.push_back({{a.u()[i], a.v()[i]}, 1});
    return Monomial(std::move(exps));
}

TwoRowArray monomial_to_array(const Monomial& m) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [c, e] : m.exps())
        for (int k = 0; k < e; ++k) pairs.emplace_back(c.row, c.col);
    return TwoRowArray::from_pairs(std::move(pairs));
}

TwoRowArray array_transpose(const TwoRowArray& a) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a.size(); ++i) pairs.emplace_back(a.v()[i], a.u()[i]);
    return TwoRowArray::from_pairs(std::move(pairs));
}

namespace {

// Row lists of the left and right tableaux; row i of each has equal length,
// all rows strictly increasing, lengths weakly decreasing downwards.
struct TabPair {
    std::vector<std::vector<int>> left;
    std::vector<std::vector<int>> right;
};

TabPair to_tab_pair(const Bitableau& b) {
    if (!is_standard(b)) throw not_standard_error("krs: bitableau is not standard");
    TabPair t;
    for (const Minor& m : b.factors()) {
        t.left.push_back(m.rows());
        t.right.push_back(m.cols());
    }
    return t;
}

Bitableau from_tab_pair(const TabPair& t) {
    std::vector<Minor> factors;
    for (size_t i = 0; i < t.left.size(); ++i) factors.emplace_back(t.left[i], t.right[i]);
    return Bitableau(std::move(factors));
}

// Deletion on the row lists; returns the output pair (ell, r).
std::pair<int, int> delete_once(TabPair& t) {
    int ell = 0;
    size_t p = 0;
    for (size_t i = 0; i < t.left.size(); ++i) {
        // Rows are strictly increasing, so the row maximum sits at the back.
        if (t.left[i].back() >= ell) {
            ell = t.left[i].back();
            p = i; // keep scanning: the pivot is the bottom-most occurrence
        }
    }
    t.left[p].pop_back();
    int s = t.right[p].back();
    t.right[p].pop_back();
    if (t.left[p].empty()) {
        t.left.erase(t.left.begin() + p);
        t.right.erase(t.right.begin() + p);
    }
    while (p > 0) {
        // Move s one row up, pushing out the right-most entry <= s.
        std::vector<int>& row = t.right[p - 1];
        auto it = std::upper_bound(row.begin(), row.end(), s);
        // A smaller entry exists: row start b_{p-1,1} <= ... holds by the
        // standardness of the column pairs above the pivot.
        --it;
        std::swap(*it, s);
        --p;
    }
    return {ell, s};
}

void insert_once(TabPair& t, int ell, int r) {
    int z = r;
    size_t row = 0;
    while (true) {
        if (row == t.right.size()) {
            t.left.push_back({ell});
            t.right.push_back({z});
            return;
        }
        auto it = std::lower_bound(t.right[row].begin(), t.right[row].end(), z);
        if (it == t.right[row].end()) {
            t.right[row].push_back(z);
            t.left[row].push_back(ell);
            return;
        }
        std::swap(*it, z);
        ++row;
    }
}

} // namespace

DeletionStep krs_delete_step(const Bitableau& b) {
    if (b.empty()) throw invalid_input("krs_delete_step: empty bitableau");
    TabPair t = to_tab_pair(b);
    auto [ell, r] = delete_once(t);
    return {ell, r, from_tab_pair(t)};
}

TwoRowArray krs_forward(const Bitableau& b) {
    TabPair t = to_tab_pair(b);
    std::vector<int> u, v;
    while (!t.left.empty()) {
        auto [ell, r] = delete_once(t);
        u.push_back(ell);
        v.push_back(r);
    }
    std::reverse(u.begin(), u.end());
    std::reverse(v.begin(), v.end());
    try {
        return TwoRowArray(std::move(u), std::move(v));
    } catch (const not_canonical_error&) {
        throw std::logic_error("krs_forward: deletion produced a non-canonical array");
    }
}

Bitableau krs_inverse(const TwoRowArray& a) {
    TabPair t;
    for (int i = 0; i < a.size(); ++i) insert_once(t, a.u()[i], a.v()[i]);
    Bitableau b = from_tab_pair(t);
    if (!is_standard(b))
        throw std::logic_error("krs_inverse: insertion produced a non-standard bitableau");
    return b;
}

Monomial krs_monomial(const Bitableau& b) { return monomial_of(krs_forward(b)); }

Shape krs_shape(const TwoRowArray& a) { return krs_inverse(a).shape(); }

} // namespace krstab
