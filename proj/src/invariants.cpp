#include "krstab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace krstab {

int lis(const IntSequence& b) {
    std::vector<int> tails;
    for (int x : b) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

namespace {

// Minimum number of strictly increasing subsequences covering the whole
// sequence: greedy tight-fit cover (optimal by the usual exchange argument).
int min_increasing_cover(const IntSequence& b) {
    std::multiset<int> tops;
    for (int x : b) {
        auto it = tops.lower_bound(x);
        if (it == tops.begin()) {
            tops.insert(x);
        } else {
            --it;
            tops.erase(it);
            tops.insert(x);
        }
    }
    return static_cast<int>(tops.size());
}

void require_positive(const IntSequence& b, const char* what) {
    for (int x : b)
        if (x < 1) throw invalid_input(std::string(what) + ": entries must be >= 1");
}

TwoRowArray sequence_array(const IntSequence& b) {
    std::vector<int> u(b.size());
    for (size_t i = 0; i < b.size(); ++i) u[i] = static_cast<int>(i) + 1;
    return TwoRowArray(std::move(u), b);
}

template <class Feasible>
long long max_feasible_subset(const IntSequence& b, Feasible feasible) {
    const int n = static_cast<int>(b.size());
    long long best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        IntSequence sub;
        sub.reserve(size);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(b[i]);
        if (feasible(sub)) best = size;
    }
    return best;
}

} // namespace

long long greene_alpha(int k, const IntSequence& b, GreeneMode mode) {
    if (k < 1) throw invalid_input("greene_alpha: k must be >= 1");
    require_positive(b, "greene_alpha");
    if (mode == GreeneMode::ViaRSK)
        return shape_alpha(krs_shape(sequence_array(b)), k);
    return max_feasible_subset(
        b, [&](const IntSequence& sub) { return min_increasing_cover(sub) <= k; });
}

long long greene_alpha_dual(int k, const IntSequence& b) {
    if (k < 1) throw invalid_input("greene_alpha_dual: k must be >= 1");
    require_positive(b, "greene_alpha_dual");
    // Coverable by k non-increasing subsequences iff no strictly increasing
    // subsequence longer than k.
    return max_feasible_subset(b, [&](const IntSequence& sub) { return lis(sub) <= k; });
}

long long gamma_t(int t, const Shape& s) { return shape_gamma(s, t); }

long long gamma_t(int t, const Bitableau& b) { return shape_gamma(b.shape(), t); }

long long gamma_t(int t, const IntSequence& b) {
    if (t < 1) throw invalid_input("gamma_t: t must be >= 1");
    require_positive(b, "gamma_t");
    return shape_gamma(krs_shape(sequence_array(b)), t);
}

long long gamma_t(int t, const Monomial& m) {
    if (t < 1) throw invalid_input("gamma_t: t must be >= 1");
    TwoRowArray a = monomial_to_array(m);

    static std::map<std::tuple<int, std::vector<int>, std::vector<int>>, long long> memo;
    static std::mutex memo_mutex;
    const auto key = std::make_tuple(t, a.u(), a.v());
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    long long best = 0;
    for_each_inc_decomposition(a, [&](const std::vector<Minor>& blocks) {
        long long g = 0;
        for (const Minor& bl : blocks)
            if (bl.size() >= t) g += bl.size() - t + 1;
        best = std::max(best, g);
    });
    memo.emplace(key, best);
    return best;
}

long long w_t(int t, const IntSequence& b) {
    if (t < 1) throw invalid_input("w_t: t must be >= 1");
    require_positive(b, "w_t");
    return max_feasible_subset(b, [&](const IntSequence& sub) { return lis(sub) < t; });
}

long long w_t(int t, const Monomial& m) {
    // Cell chains of a canonical array are exactly the strictly increasing
    // v-subsequences, so the sequence form applies to the lower row.
    return w_t(t, monomial_to_array(m).v());
}

long long gamma_delta(const Minor& delta, const Minor& mu) {
    if (delta.empty()) throw invalid_input("gamma_delta: delta must be non-empty");
    const int r = delta.size();
    const int k = mu.size();
    long long best = 0;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= r + 1; ++j) {
            bool cond = j > r || mu.rows()[i - 1] < delta.rows()[j - 1] ||
                        mu.cols()[i - 1] < delta.cols()[j - 1];
            if (cond && i - j + 1 > best) best = i - j + 1;
        }
    }
    return best;
}

long long gamma_delta(const Minor& delta, const Bitableau& b) {
    long long g = 0;
    for (const Minor& m : b.factors()) g += gamma_delta(delta, m);
    return g;
}

long long gamma_delta(const Minor& delta, const Monomial& m) {
    if (delta.empty()) throw invalid_input("gamma_delta: delta must be non-empty");
    TwoRowArray a = monomial_to_array(m);

    static std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>,
                               std::vector<int>>,
                    long long>
        memo;
    static std::mutex memo_mutex;
    const auto key = std::make_tuple(delta.rows(), delta.cols(), a.u(), a.v());
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    long long best = 0;
    for_each_inc_decomposition(a, [&](const std::vector<Minor>& blocks) {
        long long g = 0;
        for (const Minor& bl : blocks) g += gamma_delta(delta, bl);
        best = std::max(best, g);
    });
    memo.emplace(key, best);
    return best;
}

void for_each_inc_decomposition(const TwoRowArray& a,
                                const std::function<void(const std::vector<Minor>&)>& f) {
    const int n = a.size();
    std::vector<std::vector<int>> blocks;
    std::vector<int> last_v;
    auto emit = [&]() {
        std::vector<Minor> minors;
        minors.reserve(blocks.size());
        for (const auto& bl : blocks) {
            std::vector<int> rows, cols;
            for (int i : bl) {
                rows.push_back(a.u()[i]);
                cols.push_back(a.v()[i]);
            }
            minors.emplace_back(std::move(rows), std::move(cols));
        }
        f(minors);
    };
    // Restricted-growth enumeration: index i joins an existing block whose
    // last v-value is smaller, or opens a new block.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (size_t j = 0; j < blocks.size(); ++j) {
            if (last_v[j] < a.v()[i]) {
                int saved = last_v[j];
                blocks[j].push_back(i);
                last_v[j] = a.v()[i];
                self(self, i + 1);
                blocks[j].pop_back();
                last_v[j] = saved;
            }
        }
        blocks.push_back({i});
        last_v.push_back(a.v()[i]);
        self(self, i + 1);
        blocks.pop_back();
        last_v.pop_back();
    };
    rec(rec, 0);
}

std::vector<std::pair<IncDecomposition, Bitableau>> inc_decompositions(const TwoRowArray& a) {
    std::vector<std::pair<IncDecomposition, Bitableau>> out;
    const int n = a.size();
    std::vector<std::vector<int>> blocks;
    std::vector<int> last_v;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            std::vector<Minor> minors;
            for (const auto& bl : blocks) {
                std::vector<int> rows, cols;
                for (int x : bl) {
                    rows.push_back(a.u()[x]);
                    cols.push_back(a.v()[x]);
                }
                minors.emplace_back(std::move(rows), std::move(cols));
            }
            out.emplace_back(IncDecomposition{blocks}, Bitableau(std::move(minors)));
            return;
        }
        for (size_t j = 0; j < blocks.size(); ++j) {
            if (last_v[j] < a.v()[i]) {
                int saved = last_v[j];
                blocks[j].push_back(i);
                last_v[j] = a.v()[i];
                self(self, i + 1);
                blocks[j].pop_back();
                last_v[j] = saved;
            }
        }
        blocks.push_back({i});
        last_v.push_back(a.v()[i]);
        self(self, i + 1);
        blocks.pop_back();
        last_v.pop_back();
    };
    rec(rec, 0);
    return out;
}

} // namespace krstab
