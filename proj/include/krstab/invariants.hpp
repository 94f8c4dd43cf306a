#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "krstab/krs.hpp"
#include "krstab/polyring.hpp"
#include "krstab/tableaux.hpp"

namespace krstab {

using IntSequence = std::vector<int>;

// Length of the longest strictly increasing subsequence.
int lis(const IntSequence& b);

enum class GreeneMode { BruteForce, ViaRSK };

// Max length of a subsequence of b decomposable into k strictly increasing
// subsequences. BruteForce enumerates index subsets with a patience-style
// cover check; ViaRSK sums the first k row lengths of the insertion shape.
long long greene_alpha(int k, const IntSequence& b, GreeneMode mode);

// Max length of a subsequence decomposable into k non-increasing
// subsequences (strictly decreasing when entries are distinct).
long long greene_alpha_dual(int k, const IntSequence& b);

// gamma_t on shapes, bitableaux (their shape), sequences (their insertion
// shape), and monomials (max over inc-decompositions).
long long gamma_t(int t, const Shape& s);
long long gamma_t(int t, const Bitableau& b);
long long gamma_t(int t, const IntSequence& b);
long long gamma_t(int t, const Monomial& m);

// Longest subsequence without a strictly increasing subsequence of length t;
// on monomials, largest sub-multiset of cells without a t-diagonal chain.
long long w_t(int t, const IntSequence& b);
long long w_t(int t, const Monomial& m);

// gamma_delta of a single minor per the cogenerated-ideal formula, of a
// bitableau (sum over factors), and of a monomial (max over decompositions).
long long gamma_delta(const Minor& delta, const Minor& mu);
long long gamma_delta(const Minor& delta, const Bitableau& b);
long long gamma_delta(const Minor& delta, const Monomial& m);

// Partition of the index set of a canonical array; each block's v-values
// strictly increase (hence also the u-values, by canonicity).
struct IncDecomposition {
    std::vector<std::vector<int>> blocks;
};

// All inc-decompositions paired with their bitableaux (block minors, sizes
// descending). Deterministic order, no duplicates.
std::vector<std::pair<IncDecomposition, Bitableau>> inc_decompositions(const TwoRowArray& a);

// Visitor over the block minors of every inc-decomposition.
void for_each_inc_decomposition(const TwoRowArray& a,
                                const std::function<void(const std::vector<Minor>&)>& f);

} // namespace krstab
