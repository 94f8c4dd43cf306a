#include "krstab/straighten.hpp"

#include <algorithm>

namespace krstab {

Polynomial evaluate(const StandardRep& rep) {
    Polynomial out;
    for (const auto& [b, c] : rep) out = out.plus(expand_bitableau(b).scaled(c));
    return out;
}

const StraightenEngine::Slice& StraightenEngine::slice(const Multidegree& v) {
    return slice_mut(v);
}

StraightenEngine::Slice& StraightenEngine::slice_mut(const Multidegree& v) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(v); it != cache_.end()) return it->second;

    Slice s;
    s.v = v;
    s.basis = enumerate_standard_bitableaux(g_, MultidegreeConstraint{v.row_deg(), v.col_deg()});
    s.monomials = enumerate_monomials(g_, v);
    const int n = static_cast<int>(s.monomials.size());
    if (static_cast<int>(s.basis.size()) != n)
        throw inconsistent_basis_error("slice: basis and monomial counts differ at " +
                                       to_string(v));
    std::map<Monomial, int> index;
    for (int i = 0; i < n; ++i) index.emplace(s.monomials[i], i);
    s.matrix.assign(n, RatRow(n, 0));
    for (int j = 0; j < n; ++j) {
        Polynomial ex = expand_bitableau(s.basis[j]);
        for (const auto& [m, c] : ex.terms()) {
            auto it = index.find(m);
            if (it == index.end())
                throw inconsistent_basis_error("slice: expansion leaves the multidegree at " +
                                               to_string(v));
            s.matrix[it->second][j] = c;
        }
    }
    return cache_.emplace(v, std::move(s)).first->second;
}

void StraightenEngine::ensure_inverse(Slice& s) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (s.inverse.empty() && !s.matrix.empty()) s.inverse = invert(s.matrix);
}

StandardRep StraightenEngine::standard_representation(const Polynomial& f) {
    StandardRep rep;
    for (const auto& [v, comp] : f.split_by_multidegree(g_)) {
        Slice& s = slice_mut(v);
        ensure_inverse(s);
        const int n = static_cast<int>(s.monomials.size());
        std::vector<Rational> b(n, 0);
        for (const auto& [m, c] : comp.terms()) {
            auto it = std::lower_bound(s.monomials.begin(), s.monomials.end(), m,
                                       std::greater<Monomial>());
            b[it - s.monomials.begin()] = c;
        }
        std::vector<Rational> x = mat_vec(s.inverse, b);
        for (int j = 0; j < n; ++j)
            if (x[j] != 0) rep.emplace(s.basis[j], x[j]);
    }
    return rep;
}

StandardRep StraightenEngine::standard_representation(const Bitableau& b) {
    if (!b.fits(g_)) throw invalid_input("standard_representation: bitableau exceeds the grid");
    return standard_representation(expand_bitableau(b));
}

Polynomial StraightenEngine::krs_automorphism(const Polynomial& f) {
    Polynomial out;
    for (const auto& [b, c] : standard_representation(f))
        out.add_term(krs_monomial(b), c);
    return out;
}

StraighteningCheck check_straightening_shape(StraightenEngine& eng, const Bitableau& D) {
    if (!D.fits(eng.grid()))
        throw invalid_input("check_straightening_shape: bitableau exceeds the grid");
    StraighteningCheck out;
    out.rep = eng.standard_representation(D);
    const Shape want = D.shape();
    bool found = false;
    for (const auto& [s, c] : out.rep)
        if (s.shape() == want) found = true;
    if (!found) {
        out.pass = false;
        out.violations.push_back("no term of shape " + to_string(want) + " in the representation of " +
                                 to_string(D));
    }
    return out;
}

namespace {

bool minor_lt(const Minor& a, const Minor& b) { return a != b && minor_leq(a, b); }

} // namespace

StraighteningCheck check_straightening_order(StraightenEngine& eng, const Minor& d1,
                                             const Minor& d2) {
    if (d1.empty() || d2.empty())
        throw invalid_input("check_straightening_order: minors must be non-empty");
    if (!d1.fits(eng.grid()) || !d2.fits(eng.grid()))
        throw invalid_input("check_straightening_order: minors exceed the grid");
    if (minor_leq(d1, d2))
        throw already_standard_error("check_straightening_order: " + to_string(d1) + "*" +
                                     to_string(d2) + " is already standard");
    StraighteningCheck out;
    out.rep = eng.standard_representation(Bitableau({d1, d2}));
    for (const auto& [term, c] : out.rep) {
        const auto& f = term.factors();
        if (f.size() < 1 || f.size() > 2) {
            out.pass = false;
            out.violations.push_back("term " + to_string(term) + " is not a product of <= 2 minors");
            continue;
        }
        const Minor& eps = f[0];
        if (!minor_lt(eps, d1)) {
            out.pass = false;
            out.violations.push_back("term " + to_string(term) + ": " + to_string(eps) +
                                     " is not strictly below " + to_string(d1));
        }
        if (f.size() == 2 && !minor_lt(d2, f[1])) {
            out.pass = false;
            out.violations.push_back("term " + to_string(term) + ": " + to_string(d2) +
                                     " is not strictly below " + to_string(f[1]));
        }
    }
    return out;
}

} // namespace krstab
