#include "krstab/ideals.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace krstab {

namespace {

void require_t(const GridSize& g, int t) {
    if (t < 1 || t > std::min(g.rows, g.cols))
        throw invalid_input("IdealFamily: t = " + std::to_string(t) + " out of range");
}

} // namespace

IdealFamily IdealFamily::It(GridSize g, int t) {
    require_t(g, t);
    IdealFamily f;
    f.kind_ = Kind::It;
    f.g_ = g;
    f.t_ = t;
    return f;
}

IdealFamily IdealFamily::ItSymbolic(GridSize g, int t, long long k) {
    require_t(g, t);
    if (k < 1) throw invalid_input("IdealFamily: symbolic exponent must be >= 1");
    IdealFamily f;
    f.kind_ = Kind::ItSymbolic;
    f.g_ = g;
    f.t_ = t;
    f.k_ = k;
    return f;
}

IdealFamily IdealFamily::Jkd(GridSize g, int k, long long d) {
    if (k < 1) throw invalid_input("IdealFamily: cover count must be >= 1");
    if (d < 1) throw invalid_input("IdealFamily: degree bound must be >= 1");
    IdealFamily f;
    f.kind_ = Kind::Jkd;
    f.g_ = g;
    f.t_ = k; // cover count
    f.k_ = d; // alpha bound
    return f;
}

IdealFamily IdealFamily::IShape(GridSize g, Shape sigma) {
    if (sigma.rows() == 0) throw invalid_input("IdealFamily: shape must be non-empty");
    if (sigma.parts()[0] > std::min(g.rows, g.cols))
        throw invalid_input("IdealFamily: shape part exceeds the grid");
    IdealFamily f;
    f.kind_ = Kind::IShape;
    f.g_ = g;
    f.shape_ = std::move(sigma);
    return f;
}

IdealFamily IdealFamily::ProductOfIt(GridSize g, std::vector<int> ts) {
    if (ts.empty()) throw invalid_input("IdealFamily: empty factor list");
    for (int t : ts) require_t(g, t);
    std::sort(ts.begin(), ts.end(), std::greater<int>());
    IdealFamily f;
    f.kind_ = Kind::ProductOfIt;
    f.g_ = g;
    f.ts_ = std::move(ts);
    return f;
}

IdealFamily IdealFamily::Cogenerated(GridSize g, Minor delta) {
    if (delta.empty()) throw invalid_input("IdealFamily: cogenerating minor must be non-empty");
    if (!delta.fits(g)) throw invalid_input("IdealFamily: cogenerating minor exceeds the grid");
    IdealFamily f;
    f.kind_ = Kind::Cogenerated;
    f.g_ = g;
    f.delta_ = std::move(delta);
    return f;
}

IdealFamily IdealFamily::JDeltaK(GridSize g, Minor delta, long long k) {
    if (delta.empty()) throw invalid_input("IdealFamily: minor must be non-empty");
    if (!delta.fits(g)) throw invalid_input("IdealFamily: minor exceeds the grid");
    if (k < 1) throw invalid_input("IdealFamily: gamma bound must be >= 1");
    IdealFamily f;
    f.kind_ = Kind::JDeltaK;
    f.g_ = g;
    f.delta_ = std::move(delta);
    f.k_ = k;
    return f;
}

IdealFamily IdealFamily::Sum(std::vector<IdealFamily> members) {
    if (members.empty()) throw invalid_input("IdealFamily: empty member list");
    for (const auto& m : members)
        if (!(m.grid() == members[0].grid()))
            throw invalid_input("IdealFamily: members on different grids");
    IdealFamily f;
    f.kind_ = Kind::Sum;
    f.g_ = members[0].grid();
    f.members_ = std::move(members);
    return f;
}

IdealFamily IdealFamily::Intersection(std::vector<IdealFamily> members) {
    IdealFamily f = Sum(std::move(members));
    f.kind_ = Kind::Intersection;
    return f;
}

std::string IdealFamily::name() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::It: os << "It(" << t_ << ")"; break;
    case Kind::ItSymbolic: os << "ItSymbolic(" << t_ << "," << k_ << ")"; break;
    case Kind::Jkd: os << "Jkd(" << t_ << "," << k_ << ")"; break;
    case Kind::IShape: os << "IShape" << to_string(shape_); break;
    case Kind::ProductOfIt: {
        os << "ProductOfIt(";
        for (size_t i = 0; i < ts_.size(); ++i) os << (i ? "," : "") << ts_[i];
        os << ")";
        break;
    }
    case Kind::Cogenerated: os << "Cogenerated(" << to_string(delta_) << ")"; break;
    case Kind::JDeltaK: os << "JDeltaK(" << to_string(delta_) << "," << k_ << ")"; break;
    case Kind::Sum:
    case Kind::Intersection: {
        os << (kind_ == Kind::Sum ? "Sum(" : "Intersection(");
        for (size_t i = 0; i < members_.size(); ++i) os << (i ? ", " : "") << members_[i].name();
        os << ")";
        break;
    }
    }
    return os.str();
}

bool IdealFamily::contains(const Bitableau& sigma) const {
    if (!is_standard(sigma))
        throw not_standard_error("contains: " + to_string(sigma) + " is not standard");
    return contains_product(sigma);
}

bool IdealFamily::contains_product(const Bitableau& delta) const {
    switch (kind_) {
    case Kind::It:
        return gamma_t(t_, delta) >= 1;
    case Kind::ItSymbolic:
        return gamma_t(t_, delta) >= k_;
    case Kind::Jkd:
        return shape_alpha(delta.shape(), t_) >= k_;
    case Kind::IShape: {
        for (int t = 1; t <= shape_.parts()[0]; ++t)
            if (gamma_t(t, delta) < shape_gamma(shape_, t)) return false;
        return true;
    }
    case Kind::ProductOfIt: {
        Shape s(ts_);
        for (int j = 1; j <= ts_[0]; ++j)
            if (gamma_t(j, delta) < shape_gamma(s, j)) return false;
        return true;
    }
    case Kind::Cogenerated: {
        for (const Minor& f : delta.factors())
            if (!minor_leq(delta_, f)) return true;
        return false;
    }
    case Kind::JDeltaK:
        return gamma_delta(delta_, delta) >= k_;
    case Kind::Sum: {
        for (const auto& m : members_)
            if (m.contains_product(delta)) return true;
        return false;
    }
    case Kind::Intersection: {
        for (const auto& m : members_)
            if (!m.contains_product(delta)) return false;
        return true;
    }
    }
    return false;
}

SliceBasis slice_of(const IdealFamily& fam, const Multidegree& v, StraightenEngine& eng) {
    if (!(fam.grid() == eng.grid()))
        throw invalid_input("slice_of: family and engine grids differ");
    SliceBasis out;
    out.multidegree = v;

    // Cheap pre-pass: skip the expansion matrix when no basis element passes.
    auto basis =
        enumerate_standard_bitableaux(eng.grid(), MultidegreeConstraint{v.row_deg(), v.col_deg()});
    std::vector<int> cols;
    for (int j = 0; j < static_cast<int>(basis.size()); ++j)
        if (fam.contains(basis[j])) {
            cols.push_back(j);
            out.standard_basis.push_back(basis[j]);
        }
    if (cols.empty()) return out;

    const StraightenEngine::Slice& s = eng.slice(v);
    out.slice_monomials = s.monomials;
    const int n = static_cast<int>(s.monomials.size());
    out.echelon.reserve(cols.size());
    for (int j : cols) {
        RatRow row(n);
        for (int i = 0; i < n; ++i) row[i] = s.matrix[i][j];
        out.echelon.push_back(std::move(row));
    }
    std::vector<int> pivots = rref(out.echelon);
    if (pivots.size() != cols.size())
        throw inconsistent_basis_error("slice_of: echelon rank " + std::to_string(pivots.size()) +
                                       " != basis size " + std::to_string(cols.size()) + " at " +
                                       to_string(v));
    for (int p : pivots) out.initial_monomials.push_back(s.monomials[p]);
    return out;
}

bool membership(const Polynomial& f, const IdealFamily& fam, StraightenEngine& eng) {
    for (const auto& [b, c] : eng.standard_representation(f))
        if (!fam.contains(b)) return false;
    return true;
}

InKRSResult check_in_krs(const IdealFamily& fam, int degree_bound, StraightenEngine& eng) {
    InKRSResult out;
    for (int d = 0; d <= degree_bound; ++d) {
        for (const Multidegree& v : enumerate_multidegrees(eng.grid(), d)) {
            ++out.slices_checked;
            SliceBasis sb = slice_of(fam, v, eng);
            std::set<Monomial> krs;
            for (const Bitableau& b : sb.standard_basis) krs.insert(krs_monomial(b));
            std::set<Monomial> ini(sb.initial_monomials.begin(), sb.initial_monomials.end());
            if (krs == ini) continue;
            InKRSSlice bad;
            bad.v = v;
            bad.pass = false;
            std::set_difference(krs.begin(), krs.end(), ini.begin(), ini.end(),
                                std::back_inserter(bad.krs_only));
            std::set_difference(ini.begin(), ini.end(), krs.begin(), krs.end(),
                                std::back_inserter(bad.ini_only));
            out.slices.push_back(std::move(bad));
            out.pass = false;
        }
    }
    return out;
}

std::optional<Bitableau> gkrs_witness(const IdealFamily& fam, const Monomial& m,
                                      StraightenEngine* eng, ProductMembership mode) {
    if (mode == ProductMembership::ExactRep && eng == nullptr)
        throw invalid_input("gkrs_witness: exact mode needs an engine");
    for (const auto& [dec, b] : inc_decompositions(monomial_to_array(m))) {
        bool in = mode == ProductMembership::FamilyPredicate
                      ? fam.contains_product(b)
                      : membership(expand_bitableau(b), fam, *eng);
        if (in) return b;
    }
    return std::nullopt;
}

GKRSResult check_gkrs(const IdealFamily& fam, int degree_bound, StraightenEngine& eng,
                      ProductMembership mode) {
    GKRSResult out;
    for (int d = 0; d <= degree_bound; ++d) {
        for (const Bitableau& s : enumerate_standard_bitableaux(eng.grid(), TotalDegree{d})) {
            if (!fam.contains(s)) continue;
            ++out.checked;
            Monomial m = krs_monomial(s);
            if (!gkrs_witness(fam, m, &eng, mode)) {
                out.pass = false;
                out.failures.push_back({s, m});
            }
        }
    }
    return out;
}

bool facet_contains(const Facet& f, const Cell& c) {
    return std::binary_search(f.cells.begin(), f.cells.end(), c);
}

namespace {

struct FacetSearch {
    std::vector<Cell> cells;
    int t = 1;
    long long budget = 0;
    long long nodes = 0;
    std::vector<Cell> included;
    std::vector<int> up_len; // longest chain ending at included[i]
    std::vector<char> in_set;
    std::vector<Facet> out;

    int longest_ending_at(const Cell& c) const {
        int best = 1;
        for (size_t i = 0; i < included.size(); ++i)
            if (included[i].row < c.row && included[i].col < c.col)
                best = std::max(best, up_len[i] + 1);
        return best;
    }

    bool maximal() const {
        const int w = static_cast<int>(included.size());
        std::vector<int> down(w, 1);
        for (int i = w - 1; i >= 0; --i)
            for (int j = i + 1; j < w; ++j)
                if (included[i].row < included[j].row && included[i].col < included[j].col)
                    down[i] = std::max(down[i], 1 + down[j]);
        for (size_t c = 0; c < cells.size(); ++c) {
            if (in_set[c]) continue;
            int up = longest_ending_at(cells[c]);
            int dn = 1;
            for (int j = 0; j < w; ++j)
                if (cells[c].row < included[j].row && cells[c].col < included[j].col)
                    dn = std::max(dn, 1 + down[j]);
            if (up + dn - 1 < t) return false; // cells[c] could still be added
        }
        return true;
    }

    void rec(size_t i) {
        if (++nodes > budget) throw budget_exceeded_error("facets: search budget exceeded");
        if (i == cells.size()) {
            if (maximal()) out.push_back(Facet{included});
            return;
        }
        int len = longest_ending_at(cells[i]);
        if (len < t) {
            included.push_back(cells[i]);
            up_len.push_back(len);
            in_set[i] = 1;
            rec(i + 1);
            included.pop_back();
            up_len.pop_back();
            in_set[i] = 0;
        }
        rec(i + 1);
    }
};

} // namespace

std::vector<Facet> facets(const GridSize& g, int t, long long budget) {
    require_t(g, t);
    FacetSearch fs;
    fs.t = t;
    fs.budget = budget;
    for (int r = 1; r <= g.rows; ++r)
        for (int c = 1; c <= g.cols; ++c) fs.cells.push_back({r, c});
    fs.in_set.assign(fs.cells.size(), 0);
    fs.rec(0);
    std::sort(fs.out.begin(), fs.out.end());
    return fs.out;
}

bool facets_pure(const std::vector<Facet>& fs) {
    for (const Facet& f : fs)
        if (f.cells.size() != fs.front().cells.size()) return false;
    return true;
}

long long exponent_mass_outside(const Monomial& m, const Facet& f) {
    long long mass = 0;
    for (const auto& [c, e] : m.exps())
        if (!facet_contains(f, c)) mass += e;
    return mass;
}

bool monomial_symbolic_membership(const Monomial& m, const std::vector<Facet>& fs,
                                  long long k) {
    for (const Facet& f : fs)
        if (exponent_mass_outside(m, f) < k) return false;
    return true;
}

bool monomial_symbolic_membership(const Monomial& m, const GridSize& g, int t, long long k,
                                  long long budget) {
    bool by_facets = monomial_symbolic_membership(m, facets(g, t, budget), k);
    bool by_dual = m.degree() - w_t(t, m) >= k;
    if (by_facets != by_dual)
        throw inconsistent_basis_error("symbolic membership: facet and w_t answers differ for " +
                                       to_string(m));
    return by_facets;
}

bool has_t_diagonal_divisor(const Monomial& m, int t) {
    if (t <= 0) return true;
    // Sort support by row ascending, column descending; a strict LIS on the
    // columns then picks at most one cell per row.
    std::vector<Cell> supp;
    for (const auto& [c, e] : m.exps()) supp.push_back(c);
    std::sort(supp.begin(), supp.end(), [](const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col > b.col;
    });
    IntSequence cols;
    for (const Cell& c : supp) cols.push_back(c.col);
    return lis(cols) >= t;
}

SymbolicInitialResult verify_symbolic_initial(const GridSize& g, int t, long long k,
                                              int degree_bound, StraightenEngine& eng,
                                              long long budget) {
    require_t(g, t);
    if (k < 1) throw invalid_input("verify_symbolic_initial: k must be >= 1");
    std::vector<std::vector<Facet>> fs(t + 1);
    for (int j = 1; j <= t; ++j) fs[j] = facets(g, j, budget);

    IdealFamily sym = IdealFamily::ItSymbolic(g, t, k);
    IdealFamily pow = IdealFamily::ProductOfIt(g, std::vector<int>(k, t));

    SymbolicInitialResult out;
    for (int d = 0; d <= degree_bound; ++d) {
        for (const Multidegree& v : enumerate_multidegrees(g, d)) {
            ++out.slices_checked;
            SliceBasis sb_sym = slice_of(sym, v, eng);
            SliceBasis sb_pow = slice_of(pow, v, eng);
            std::set<Monomial> ini_sym(sb_sym.initial_monomials.begin(),
                                       sb_sym.initial_monomials.end());
            std::set<Monomial> ini_pow(sb_pow.initial_monomials.begin(),
                                       sb_pow.initial_monomials.end());
            std::set<Monomial> facet_set, nested_set;
            for (const Monomial& m : enumerate_monomials(g, v)) {
                if (monomial_symbolic_membership(m, fs[t], k)) facet_set.insert(m);
                bool all = true;
                for (int j = 1; j <= t && all; ++j)
                    all = monomial_symbolic_membership(m, fs[j], k * (t + 1 - j));
                if (all) nested_set.insert(m);
            }
            SymbolicSliceCheck chk;
            chk.v = v;
            chk.symbolic_equals_facets = ini_sym == facet_set;
            chk.power_decomposition = ini_pow == nested_set;
            if (!chk.symbolic_equals_facets)
                chk.notes.push_back("symbolic slice has " + std::to_string(ini_sym.size()) +
                                    " initials, facet set has " +
                                    std::to_string(facet_set.size()));
            if (!chk.power_decomposition)
                chk.notes.push_back("power slice has " + std::to_string(ini_pow.size()) +
                                    " initials, nested facet set has " +
                                    std::to_string(nested_set.size()));
            if (!chk.symbolic_equals_facets || !chk.power_decomposition) {
                out.pass = false;
                out.failing.push_back(std::move(chk));
            }
        }
    }
    return out;
}

CogeneratedCheck check_cogenerated(const Minor& delta, int degree_bound, StraightenEngine& eng) {
    CogeneratedCheck out;
    out.delta = delta;
    IdealFamily fam = IdealFamily::Cogenerated(eng.grid(), delta);
    for (int d = 0; d <= degree_bound; ++d) {
        for (const Bitableau& s : enumerate_standard_bitableaux(eng.grid(), TotalDegree{d})) {
            ++out.checked;
            Monomial m = krs_monomial(s);
            if (gamma_delta(delta, s) != 0 && gamma_delta(delta, m) == 0) {
                out.nonvanishing_pass = false;
                out.failures.push_back("nonvanishing fails for " + to_string(s));
            }
            if (fam.contains(s) &&
                !gkrs_witness(fam, m, nullptr, ProductMembership::FamilyPredicate)) {
                out.gkrs_pass = false;
                out.failures.push_back("no witness decomposition for " + to_string(s));
            }
        }
    }
    InKRSResult ik = check_in_krs(fam, degree_bound, eng);
    out.in_krs_pass = ik.pass;
    for (const InKRSSlice& s : ik.slices)
        out.failures.push_back("in-KRS fails at " + to_string(s.v));
    return out;
}

CogeneratedExploration explore_cogenerated(const Minor& delta, long long k, int degree_bound,
                                           StraightenEngine& eng, long long budget) {
    if (k < 1) throw invalid_input("explore_cogenerated: k must be >= 1");
    const GridSize g = eng.grid();
    if (!delta.fits(g)) throw invalid_input("explore_cogenerated: minor exceeds the grid");
    CogeneratedExploration out;
    out.delta = delta;
    out.k = k;
    out.degree_bound = degree_bound;
    long long nodes = 0;
    auto spend = [&](long long n) {
        nodes += n;
        if (nodes > budget) throw budget_exceeded_error("explore_cogenerated: budget exceeded");
    };

    auto note = [](std::vector<std::string>& v, std::string s) {
        if (v.size() < 5) v.push_back(std::move(s));
    };

    // (a) gamma_delta across the correspondence, plus termwise checks (b).
    for (int d = 0; d <= degree_bound; ++d) {
        for (const Bitableau& s : enumerate_standard_bitableaux(g, TotalDegree{d})) {
            spend(1);
            ++out.a_checked;
            long long gs = gamma_delta(delta, s);
            long long gm = gamma_delta(delta, krs_monomial(s));
            if (gs != gm) {
                ++out.a_mismatches;
                note(out.a_examples, to_string(s) + ": " + std::to_string(gs) + " vs " +
                                         std::to_string(gm));
            }
        }
    }

    // (b) products with gamma_delta >= k: do all standard terms keep the bound?
    // Candidates: products of two minors, and all inc-decompositions of KRS
    // images of basis elements.
    auto check_termwise = [&](const Bitableau& cand) {
        if (gamma_delta(delta, cand) < k) return;
        spend(1);
        ++out.b_checked;
        for (const auto& [term, c] : eng.standard_representation(cand))
            if (gamma_delta(delta, term) < k) {
                ++out.b_violations;
                note(out.b_examples,
                     to_string(cand) + " has term " + to_string(term) + " with gamma_delta " +
                         std::to_string(gamma_delta(delta, term)));
                break;
            }
    };
    std::vector<Minor> minors = enumerate_all_minors(g);
    for (const Minor& a : minors) {
        for (const Minor& b : minors) {
            if (a.size() + b.size() > degree_bound) continue;
            check_termwise(Bitableau({a, b}));
        }
    }
    for (int d = 0; d <= degree_bound; ++d) {
        for (const Bitableau& s : enumerate_standard_bitableaux(g, TotalDegree{d})) {
            if (gamma_delta(delta, s) < k) continue;
            for (const auto& [dec, b] : inc_decompositions(monomial_to_array(krs_monomial(s)))) {
                spend(1);
                check_termwise(b);
            }
        }
    }

    // (c) k-fold products of generators (minors not >= delta) stay termwise
    // above the bound.
    std::vector<Minor> gens;
    for (const Minor& m : minors)
        if (!minor_leq(delta, m)) gens.push_back(m);
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from, int left, int deg) -> void {
        if (left == 0) {
            std::vector<Minor> fac;
            for (int i : pick) fac.push_back(gens[i]);
            Bitableau cand(fac);
            spend(1);
            ++out.c_checked;
            for (const auto& [term, c] : eng.standard_representation(cand))
                if (gamma_delta(delta, term) < k) {
                    ++out.c_violations;
                    note(out.c_examples, to_string(cand) + " has term " + to_string(term));
                    break;
                }
            return;
        }
        for (size_t i = from; i < gens.size(); ++i) {
            if (deg + gens[i].size() * left > degree_bound) continue;
            pick.push_back(static_cast<int>(i));
            self(self, i, left - 1, deg + gens[i].size());
            pick.pop_back();
        }
    };
    rec(rec, 0, static_cast<int>(k), 0);

    // (d) exact slice comparison, available when delta is [1..t-1|1..t-1].
    std::vector<int> init(delta.size());
    for (int i = 0; i < delta.size(); ++i) init[i] = i + 1;
    if (delta.rows() == init && delta.cols() == init &&
        delta.size() + 1 <= std::min(g.rows, g.cols)) {
        out.d_computable = true;
        int t = delta.size() + 1;
        IdealFamily jd = IdealFamily::JDeltaK(g, delta, k);
        IdealFamily sym = IdealFamily::ItSymbolic(g, t, k);
        std::vector<Facet> ft = facets(g, t, budget);
        for (int d = 0; d <= degree_bound && out.d_equal; ++d) {
            for (const Multidegree& v : enumerate_multidegrees(g, d)) {
                SliceBasis a = slice_of(jd, v, eng);
                SliceBasis b = slice_of(sym, v, eng);
                if (a.initial_monomials != b.initial_monomials) {
                    out.d_equal = false;
                    out.d_note = "JDeltaK and ItSymbolic slices differ at " + to_string(v);
                    break;
                }
                for (const Monomial& m : a.initial_monomials)
                    if (!monomial_symbolic_membership(m, ft, k)) {
                        out.d_equal = false;
                        out.d_note = "initial " + to_string(m) + " misses the facet bound";
                        break;
                    }
            }
        }
        if (out.d_equal)
            out.d_note = "delta = [1.." + std::to_string(delta.size()) + "|1.." +
                         std::to_string(delta.size()) + "]: slices match ItSymbolic(" +
                         std::to_string(t) + "," + std::to_string(k) + ")";
    } else {
        out.d_note = "symbolic powers of the cogenerated ideal are not directly computable "
                     "for this minor; questions (b)/(c) tables above are the evidence";
    }
    return out;
}

std::optional<Bitableau> find_krs_ini_mismatch(const GridSize& g, int degree_bound) {
    for (int d = 0; d <= degree_bound; ++d)
        for (const Bitableau& s : enumerate_standard_bitableaux(g, TotalDegree{d}))
            if (!(krs_monomial(s) == expand_bitableau(s).initial_monomial())) return s;
    return std::nullopt;
}

} // namespace krstab
