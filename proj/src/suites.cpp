#include "krstab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krstab/invariants.hpp"

namespace krstab {

namespace {

constexpr int kMaxWitnesses = 8;

int grid_min(const GridSize& g) { return std::min(g.rows, g.cols); }

void require_config(const RunConfig& cfg) {
    if (cfg.grid.rows < 1 || cfg.grid.cols < 1)
        throw invalid_input("run config: grid dimensions must be positive");
    if (cfg.degree_bound < 1) throw invalid_input("run config: degree bound must be >= 1");
    if (cfg.budget < 1) throw invalid_input("run config: budget must be >= 1");
}

Report make_report(std::string suite, const GridSize& g, Json params) {
    Report r;
    r.suite = std::move(suite);
    r.grid = g;
    r.params = std::move(params);
    return r;
}

void add_witness(SliceReport& s, Json w) {
    if (static_cast<int>(s.witnesses.size()) < kMaxWitnesses) s.witnesses.push_back(std::move(w));
}

// Closes a slice: counts it, folds its verdict into the report, and keeps it
// in the output when it failed or when explicitly kept (explorer findings,
// fixed worked instances).
void record(Report& rep, SliceReport s, bool keep_if_pass = false) {
    ++rep.slices_checked;
    if (!s.pass) rep.pass = false;
    if (!s.pass || keep_if_pass) rep.slices.push_back(std::move(s));
}

SliceReport open_slice(const Multidegree& v) {
    SliceReport s;
    s.multidegree = to_json(v);
    return s;
}

SliceReport open_part(const std::string& part) {
    SliceReport s;
    s.multidegree = nullptr;
    s.extra["part"] = part;
    return s;
}

template <typename F>
void for_multidegrees(const GridSize& g, int bound, F&& f) {
    for (int d = 0; d <= bound; ++d)
        for (const Multidegree& v : enumerate_multidegrees(g, d)) f(v);
}

// Membership of f in the row span of a family slice. For the families whose
// standard members form a basis of the ideal's slice this is exact ideal
// membership at f's multidegree.
bool in_row_span(const SliceBasis& sb, const Polynomial& f) {
    if (f.is_zero()) return true;
    const int n = static_cast<int>(sb.slice_monomials.size());
    std::map<Monomial, int> index;
    for (int j = 0; j < n; ++j) index[sb.slice_monomials[j]] = j;
    std::vector<Rational> x(n, Rational(0));
    for (const auto& [m, c] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end()) return false;
        x[it->second] = c;
    }
    for (const RatRow& row : sb.echelon) {
        int p = -1;
        for (int j = 0; j < n; ++j)
            if (row[j] != 0) {
                p = j;
                break;
            }
        if (p < 0 || x[p] == 0) continue;
        Rational q = x[p] / row[p];
        for (int j = p; j < n; ++j) x[j] -= q * row[j];
    }
    for (const Rational& r : x)
        if (r != 0) return false;
    return true;
}

// --- bijection ---------------------------------------------------------------

Report suite_bijection(const RunConfig& cfg) {
    Report rep = make_report("bijection", cfg.grid, Json{{"degreeBound", cfg.degree_bound}});

    // Fixed worked instance on a 6x6 grid, kept in the report.
    {
        GridSize g6{6, 6};
        Bitableau sigma({Minor({1, 3, 4, 5}, {1, 2, 3, 6}), Minor({2, 6}, {4, 5})});
        TwoRowArray expect({1, 2, 3, 4, 5, 6}, {4, 1, 2, 5, 6, 3});
        SliceReport s = open_slice(Multidegree::of(sigma, g6));
        s.extra["label"] = "worked-instance-6x6";
        TwoRowArray got = krs_forward(sigma);
        ++rep.items_checked;
        if (!(got == expect && krs_inverse(got) == sigma)) {
            s.pass = false;
            ++rep.counterexamples;
            add_witness(s, Json{{"bitableau", to_json(sigma)},
                                {"image", to_json(got)},
                                {"expected", to_json(expect)}});
        }
        record(rep, std::move(s), true);
    }

    for_multidegrees(cfg.grid, cfg.degree_bound, [&](const Multidegree& v) {
        SliceReport s = open_slice(v);
        long long bad = 0;
        std::set<Monomial> images;
        auto basis = enumerate_standard_bitableaux(cfg.grid,
                                                   MultidegreeConstraint{v.row_deg(), v.col_deg()});
        for (const Bitableau& b : basis) {
            ++rep.items_checked;
            TwoRowArray a = krs_forward(b);
            Monomial m = monomial_of(a);
            images.insert(m);
            bool ok = krs_inverse(a) == b && Multidegree::of(m, cfg.grid) == v &&
                      krs_monomial(b) == m;
            if (!ok) {
                ++bad;
                add_witness(s, Json{{"bitableau", to_json(b)}, {"array", to_json(a)}});
            }
        }
        // Injectivity plus the monomial count make the slice map a bijection.
        if (images.size() != basis.size() ||
            images.size() != enumerate_monomials(cfg.grid, v).size()) {
            ++bad;
            add_witness(s, Json{{"note", "image count mismatch"},
                                {"basis", basis.size()},
                                {"distinctImages", images.size()}});
        }
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s));
    });
    return rep;
}

// --- schensted ---------------------------------------------------------------

Report suite_schensted(const RunConfig& cfg) {
    Report rep = make_report("schensted", cfg.grid, Json{{"degreeBound", cfg.degree_bound}});
    for_multidegrees(cfg.grid, cfg.degree_bound, [&](const Multidegree& v) {
        SliceReport s = open_slice(v);
        long long bad = 0;
        for (const Bitableau& b : enumerate_standard_bitableaux(
                 cfg.grid, MultidegreeConstraint{v.row_deg(), v.col_deg()})) {
            ++rep.items_checked;
            int first = b.empty() ? 0 : b.factors()[0].size();
            TwoRowArray a = krs_forward(b);
            if (first != lis(a.v())) {
                ++bad;
                add_witness(s, Json{{"bitableau", to_json(b)},
                                    {"firstFactor", first},
                                    {"lis", lis(a.v())}});
            }
        }
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s));
    });
    return rep;
}

// --- greene --------------------------------------------------------------------

Report suite_greene(const RunConfig& cfg) {
    const int kmax = 3;
    Report rep = make_report("greene", cfg.grid,
                             Json{{"degreeBound", cfg.degree_bound}, {"kMax", kmax}});
    for_multidegrees(cfg.grid, cfg.degree_bound, [&](const Multidegree& v) {
        SliceReport s = open_slice(v);
        long long bad = 0;
        for (const Bitableau& b : enumerate_standard_bitableaux(
                 cfg.grid, MultidegreeConstraint{v.row_deg(), v.col_deg()})) {
            TwoRowArray a = krs_forward(b);
            Shape sh = b.shape();
            for (int k = 1; k <= kmax; ++k) {
                ++rep.items_checked;
                long long want = shape_alpha(sh, k);
                long long brute = greene_alpha(k, a.v(), GreeneMode::BruteForce);
                long long rsk = greene_alpha(k, a.v(), GreeneMode::ViaRSK);
                if (want != brute || want != rsk) {
                    ++bad;
                    add_witness(s, Json{{"bitableau", to_json(b)},
                                        {"k", k},
                                        {"shapeAlpha", want},
                                        {"bruteForce", brute},
                                        {"viaRSK", rsk}});
                }
            }
        }
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s));
    });
    return rep;
}

// --- gamma-invariance ----------------------------------------------------------

Report suite_gamma_invariance(const RunConfig& cfg) {
    const int tmax = std::min(3, grid_min(cfg.grid));
    Report rep = make_report("gamma-invariance", cfg.grid,
                             Json{{"degreeBound", cfg.degree_bound}, {"tMax", tmax}});
    for_multidegrees(cfg.grid, cfg.degree_bound, [&](const Multidegree& v) {
        SliceReport s = open_slice(v);
        long long bad = 0;
        for (const Bitableau& b : enumerate_standard_bitableaux(
                 cfg.grid, MultidegreeConstraint{v.row_deg(), v.col_deg()})) {
            auto decs = inc_decompositions(monomial_to_array(krs_monomial(b)));
            for (int t = 1; t <= tmax; ++t) {
                ++rep.items_checked;
                long long lhs = gamma_t(t, b);
                long long best = 0;
                for (const auto& pr : decs) best = std::max(best, gamma_t(t, pr.second));
                if (lhs != best) {
                    ++bad;
                    add_witness(s, Json{{"bitableau", to_json(b)},
                                        {"t", t},
                                        {"gammaBitableau", lhs},
                                        {"gammaMonomial", best}});
                }
            }
        }
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s));
    });
    return rep;
}

// --- straightening --------------------------------------------------------------

Report suite_straightening(const RunConfig& cfg) {
    const int sbound = std::min(cfg.degree_bound, 4);
    const int pair_cap = 6;
    Report rep = make_report("straightening", cfg.grid,
                             Json{{"rankDegreeBound", sbound},
                                  {"pairSizeCap", pair_cap},
                                  {"shapeDegreeBound", sbound}});
    StraightenEngine eng(cfg.grid);

    // Slice systems are square with full column rank.
    for_multidegrees(cfg.grid, sbound, [&](const Multidegree& v) {
        SliceReport s = open_slice(v);
        const StraightenEngine::Slice& sl = eng.slice(v);
        rep.items_checked += static_cast<long long>(sl.basis.size());
        RatMatrix m = sl.matrix;
        std::vector<int> pivots = rref(m);
        if (pivots.size() != sl.basis.size() || sl.monomials.size() != sl.basis.size()) {
            s.pass = false;
            ++rep.counterexamples;
            add_witness(s, Json{{"note", "slice system not square of full rank"},
                                {"basis", sl.basis.size()},
                                {"monomials", sl.monomials.size()},
                                {"rank", pivots.size()}});
        }
        record(rep, std::move(s));
    });

    // Order condition on every non-standard ordered pair of minors.
    {
        SliceReport s = open_part("order-condition");
        long long bad = 0;
        auto minors = enumerate_all_minors(cfg.grid);
        for (const Minor& d1 : minors)
            for (const Minor& d2 : minors) {
                if (d1.size() + d2.size() > pair_cap) continue;
                if (minor_leq(d1, d2)) continue;
                ++rep.items_checked;
                StraighteningCheck chk = check_straightening_order(eng, d1, d2);
                if (!chk.pass) {
                    ++bad;
                    add_witness(s, Json{{"d1", to_json(d1)},
                                        {"d2", to_json(d2)},
                                        {"violations", chk.violations}});
                }
            }
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s));
    }

    // Shape-preserving term in the representation of every product of minors.
    {
        SliceReport s = open_part("shape-term");
        long long bad = 0;
        auto minors = enumerate_all_minors(cfg.grid);
        std::vector<Minor> stack;
        std::function<void(size_t, int)> go = [&](size_t i, int left) {
            if (!stack.empty()) {
                Bitableau D(stack);
                ++rep.items_checked;
                StraighteningCheck chk = check_straightening_shape(eng, D);
                if (!chk.pass) {
                    ++bad;
                    add_witness(s, Json{{"bitableau", to_json(D)},
                                        {"violations", chk.violations}});
                }
            }
            for (size_t j = i; j < minors.size(); ++j) {
                if (minors[j].size() > left) continue;
                stack.push_back(minors[j]);
                go(j, left - minors[j].size());
                stack.pop_back();
            }
        };
        go(0, sbound);
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s));
    }
    return rep;
}

// --- groebner-it ----------------------------------------------------------------

Report suite_groebner_it(const RunConfig& cfg) {
    std::vector<int> ts;
    for (int t : {2, 3})
        if (t <= grid_min(cfg.grid)) ts.push_back(t);
    Report rep = make_report("groebner-it", cfg.grid,
                             Json{{"degreeBound", cfg.degree_bound}, {"ts", ts}});
    StraightenEngine eng(cfg.grid);
    for (int t : ts) {
        IdealFamily fam = IdealFamily::It(cfg.grid, t);
        for_multidegrees(cfg.grid, cfg.degree_bound, [&](const Multidegree& v) {
            SliceReport s = open_slice(v);
            s.extra["t"] = t;
            long long bad = 0;
            SliceBasis sb = slice_of(fam, v, eng);
            rep.items_checked += static_cast<long long>(sb.standard_basis.size());
            for (const Monomial& m : sb.initial_monomials)
                if (!has_t_diagonal_divisor(m, t)) {
                    ++bad;
                    add_witness(s, Json{{"initial", to_json(m)},
                                        {"note", "no t-diagonal divisor"}});
                }
            std::set<Monomial> krs_set;
            for (const Bitableau& b : sb.standard_basis) krs_set.insert(krs_monomial(b));
            std::set<Monomial> ini_set(sb.initial_monomials.begin(),
                                       sb.initial_monomials.end());
            if (krs_set != ini_set) {
                ++bad;
                add_witness(s, Json{{"note", "KRS image set differs from initial set"}});
            }
            if (bad) {
                s.pass = false;
                rep.counterexamples += bad;
            }
            record(rep, std::move(s));
        });
    }
    return rep;
}

// --- gandin-closure -------------------------------------------------------------

Report suite_gandin_closure(const RunConfig& cfg) {
    std::vector<IdealFamily> base;
    const GridSize g = cfg.grid;
    if (grid_min(g) >= 2) {
        base.push_back(IdealFamily::It(g, 2));
        base.push_back(IdealFamily::ItSymbolic(g, 2, 2));
        base.push_back(IdealFamily::Jkd(g, 1, 2));
        base.push_back(IdealFamily::Jkd(g, 2, 3));
    }
    if (grid_min(g) >= 3) {
        base.push_back(IdealFamily::It(g, 3));
        base.push_back(IdealFamily::ItSymbolic(g, 3, 2));
    }
    std::vector<IdealFamily> fams = base;
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i + 1; j < base.size(); ++j) {
            fams.push_back(IdealFamily::Sum({base[i], base[j]}));
            fams.push_back(IdealFamily::Intersection({base[i], base[j]}));
        }
    Json names = Json::array();
    for (const IdealFamily& f : fams) names.push_back(f.name());
    Report rep = make_report("gandin-closure", g,
                             Json{{"degreeBound", cfg.degree_bound}, {"families", names}});
    StraightenEngine eng(g);
    for (const IdealFamily& f : fams) {
        SliceReport s = open_part("in-krs");
        s.extra["family"] = f.name();
        InKRSResult res = check_in_krs(f, cfg.degree_bound, eng);
        rep.items_checked += res.slices_checked;
        if (!res.pass) {
            s.pass = false;
            rep.counterexamples += static_cast<long long>(res.slices.size());
            for (const InKRSSlice& sl : res.slices) {
                Json krs_only = Json::array();
                for (const Monomial& m : sl.krs_only) krs_only.push_back(to_json(m));
                Json ini_only = Json::array();
                for (const Monomial& m : sl.ini_only) ini_only.push_back(to_json(m));
                add_witness(s, Json{{"multidegree", to_json(sl.v)},
                                    {"krsOnly", krs_only},
                                    {"iniOnly", ini_only}});
            }
        }
        record(rep, std::move(s));
    }
    return rep;
}

// --- balancing ------------------------------------------------------------------

Report suite_balancing(const RunConfig& cfg) {
    Report rep = make_report("balancing", cfg.grid, Json::object());
    StraightenEngine eng(cfg.grid);
    for (int vsz = 2; vsz <= grid_min(cfg.grid); ++vsz)
        for (int usz = 1; usz < vsz; ++usz) {
            SliceReport s = open_part("pair-sizes");
            s.extra["sizes"] = Json::array({vsz, usz});
            long long bad = 0;
            IdealFamily fam = IdealFamily::ProductOfIt(cfg.grid, {usz + 1, vsz - 1});
            for (const Minor& pi : enumerate_minors(cfg.grid, vsz))
                for (const Minor& rho : enumerate_minors(cfg.grid, usz)) {
                    ++rep.items_checked;
                    Polynomial f = expand_minor(pi).times(expand_minor(rho));
                    if (!membership(f, fam, eng)) {
                        ++bad;
                        add_witness(s, Json{{"pi", to_json(pi)}, {"rho", to_json(rho)}});
                    }
                }
            if (bad) {
                s.pass = false;
                rep.counterexamples += bad;
            }
            record(rep, std::move(s));
        }
    return rep;
}

// --- algam ----------------------------------------------------------------------

Report suite_algam(const RunConfig& cfg) {
    const int tmax = std::min(3, grid_min(cfg.grid));
    const int rmax = 3;
    const int kmax = cfg.degree_bound;
    Report rep = make_report("algam", cfg.grid,
                             Json{{"degreeBound", cfg.degree_bound},
                                  {"tMax", tmax},
                                  {"rMax", rmax},
                                  {"kMax", kmax}});
    for (int t = 1; t <= tmax; ++t)
        for (int r = 1; r <= rmax; ++r) {
            SliceReport s = open_part("predicate-equality");
            s.extra["t"] = t;
            s.extra["r"] = r;
            long long bad = 0;
            IdealFamily lhs = IdealFamily::ItSymbolic(cfg.grid, t, r);
            std::vector<IdealFamily> rhs;
            for (int k = 1; k <= kmax; ++k)
                rhs.push_back(IdealFamily::Jkd(cfg.grid, k, r + static_cast<long long>(k) * (t - 1)));
            for (int d = 0; d <= cfg.degree_bound; ++d)
                for (const Bitableau& b :
                     enumerate_standard_bitableaux(cfg.grid, TotalDegree{d})) {
                    ++rep.items_checked;
                    bool in_lhs = lhs.contains_product(b);
                    bool in_rhs = false;
                    for (const IdealFamily& f : rhs)
                        if (f.contains_product(b)) {
                            in_rhs = true;
                            break;
                        }
                    if (in_lhs != in_rhs) {
                        ++bad;
                        add_witness(s, Json{{"bitableau", to_json(b)},
                                            {"symbolic", in_lhs},
                                            {"sumOfJkd", in_rhs}});
                    }
                }
            if (bad) {
                s.pass = false;
                rep.counterexamples += bad;
            }
            record(rep, std::move(s));
        }
    return rep;
}

// --- symb-in --------------------------------------------------------------------

Report suite_symb_in(const RunConfig& cfg) {
    const int perm_len_max = 7;
    const int perm_t_max = 4;
    const int mono_deg_max = std::min(cfg.degree_bound, 5);
    const int purity_grid_max = 4;
    const int kmax = 3;
    Report rep = make_report("symb-in", cfg.grid,
                             Json{{"degreeBound", cfg.degree_bound},
                                  {"t", 2},
                                  {"kMax", kmax},
                                  {"permLenMax", perm_len_max},
                                  {"permTMax", perm_t_max},
                                  {"monomialDegMax", mono_deg_max},
                                  {"purityGridMax", purity_grid_max},
                                  {"budget", cfg.budget}});

    // Duality on permutations: the gamma and w statistics tile the length.
    {
        SliceReport s = open_part("duality-permutations");
        long long bad = 0;
        for (int n = 1; n <= perm_len_max; ++n) {
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i + 1;
            do {
                for (int t = 1; t <= perm_t_max; ++t) {
                    ++rep.items_checked;
                    if (gamma_t(t, perm) + w_t(t, perm) != n) {
                        ++bad;
                        add_witness(s, Json{{"sequence", perm}, {"t", t}});
                    }
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s));
    }

    // Duality on monomials: max decomposition gamma against the escape count.
    {
        SliceReport s = open_part("duality-monomials");
        long long bad = 0;
        for (int d = 0; d <= mono_deg_max; ++d)
            for (const Monomial& m : enumerate_monomials(cfg.grid, TotalDegree{d})) {
                auto decs = inc_decompositions(monomial_to_array(m));
                for (int t = 1; t <= grid_min(cfg.grid); ++t) {
                    ++rep.items_checked;
                    long long best = 0;
                    for (const auto& pr : decs) best = std::max(best, gamma_t(t, pr.second));
                    if (best + w_t(t, m) != d) {
                        ++bad;
                        add_witness(s, Json{{"monomial", to_json(m)},
                                            {"t", t},
                                            {"gamma", best},
                                            {"w", w_t(t, m)}});
                    }
                }
            }
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s));
    }

    // Initial monomials of symbolic and ordinary powers against the facet
    // counting bounds, slice by slice.
    if (grid_min(cfg.grid) >= 2) {
        StraightenEngine eng(cfg.grid);
        for (long long k = 1; k <= kmax; ++k) {
            SliceReport s = open_part("symbolic-vs-facets");
            s.extra["t"] = 2;
            s.extra["k"] = k;
            long long bad = 0;
            try {
                SymbolicInitialResult res =
                    verify_symbolic_initial(cfg.grid, 2, k, cfg.degree_bound, eng, cfg.budget);
                rep.items_checked += res.slices_checked;
                if (!res.pass) {
                    bad += static_cast<long long>(res.failing.size());
                    for (const SymbolicSliceCheck& c : res.failing)
                        add_witness(s, Json{{"multidegree", to_json(c.v)},
                                            {"symbolicEqualsFacets", c.symbolic_equals_facets},
                                            {"powerDecomposition", c.power_decomposition},
                                            {"notes", c.notes}});
                }
            } catch (const budget_exceeded_error& e) {
                rep.budget_exceeded = true;
                s.extra["note"] = std::string("budget exhausted: ") + e.what();
            }
            if (bad) {
                s.pass = false;
                rep.counterexamples += bad;
            }
            record(rep, std::move(s));
        }
    }

    // Facet purity on all small grids.
    {
        SliceReport s = open_part("facet-purity");
        long long bad = 0;
        for (int m = 1; m <= purity_grid_max; ++m)
            for (int n = 1; n <= purity_grid_max; ++n)
                for (int t = 1; t <= std::min(m, n); ++t) {
                    ++rep.items_checked;
                    try {
                        std::vector<Facet> fs = facets(GridSize{m, n}, t, cfg.budget);
                        if (fs.empty() || !facets_pure(fs)) {
                            ++bad;
                            std::set<size_t> sizes;
                            for (const Facet& f : fs) sizes.insert(f.cells.size());
                            add_witness(s, Json{{"grid", Json::array({m, n})},
                                                {"t", t},
                                                {"facetCount", fs.size()},
                                                {"distinctSizes", sizes.size()}});
                        }
                    } catch (const budget_exceeded_error& e) {
                        rep.budget_exceeded = true;
                        s.extra["note"] = std::string("budget exhausted: ") + e.what();
                    }
                }
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s));
    }
    return rep;
}

// --- examples-4a ----------------------------------------------------------------

Report suite_examples_4a(const RunConfig& cfg) {
    GridSize g = (cfg.grid.rows >= 3 && cfg.grid.cols >= 3) ? cfg.grid : GridSize{3, 3};
    Report rep = make_report("examples-4a", g, Json{{"searchDegree", 4}});
    StraightenEngine eng(g);
    IdealFamily fam = IdealFamily::ItSymbolic(g, 2, 2);
    Monomial M({{{1, 2}, 1}, {{2, 1}, 1}, {{2, 3}, 1}, {{3, 2}, 1}});

    SliceReport s = open_slice(Multidegree::of(M, g));
    s.extra["label"] = "square-power-initial-gap";
    long long bad = 0;

    // The monomial is an initial monomial of the squared symbolic family.
    SliceBasis sb = slice_of(fam, Multidegree::of(M, g), eng);
    bool in_initial = std::find(sb.initial_monomials.begin(), sb.initial_monomials.end(), M) !=
                      sb.initial_monomials.end();
    ++rep.items_checked;
    if (!in_initial) {
        ++bad;
        add_witness(s, Json{{"monomial", to_json(M)},
                            {"note", "not an initial monomial of the slice"}});
    }
    std::optional<Bitableau> w = gkrs_witness(fam, M, nullptr, ProductMembership::FamilyPredicate);
    ++rep.items_checked;
    if (!w) {
        ++bad;
        add_witness(s, Json{{"monomial", to_json(M)},
                            {"note", "no product decomposition found in the family"}});
    } else {
        add_witness(s, Json{{"monomial", to_json(M)}, {"decomposition", to_json(*w)}});
    }

    // No standard member of degree <= 4 has an initial monomial dividing it.
    for (int d = 1; d <= 4; ++d)
        for (const Bitableau& b : enumerate_standard_bitableaux(g, TotalDegree{d})) {
            if (!fam.contains_product(b)) continue;
            ++rep.items_checked;
            if (diagonal_monomial(b).divides(M)) {
                ++bad;
                add_witness(s, Json{{"divisor", to_json(b)}});
            }
        }

    if (bad) {
        s.pass = false;
        rep.counterexamples += bad;
    }
    record(rep, std::move(s), true);
    return rep;
}

// --- examples-4b ----------------------------------------------------------------

Report suite_examples_4b(const RunConfig& cfg) {
    (void)cfg;
    GridSize g{6, 6};
    Report rep = make_report(
        "examples-4b", g,
        Json{{"claim", "no product of minors inside the intersection family has the fixed "
                       "initial monomial"}});
    StraightenEngine eng(g);
    Bitableau sigma({Minor({1, 3, 4, 5}, {1, 2, 3, 6}), Minor({2, 6}, {4, 5})});
    IdealFamily fam =
        IdealFamily::Intersection({IdealFamily::ItSymbolic(g, 3, 2), IdealFamily::It(g, 4)});
    Monomial M_expected({{{1, 4}, 1}, {{2, 1}, 1}, {{3, 2}, 1}, {{4, 5}, 1}, {{5, 6}, 1}, {{6, 3}, 1}});

    // Established parts: membership of the fixed standard element, its image,
    // and the impossibility of the two largest shapes.
    {
        SliceReport s = open_slice(Multidegree::of(sigma, g));
        s.extra["label"] = "established-parts";
        long long bad = 0;

        ++rep.items_checked;
        if (!fam.contains(sigma)) {
            ++bad;
            add_witness(s, Json{{"bitableau", to_json(sigma)},
                                {"note", "fixed element not in the family"}});
        }
        Monomial M = krs_monomial(sigma);
        ++rep.items_checked;
        if (!(M == M_expected)) {
            ++bad;
            add_witness(s, Json{{"image", to_json(M)}, {"expected", to_json(M_expected)}});
        }
        TwoRowArray a = monomial_to_array(M_expected);
        ++rep.items_checked;
        if (lis(a.v()) != 4) {
            ++bad;
            add_witness(s, Json{{"lis", lis(a.v())}, {"expected", 4}});
        }
        auto decs = inc_decompositions(a);
        bool has_42 = false;
        for (const auto& pr : decs)
            if (pr.second.shape() == Shape({4, 2})) has_42 = true;
        ++rep.items_checked;
        if (has_42) {
            ++bad;
            add_witness(s, Json{{"note", "a (4,2) decomposition exists"}});
        }
        // The fixed monomial is an initial monomial of the intersection slice.
        SliceBasis sb = slice_of(fam, Multidegree::of(M_expected, g), eng);
        bool in_initial = std::find(sb.initial_monomials.begin(), sb.initial_monomials.end(),
                                    M_expected) != sb.initial_monomials.end();
        ++rep.items_checked;
        if (!in_initial) {
            ++bad;
            add_witness(s, Json{{"monomial", to_json(M_expected)},
                                {"note", "not an initial monomial of the intersection slice"}});
        }
        if (bad) {
            s.pass = false;
            rep.counterexamples += bad;
        }
        record(rep, std::move(s), true);
    }

    // Claimed part: no decomposition of the image lies in the family. A
    // witness search refutes this; the witness is cross-checked against the
    // exact slice span, so a failure here is a genuine counterexample to the
    // claim, not a predicate artifact.
    {
        SliceReport s = open_slice(Multidegree::of(M_expected, g));
        s.extra["label"] = "no-product-claim";
        ++rep.items_checked;
        std::optional<Bitableau> w =
            gkrs_witness(fam, M_expected, nullptr, ProductMembership::FamilyPredicate);
        if (w) {
            SliceBasis sb = slice_of(fam, Multidegree::of(M_expected, g), eng);
            bool exact = in_row_span(sb, expand_bitableau(*w));
            s.pass = false;
            ++rep.counterexamples;
            Json shape_json = to_json(w->shape());
            add_witness(s, Json{{"decomposition", to_json(*w)},
                                {"shape", shape_json},
                                {"gamma3", gamma_t(3, *w)},
                                {"gamma4", gamma_t(4, *w)},
                                {"exactSliceMembership", exact}});
        }
        record(rep, std::move(s), true);
    }
    return rep;
}

// --- shape-6-counterexample -----------------------------------------------------

Report suite_shape_6(const RunConfig& cfg) {
    (void)cfg;
    GridSize g{6, 6};
    Report rep = make_report("shape-6-counterexample", g, Json::object());
    Monomial M({{{1, 1}, 1},
                {{1, 3}, 1},
                {{2, 2}, 1},
                {{3, 4}, 1},
                {{4, 3}, 1},
                {{4, 5}, 1},
                {{5, 4}, 1},
                {{5, 6}, 1}});
    TwoRowArray a = monomial_to_array(M);
    SliceReport s = open_slice(Multidegree::of(M, g));
    s.extra["label"] = "insertion-shape-vs-decomposition-shapes";
    long long bad = 0;

    ++rep.items_checked;
    if (!(krs_shape(a) == Shape({5, 3}))) {
        ++bad;
        add_witness(s, Json{{"insertionShape", to_json(krs_shape(a))}, {"expected", to_json(Shape({5, 3}))}});
    }
    auto decs = inc_decompositions(a);
    std::set<Shape> shapes;
    for (const auto& pr : decs) shapes.insert(pr.second.shape());
    ++rep.items_checked;
    if (shapes.count(Shape({5, 3}))) {
        ++bad;
        add_witness(s, Json{{"note", "a (5,3) decomposition exists"}});
    }
    // The gamma statistics still agree even though the shape sets differ.
    for (int t = 1; t <= 4; ++t) {
        ++rep.items_checked;
        long long best = 0;
        for (const auto& pr : decs) best = std::max(best, gamma_t(t, pr.second));
        if (best != shape_gamma(Shape({5, 3}), t)) {
            ++bad;
            add_witness(s, Json{{"t", t},
                                {"decompositionGamma", best},
                                {"insertionGamma", shape_gamma(Shape({5, 3}), t)}});
        }
    }
    Json shape_list = Json::array();
    for (const Shape& sh : shapes) shape_list.push_back(to_json(sh));
    add_witness(s, Json{{"decompositionShapes", shape_list}});
    if (bad) {
        s.pass = false;
        rep.counterexamples += bad;
    }
    record(rep, std::move(s), true);
    return rep;
}

// --- cogenerated-explore --------------------------------------------------------

Report suite_cogenerated_explore(const RunConfig& cfg) {
    const long long k = 2;
    Report rep = make_report("cogenerated-explore", cfg.grid,
                             Json{{"degreeBound", cfg.degree_bound},
                                  {"k", k},
                                  {"budget", cfg.budget}});
    StraightenEngine eng(cfg.grid);
    for (const Minor& delta : enumerate_all_minors(cfg.grid)) {
        // Asserted facts gate the suite.
        {
            SliceReport s = open_part("assertions");
            s.extra["delta"] = to_json(delta);
            CogeneratedCheck c = check_cogenerated(delta, cfg.degree_bound, eng);
            rep.items_checked += c.checked;
            if (!(c.nonvanishing_pass && c.in_krs_pass && c.gkrs_pass)) {
                s.pass = false;
                rep.counterexamples += static_cast<long long>(c.failures.size());
                for (const std::string& f : c.failures) add_witness(s, Json{{"failure", f}});
            }
            record(rep, std::move(s));
        }
        // Exploration findings never gate.
        {
            SliceReport s = open_part("exploration");
            s.extra["delta"] = to_json(delta);
            try {
                CogeneratedExploration e =
                    explore_cogenerated(delta, k, cfg.degree_bound, eng, cfg.budget);
                rep.items_checked += e.a_checked + e.b_checked + e.c_checked;
                add_witness(
                    s, Json{{"correspondenceInvariant",
                             Json{{"checked", e.a_checked},
                                  {"mismatches", e.a_mismatches},
                                  {"examples", e.a_examples}}},
                            {"termwiseBound",
                             Json{{"checked", e.b_checked},
                                  {"violations", e.b_violations},
                                  {"examples", e.b_examples}}},
                            {"productPower",
                             Json{{"checked", e.c_checked},
                                  {"violations", e.c_violations},
                                  {"examples", e.c_examples}}},
                            {"symbolicComparison",
                             Json{{"computable", e.d_computable},
                                  {"equal", e.d_equal},
                                  {"note", e.d_note}}}});
            } catch (const budget_exceeded_error& e) {
                rep.budget_exceeded = true;
                s.extra["note"] = std::string("budget exhausted: ") + e.what();
            }
            record(rep, std::move(s), true);
        }
    }
    return rep;
}

// --- negative-control -----------------------------------------------------------

Report suite_negative_control(const RunConfig& cfg) {
    GridSize g = grid_min(cfg.grid) >= 2 ? cfg.grid : GridSize{2, 2};
    int bound = std::max(cfg.degree_bound, 2);
    Report rep = make_report("negative-control", g, Json{{"degreeBound", bound}});
    StraightenEngine eng(g);
    SliceReport s = open_part("krs-vs-initial");
    long long bad = 0;

    ++rep.items_checked;
    std::optional<Bitableau> mm = find_krs_ini_mismatch(g, bound);
    if (!mm) {
        ++bad;
        add_witness(s, Json{{"note", "no standard element with KRS image != initial monomial"}});
    } else {
        const Bitableau& sigma = *mm;
        Polynomial f = expand_bitableau(sigma);
        Monomial m_ini = f.initial_monomial();
        Monomial m_krs = krs_monomial(sigma);
        s.multidegree = to_json(Multidegree::of(sigma, g));

        // The principal ideal slice at this degree is spanned by sigma, so
        // its KRS image and initial spaces are the two distinct lines.
        StandardRep rep_f = eng.standard_representation(f);
        bool principal = rep_f.size() == 1 && rep_f.begin()->first == sigma &&
                         rep_f.begin()->second == 1;
        Polynomial krs_f = eng.krs_automorphism(f);
        bool line_differs = !(m_ini == m_krs) && krs_f == Polynomial(m_krs);
        ++rep.items_checked;
        if (!principal || !line_differs) {
            ++bad;
            add_witness(s, Json{{"bitableau", to_json(sigma)},
                                {"note", "witness verification failed"}});
        } else {
            add_witness(s, Json{{"bitableau", to_json(sigma)},
                                {"krs", to_json(m_krs)},
                                {"initial", to_json(m_ini)}});
        }
        // In the next degree the ideal is everything, so the two spaces agree
        // there; the mismatch lives strictly in the generator's degree.
        int d1 = sigma.degree() + 1;
        std::set<Monomial> images;
        for (const Bitableau& b : enumerate_standard_bitableaux(g, TotalDegree{d1}))
            images.insert(krs_monomial(b));
        auto all = enumerate_monomials(g, TotalDegree{d1});
        ++rep.items_checked;
        if (images.size() != all.size()) {
            ++bad;
            add_witness(s, Json{{"note", "degree above the generator is not the full space"}});
        }
    }
    if (bad) {
        s.pass = false;
        rep.counterexamples += bad;
    }
    record(rep, std::move(s), true);
    return rep;
}

// --- registry -------------------------------------------------------------------

using SuiteFn = Report (*)(const RunConfig&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> reg = {
        {"algam", suite_algam},
        {"balancing", suite_balancing},
        {"bijection", suite_bijection},
        {"cogenerated-explore", suite_cogenerated_explore},
        {"examples-4a", suite_examples_4a},
        {"examples-4b", suite_examples_4b},
        {"gamma-invariance", suite_gamma_invariance},
        {"gandin-closure", suite_gandin_closure},
        {"greene", suite_greene},
        {"groebner-it", suite_groebner_it},
        {"negative-control", suite_negative_control},
        {"schensted", suite_schensted},
        {"shape-6-counterexample", suite_shape_6},
        {"straightening", suite_straightening},
        {"symb-in", suite_symb_in},
    };
    return reg;
}

std::string iso_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

Report run_suite(const std::string& name, const RunConfig& cfg) {
    require_config(cfg);
    auto it = registry().find(name);
    if (it == registry().end()) throw invalid_input("unknown suite: " + name);
    auto start = std::chrono::steady_clock::now();
    Report rep;
    try {
        rep = it->second(cfg);
    } catch (const budget_exceeded_error& e) {
        // Partial results were lost with the stack; emit a flagged stub.
        rep = make_report(name, cfg.grid, Json{{"note", std::string("budget exhausted: ") + e.what()}});
        rep.budget_exceeded = true;
    }
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<Report> run_all(const RunConfig& cfg) {
    require_config(cfg);
    std::vector<std::string> names = cfg.suites;
    std::sort(names.begin(), names.end());
    std::vector<Report> out;
    out.reserve(names.size());
    for (const std::string& n : names) out.push_back(run_suite(n, cfg));
    return out;
}

Json report_to_json(const Report& r, bool with_timestamp) {
    Json slices = Json::array();
    for (const SliceReport& s : r.slices) {
        Json js;
        js["multidegree"] = s.multidegree;
        js["pass"] = s.pass;
        js["witnesses"] = s.witnesses;
        for (const auto& [key, value] : s.extra.items()) js[key] = value;
        slices.push_back(std::move(js));
    }
    Json j;
    j["suite"] = r.suite;
    j["grid"] = Json::array({r.grid.rows, r.grid.cols});
    j["params"] = r.params;
    j["slices"] = std::move(slices);
    j["summary"] = Json{{"pass", r.pass},
                        {"counterexamples", r.counterexamples},
                        {"slicesChecked", r.slices_checked},
                        {"itemsChecked", r.items_checked},
                        {"budgetExceeded", r.budget_exceeded}};
    if (with_timestamp) {
        j["timestamp"] = iso_utc_now();
        j["seconds"] = r.seconds;
    }
    return j;
}

Json reports_to_json(const std::vector<Report>& rs, bool with_timestamp) {
    Json arr = Json::array();
    for (const Report& r : rs) arr.push_back(report_to_json(r, with_timestamp));
    return arr;
}

std::string reports_to_csv(const std::vector<Report>& rs) {
    std::ostringstream out;
    out << "suite,rows,cols,pass,counterexamples,slicesChecked,itemsChecked,budgetExceeded\n";
    for (const Report& r : rs)
        out << r.suite << ',' << r.grid.rows << ',' << r.grid.cols << ','
            << (r.pass ? "true" : "false") << ',' << r.counterexamples << ','
            << r.slices_checked << ',' << r.items_checked << ','
            << (r.budget_exceeded ? "true" : "false") << '\n';
    return out.str();
}

int exit_code_for(const std::vector<Report>& rs) {
    bool budget = false;
    bool fail = false;
    for (const Report& r : rs) {
        budget = budget || r.budget_exceeded;
        fail = fail || !r.pass;
    }
    if (budget) return 3;
    if (fail) return 1;
    return 0;
}

}  // namespace krstab
