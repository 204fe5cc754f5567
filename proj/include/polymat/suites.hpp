#pragma once

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polymat/cm_classify.hpp"
#include "polymat/codim1.hpp"
#include "polymat/enumerate.hpp"
#include "polymat/localize.hpp"
#include "polymat/parse.hpp"
#include "polymat/polymatroid.hpp"
#include "polymat/sr_oracle.hpp"

namespace polymat {

struct SuiteParams {
    int max_n = 0;            // 0 = suite default
    int max_d = 0;            // 0 = suite default
    std::uint64_t budget = 0; // 0 = POLYMAT_BUDGET env or 10^7
    std::uint64_t cases = 0;  // randomized suites; 0 = 1000
};

struct SuiteReport {
    std::string name;
    std::uint64_t population = 0;  // candidates examined (budget charges)
    std::map<std::string, std::uint64_t> counts;
    std::vector<std::string> counterexamples;
    std::vector<std::string> warnings;
    double elapsed_seconds = 0.0;
    std::uint64_t budget_limit = 0;
    std::uint64_t budget_used = 0;
    bool budget_exceeded = false;

    bool passed() const { return counterexamples.empty() && !budget_exceeded; }
};

inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("POLYMAT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return 10'000'000;
}

namespace detail {

struct SuiteContext {
    SuiteReport report;
    Budget budget;
    int max_n = 0;
    int max_d = 0;
    std::uint64_t cases = 1000;
    unsigned seed = 0x5eed2024;

    void candidate() {
        ++report.population;
        budget.charge();
    }
    void tally(const std::string& key, std::uint64_t by = 1) { report.counts[key] += by; }
    void fail(const MonomialIdeal& ideal, const std::string& why) {
        if (report.counterexamples.size() < 64)
            report.counterexamples.push_back(render(ideal) + "  [" + why + "]");
        else if (report.counterexamples.size() == 64)
            report.counterexamples.push_back("... further counterexamples suppressed");
    }
    void warn(const std::string& message) { report.warnings.push_back(message); }
};

template <typename Fn>
void scan_single_degree(SuiteContext& ctx, int n, int d, bool squarefree, Fn&& fn) {
    SingleDegreeEnumerator en(n, d, squarefree);
    std::vector<Monomial> scratch;
    while (en.next_subset(scratch)) {
        ctx.candidate();
        fn(en.vars(), std::span<const Monomial>(scratch));
    }
}

/// Shared polymatroidal population: Veronese-type seeds, prime-power
/// intersections, and raw subset enumeration where the monomial count stays
/// small. Deduplicated and deterministic.
inline std::vector<MonomialIdeal> polymatroidal_pool(SuiteContext& ctx, int max_n, int max_d) {
    IdealPool pool;
    for (int n = 1; n <= max_n; ++n) {
        seed_veronese_type(pool, n, max_d);
        if (n >= 2) seed_prime_power_intersections(pool, n, max_d, 3, ctx.budget);
        for (int d = 1; d <= max_d; ++d) {
            if (degree_d_monomials(n, d, false).size() > 15) continue;
            scan_single_degree(ctx, n, d, false,
                               [&](const VariableSet& vars, std::span<const Monomial> gens) {
                                   if (exchange_property(vars.size(), gens, false).value)
                                       pool.insert(MonomialIdeal(vars, {gens.begin(), gens.end()}));
                               });
        }
    }
    std::vector<MonomialIdeal> out;
    for (const MonomialIdeal& ideal : pool.sorted()) {
        ctx.candidate();
        if (!ideal.is_proper_nonzero()) continue;
        if (is_polymatroidal(ideal).value) out.push_back(ideal);
    }
    ctx.tally("polymatroidal_population", out.size());
    return out;
}

// --- the registered suites -------------------------------------------------

/// poly2: an unmixed fully supported polymatroidal ideal of degree 2 is
/// matroidal or m^2.
inline void suite_poly2(SuiteContext& ctx) {
    auto pool = polymatroidal_pool(ctx, ctx.max_n, 2);
    for (const MonomialIdeal& ideal : pool) {
        if (ideal.single_degree() != 2) continue;
        if (!ideal.is_fully_supported() || !is_unmixed(ideal)) continue;
        ctx.tally("unmixed_fully_supported_degree2");
        MonomialIdeal m2 = MonomialPrime::maximal(ideal.vars()).power_ideal(2);
        if (!is_matroidal(ideal) && ideal != m2)
            ctx.fail(ideal, "neither matroidal nor m^2");
    }
}

/// xjd: an unmixed fully supported polymatroidal ideal of degree d
/// containing a pure power x_j^d equals m^d.
inline void suite_xjd(SuiteContext& ctx) {
    auto pool = polymatroidal_pool(ctx, ctx.max_n, ctx.max_d);
    for (const MonomialIdeal& ideal : pool) {
        auto d = ideal.single_degree();
        if (!d || !ideal.is_fully_supported() || !is_unmixed(ideal)) continue;
        int n = ideal.vars().size();
        bool hasPower = false;
        for (int j = 0; j < n && !hasPower; ++j)
            if (ideal.contains(Monomial::variable(n, j, *d))) hasPower = true;
        if (!hasPower) continue;
        ctx.tally("unmixed_with_pure_power");
        if (ideal != MonomialPrime::maximal(ideal.vars()).power_ideal(*d))
            ctx.fail(ideal, "contains x_j^d but is not m^d");
    }
}

/// veronese-type: such ideals are unmixed iff Min = Ass iff they have a
/// Cohen-Macaulay shape.
inline void suite_veronese_type(SuiteContext& ctx) {
    for (int n = 1; n <= ctx.max_n; ++n) {
        VariableSet vars = VariableSet::numbered(n);
        for (int d = 1; d <= ctx.max_d; ++d) {
            std::vector<int> caps(static_cast<std::size_t>(n), 0);
            auto rec = [&](auto&& self, int idx) -> void {
                if (idx == n) {
                    long total = 0;
                    for (int c : caps) total += c;
                    if (total < d) return;
                    ctx.candidate();
                    MonomialIdeal ideal = veronese_type(vars, d, caps);
                    bool unmixed = is_unmixed(ideal);
                    bool minIsAss = associated_primes(ideal) == minimal_primes(ideal);
                    bool cm = recognize_cm_shape(ideal).is_cm();
                    if (unmixed != minIsAss || minIsAss != cm)
                        ctx.fail(ideal, "unmixed / Min=Ass / CM shape disagree");
                    ctx.tally(cm ? "cm" : "not_cm");
                    return;
                }
                for (int c = 0; c <= d; ++c) {
                    caps[static_cast<std::size_t>(idx)] = c;
                    self(self, idx + 1);
                }
            };
            rec(rec, 0);
        }
    }
}

/// pc: matroidal + connected in codimension one iff squarefree Veronese on
/// the support.
inline void suite_pc(SuiteContext& ctx) {
    for (int n = 1; n <= ctx.max_n; ++n) {
        for (int d = 1; d <= std::min(n, ctx.max_d); ++d) {
            scan_single_degree(ctx, n, d, true,
                               [&](const VariableSet& vars, std::span<const Monomial> gens) {
                                   MonomialIdeal ideal(vars, {gens.begin(), gens.end()});
                                   bool lhs = is_matroidal(ideal) &&
                                              is_connected_codim_one(ideal).connected;
                                   bool rhs = is_squarefree_veronese(ideal);
                                   if (lhs) ctx.tally("matroidal_connected");
                                   if (lhs != rhs)
                                       ctx.fail(ideal, lhs ? "connected matroidal but not sq-free Veronese"
                                                           : "sq-free Veronese but not connected matroidal");
                               });
        }
    }
}

/// gc: an unmixed polymatroidal ideal is connected in codimension one iff
/// it is Cohen-Macaulay.
inline void suite_gc(SuiteContext& ctx) {
    auto pool = polymatroidal_pool(ctx, ctx.max_n, ctx.max_d);
    for (const MonomialIdeal& ideal : pool) {
        if (!is_unmixed(ideal)) continue;
        ctx.tally("unmixed");
        bool connected = is_connected_codim_one(ideal).connected;
        bool cm = recognize_cm_shape(ideal).is_cm();
        if (connected != cm)
            ctx.fail(ideal, connected ? "connected but not CM" : "CM but not connected");
    }
}

/// d2-support: for unmixed fully supported polymatroidal ideals connected
/// in codimension one, each single-variable localization has empty support
/// or support equal to everything but that variable.
inline void suite_d2_support(SuiteContext& ctx) {
    auto pool = polymatroidal_pool(ctx, ctx.max_n, ctx.max_d);
    for (const MonomialIdeal& ideal : pool) {
        if (!ideal.is_fully_supported() || !is_unmixed(ideal)) continue;
        if (!is_connected_codim_one(ideal).connected) continue;
        ctx.tally("connected_unmixed_fully_supported");
        int n = ideal.vars().size();
        for (int i = 0; i < n; ++i) {
            MonomialIdeal localized = localization_killing(ideal, {i});
            auto supp = localized.support();
            if (supp.empty()) continue;
            std::vector<int> allButI;
            for (int j = 0; j < n; ++j)
                if (j != i) allButI.push_back(j);
            if (supp != allButI) {
                ctx.fail(ideal, "localization support is neither empty nor everything else");
                break;
            }
        }
    }
}

/// lemma-h: unmixed fully supported non-squarefree polymatroidal ideals
/// with height > 1 never have height n-1.
inline void suite_lemma_h(SuiteContext& ctx) {
    auto pool = polymatroidal_pool(ctx, ctx.max_n, ctx.max_d);
    for (const MonomialIdeal& ideal : pool) {
        if (!ideal.is_fully_supported() || !is_unmixed(ideal)) continue;
        if (ideal.is_squarefree()) continue;
        int h = height(ideal);
        if (h <= 1) continue;
        ctx.tally("in_hypothesis");
        if (h == ideal.vars().size() - 1) ctx.fail(ideal, "height equals n-1");
    }
}

/// lemma-loc: conditions (a), (b), (c) agree on matroidal ideals whenever
/// the hypothesis holds.
inline void suite_lemma_loc(SuiteContext& ctx) {
    for (int n = 2; n <= ctx.max_n; ++n) {
        for (int d = 1; d <= std::min(n, ctx.max_d); ++d) {
            scan_single_degree(ctx, n, d, true,
                               [&](const VariableSet& vars, std::span<const Monomial> gens) {
                                   MonomialIdeal ideal(vars, {gens.begin(), gens.end()});
                                   if (!is_matroidal(ideal)) return;
                                   auto supp = ideal.support();
                                   for (std::uint32_t mask = 1;
                                        mask < (std::uint32_t{1} << supp.size()); ++mask) {
                                       std::vector<int> T;
                                       for (std::size_t i = 0; i < supp.size(); ++i)
                                           if (mask & (std::uint32_t{1} << i))
                                               T.push_back(supp[i]);
                                       LemmaLocReport r = lemma_loc_equivalence(ideal, T);
                                       if (!r.hypothesis_ok) continue;
                                       ctx.tally("instances");
                                       if (r.a != r.b || r.b != r.c)
                                           ctx.fail(ideal, "conditions (a),(b),(c) disagree");
                                   }
                               });
        }
    }
}

/// prop2: fully supported degree-2 polymatroidal ideals are
/// equidimensional iff generalized Cohen-Macaulay. Full support matters:
/// gCM is not stable under adjoining unused variables, so each support
/// class is covered by the run at its own variable count.
inline void suite_prop2(SuiteContext& ctx) {
    for (int n = 2; n <= ctx.max_n; ++n) {
        scan_single_degree(ctx, n, 2, false,
                           [&](const VariableSet& vars, std::span<const Monomial> gens) {
                               if (!exchange_property(vars.size(), gens, false).value) return;
                               MonomialIdeal ideal(vars, {gens.begin(), gens.end()});
                               if (!ideal.is_fully_supported()) return;
                               ctx.tally("degree2_polymatroidal");
                               bool equi = is_equidimensional(ideal);
                               bool gcm = is_generalized_cm(ideal).value;
                               if (equi != gcm)
                                   ctx.fail(ideal, equi ? "equidimensional but not gCM"
                                                        : "gCM but not equidimensional");
                           });
    }
}

/// mat1: fully supported gCM matroidal ideals of degree > 2 have
/// every single-variable localization supported on all other variables.
inline void suite_mat1(SuiteContext& ctx) {
    for (int n = 3; n <= ctx.max_n; ++n) {
        for (int d = 3; d <= std::min(n, ctx.max_d); ++d) {
            scan_single_degree(ctx, n, d, true,
                               [&](const VariableSet& vars, std::span<const Monomial> gens) {
                                   if (!exchange_property(vars.size(), gens, false).value) return;
                                   MonomialIdeal ideal(vars, {gens.begin(), gens.end()});
                                   if (!ideal.is_fully_supported()) return;
                                   if (!is_generalized_cm(ideal).value) return;
                                   ctx.tally("gcm_matroidal");
                                   for (int i = 0; i < vars.size(); ++i) {
                                       auto supp = localization_killing(ideal, {i}).support();
                                       std::vector<int> allButI;
                                       for (int j = 0; j < vars.size(); ++j)
                                           if (j != i) allButI.push_back(j);
                                       if (supp != allButI) {
                                           ctx.fail(ideal, "localization not fully supported off x_i");
                                           break;
                                       }
                                   }
                               });
        }
    }
}

/// thm-mat: matroidal ideals of degree > 2 are gCM iff CM.
inline void suite_thm_mat(SuiteContext& ctx) {
    for (int n = 3; n <= ctx.max_n; ++n) {
        for (int d = 3; d <= std::min(n, ctx.max_d); ++d) {
            scan_single_degree(ctx, n, d, true,
                               [&](const VariableSet& vars, std::span<const Monomial> gens) {
                                   if (!exchange_property(vars.size(), gens, false).value) return;
                                   MonomialIdeal ideal(vars, {gens.begin(), gens.end()});
                                   ctx.tally("matroidal");
                                   bool gcm = is_generalized_cm(ideal).value;
                                   bool cm = recognize_cm_shape(ideal).is_cm();
                                   if (gcm != cm)
                                       ctx.fail(ideal, gcm ? "gCM but not CM" : "CM but not gCM");
                               });
        }
    }
}

/// exc: if I = J cap m^d is polymatroidal with J squarefree and all
/// generators of J of degree > 1, then J is matroidal.
inline void suite_exc(SuiteContext& ctx) {
    for (int n = 2; n <= ctx.max_n; ++n) {
        VariableSet vars = VariableSet::numbered(n);
        std::vector<Monomial> candidates;
        for (int d = 2; d <= n; ++d)
            for (const Monomial& m : degree_d_monomials(n, d, true)) candidates.push_back(m);
        if (candidates.size() > 62)
            throw BudgetExceeded("squarefree generator pool too large to enumerate");
        IdealPool pool;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
            std::vector<Monomial> gens;
            for (std::size_t b = 0; b < candidates.size(); ++b)
                if (mask & (std::uint64_t{1} << b)) gens.push_back(candidates[b]);
            ctx.candidate();
            pool.insert(MonomialIdeal(vars, std::move(gens)));
        }
        MonomialPrime maximal = MonomialPrime::maximal(vars);
        for (const MonomialIdeal& j : pool.sorted()) {
            int t = j.max_generator_degree();
            for (int d = t; d <= t + 1; ++d) {
                ctx.candidate();
                MonomialIdeal ideal = intersection(j, maximal.power_ideal(d));
                if (!is_polymatroidal(ideal).value) continue;
                ctx.tally("polymatroidal_products");
                if (!is_matroidal(j)) ctx.fail(j, "J not matroidal though J cap m^d polymatroidal");
            }
        }
    }
}

/// cap-prod as a randomized identity: J cap m^d = J * m^{d-t}.
inline void suite_cap_prod(SuiteContext& ctx) {
    std::mt19937_64 rng(ctx.seed);
    std::uniform_int_distribution<int> pickN(2, 4);
    std::uniform_int_distribution<int> pickT(1, 3);
    std::uniform_int_distribution<int> pickShift(0, 2);
    for (std::uint64_t i = 0; i < ctx.cases; ++i) {
        ctx.candidate();
        int n = pickN(rng);
        int t = pickT(rng);
        auto monos = degree_d_monomials(n, t, false);
        std::uniform_int_distribution<std::size_t> pickMono(0, monos.size() - 1);
        std::uniform_int_distribution<int> pickCount(1, 5);
        std::vector<Monomial> gens;
        int count = pickCount(rng);
        for (int g = 0; g < count; ++g) gens.push_back(monos[pickMono(rng)]);
        MonomialIdeal j(VariableSet::numbered(n), std::move(gens));
        int d = t + pickShift(rng);
        MonomialPrime maximal = MonomialPrime::maximal(j.vars());
        MonomialIdeal viaProduct = product(j, maximal.power_ideal(d - t));
        MonomialIdeal viaIntersection = intersection(j, maximal.power_ideal(d));
        if (viaProduct != viaIntersection) ctx.fail(j, "J*m^{d-t} != J cap m^d");
    }
}

/// thm-th: the gCM clause trichotomy on canonical (J, s) pairs.
inline void suite_thm_th(SuiteContext& ctx) {
    IdealPool pool;
    for (int n = 2; n <= std::min(ctx.max_n, 3); ++n) {
        for (int d = 1; d <= ctx.max_d; ++d) {
            if (degree_d_monomials(n, d, false).size() > 15) continue;
            scan_single_degree(ctx, n, d, false,
                               [&](const VariableSet& vars, std::span<const Monomial> gens) {
                                   pool.insert(MonomialIdeal(vars, {gens.begin(), gens.end()}));
                               });
        }
    }
    for (int n = 2; n <= ctx.max_n; ++n) {
        seed_prime_power_intersections(pool, n, std::min(ctx.max_d, 3), 3, ctx.budget);
        for (int s = 1; s <= ctx.max_d; ++s)
            pool.insert(MonomialPrime::maximal(VariableSet::numbered(n)).power_ideal(s));
    }
    for (const MonomialIdeal& ideal : pool.sorted()) {
        ctx.candidate();
        if (!ideal.is_proper_nonzero() || !ideal.is_fully_supported()) continue;
        if (!ideal.single_degree()) continue;
        auto canonical = canonical_theorem_th_input(ideal);
        if (!canonical) {
            // Outside the J cap m^s shape; Prop. poly rules out polymatroidal.
            if (is_polymatroidal(ideal).value)
                ctx.fail(ideal, "polymatroidal but I != sat(I) cap m^s");
            ctx.tally("outside_shape");
            continue;
        }
        TheoremThReport report = theorem_th_classify(canonical->first, canonical->second);
        ctx.tally("classified");
        if (report.any_clause()) ctx.tally("some_clause");
        if (!report.consistent())
            ctx.fail(ideal, report.any_clause() ? "clause holds but not gCM polymatroidal"
                                                : "gCM polymatroidal without a clause");
    }
}

/// akhar: on intersection-type degree-2 ideals the pairwise-sum
/// criterion characterizes polymatroidality; otherwise the ideal cannot be
/// polymatroidal at all.
inline void suite_akhar(SuiteContext& ctx) {
    for (int n = 2; n <= ctx.max_n; ++n) {
        scan_single_degree(ctx, n, 2, false,
                           [&](const VariableSet& vars, std::span<const Monomial> gens) {
                               MonomialIdeal ideal(vars, {gens.begin(), gens.end()});
                               if (!ideal.is_fully_supported()) return;
                               AkharReport r = lemma_akhar_check(ideal);
                               if (r.intersection_type) {
                                   ctx.tally("intersection_type");
                                   if (r.pairwise_sums_maximal != r.polymatroidal)
                                       ctx.fail(ideal, "pairwise-sum criterion disagrees");
                               } else {
                                   ctx.tally("not_intersection_type");
                                   if (r.polymatroidal)
                                       ctx.fail(ideal, "polymatroidal without prime-power presentation");
                               }
                           });
    }
}

/// Oracle agreement: the Reisner homology oracle over Q matches the CM shape
/// recognizer on every enumerated polymatroidal ideal; F_2 verdicts logged.
inline void suite_oracle_agreement(SuiteContext& ctx) {
    auto pool = polymatroidal_pool(ctx, ctx.max_n, ctx.max_d);
    for (const MonomialIdeal& ideal : pool) {
        if (polarized_variable_count(ideal) > 10) {
            ctx.tally("skipped_large_polarization");
            continue;
        }
        ctx.tally("compared");
        bool viaShape = recognize_cm_shape(ideal).is_cm();
        bool viaReisner = is_cm_reisner(ideal, FieldSpec::rationals());
        if (viaShape != viaReisner)
            ctx.fail(ideal, viaShape ? "shape CM, oracle says not CM"
                                     : "oracle CM, shape says not CM");
        bool viaF2 = is_cm_reisner(ideal, FieldSpec::prime(2));
        if (viaF2 != viaReisner) {
            ctx.tally("f2_disagreements");
            ctx.warn("F2/Q disagreement on " + render(ideal));
        }
    }
}

/// remark-q: localization distributes over primary components.
inline void suite_remark_q(SuiteContext& ctx) {
    std::mt19937_64 rng(ctx.seed);
    for (std::uint64_t i = 0; i < ctx.cases; ++i) {
        ctx.candidate();
        MonomialIdeal ideal = random_ideal(rng, 4, 4, 4);
        if (!ideal.is_proper_nonzero()) continue;
        Decomposition dec = primary_decomposition(ideal);
        int n = ideal.vars().size();
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            std::vector<int> members;
            for (int v = 0; v < n; ++v)
                if (mask & (std::uint32_t{1} << v)) members.push_back(v);
            MonomialPrime p(ideal.vars(), members);
            if (localization_via_components(dec, p) != monomial_localization(ideal, p)) {
                ctx.fail(ideal, "component localization mismatch");
                break;
            }
        }
    }
}

struct SuiteSpec {
    int default_n;
    int default_d;
    std::function<void(SuiteContext&)> run;
};

inline const std::map<std::string, SuiteSpec>& suite_registry() {
    static const std::map<std::string, SuiteSpec> registry = {
        {"poly2", {4, 2, suite_poly2}},
        {"xjd", {4, 3, suite_xjd}},
        {"veronese-type", {4, 4, suite_veronese_type}},
        {"pc", {5, 4, suite_pc}},
        {"gc", {4, 4, suite_gc}},
        {"d2-support", {4, 3, suite_d2_support}},
        {"lemma-h", {4, 4, suite_lemma_h}},
        {"lemma-loc", {5, 3, suite_lemma_loc}},
        {"prop2", {5, 2, suite_prop2}},
        {"mat1", {6, 4, suite_mat1}},
        {"thm-mat", {6, 4, suite_thm_mat}},
        {"exc", {4, 4, suite_exc}},
        {"cap-prod", {4, 4, suite_cap_prod}},
        {"thm-th", {4, 3, suite_thm_th}},
        {"akhar", {4, 2, suite_akhar}},
        {"oracle-agreement", {4, 3, suite_oracle_agreement}},
        {"remark-q", {4, 4, suite_remark_q}},
    };
    return registry;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, entry] : detail::suite_registry()) names.push_back(name);
    return names;
}

/// Runs one registered suite. Unknown names throw; budget exhaustion is
/// reported, not thrown.
inline SuiteReport run_suite(const std::string& name, const SuiteParams& params = {}) {
    auto it = detail::suite_registry().find(name);
    if (it == detail::suite_registry().end())
        throw std::invalid_argument("unknown suite '" + name + "'");

    detail::SuiteContext ctx;
    ctx.report.name = name;
    ctx.max_n = params.max_n > 0 ? params.max_n : it->second.default_n;
    ctx.max_d = params.max_d > 0 ? params.max_d : it->second.default_d;
    ctx.cases = params.cases > 0 ? params.cases : 1000;
    ctx.budget.limit = params.budget > 0 ? params.budget : default_budget();
    ctx.report.budget_limit = ctx.budget.limit;

    auto start = std::chrono::steady_clock::now();
    try {
        it->second.run(ctx);
    } catch (const BudgetExceeded&) {
        ctx.report.budget_exceeded = true;
    }
    auto end = std::chrono::steady_clock::now();
    ctx.report.elapsed_seconds = std::chrono::duration<double>(end - start).count();
    ctx.report.budget_used = ctx.budget.used;
    return ctx.report;
}

}  // namespace polymat
