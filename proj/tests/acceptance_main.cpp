// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// 1. Fixture fidelity for the seven worked examples.
// 2. pc sweep (squarefree, n <= 5, d <= 4).
// 3. gc sweep (polymatroidal population, n <= 4, d <= 4).
// 4. prop2 sweep (degree-2 polymatroidal, n <= 5).
// 5. thm-mat sweep (matroidal, n <= 6, d in {3,4}).
// 6. Reisner oracle agreement (polarized variable count <= 10).
// 7. Randomized identities: component localization and J*m^{d-t}.
// 8. Property suite (>= 10^4 generated cases).

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

#include "polymat/polymat.hpp"

using namespace polymat;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool condition, const std::string& what) {
        if (!condition) problems_.push_back(what);
    }

    void finish(double limitSeconds = 0.0) {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (limitSeconds > 0 && elapsed > limitSeconds) {
            std::ostringstream s;
            s << "runtime " << elapsed << "s exceeds " << limitSeconds << "s";
            problems_.push_back(s.str());
        }
        if (problems_.empty()) {
            std::printf("CRITERION %d PASS  %s  (%.2fs)\n", number_, title_.c_str(), elapsed);
        } else {
            ++failures;
            std::printf("CRITERION %d FAIL  %s  (%.2fs)\n", number_, title_.c_str(), elapsed);
            for (const std::string& p : problems_) std::printf("    - %s\n", p.c_str());
        }
        std::fflush(stdout);
    }

private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> problems_;
};

MonomialIdeal nested_prime_powers() {
    return parse_ideal("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
}

MonomialIdeal four_prime_matroidal() {
    return parse_ideal("vars u,x,y,z,w (u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
}

MonomialIdeal three_block_matroidal() {
    VariableSet six = VariableSet::numbered(6);
    MonomialPrime p1(six, {0, 1, 2, 3});
    MonomialPrime p2(six, {2, 3, 4, 5});
    MonomialPrime p3(six, {0, 1, 4, 5});
    return intersection(intersection(p1.to_ideal(), p2.to_ideal()), p3.to_ideal());
}

void criterion_1() {
    Criterion c(1, "fixture fidelity for the seven worked examples");

    // Nested prime powers (x1) cap (x1,x2)^2 cap m^3: polymatroidal,
    // connected in codimension one, not unmixed, not gCM.
    {
        MonomialIdeal ideal = nested_prime_powers();
        VariableSet v3 = VariableSet::numbered(3);
        HVPresentation hv = hv_presentation(ideal);
        c.require(hv.prime_powers.size() == 2, "nested fixture: expected two prime powers");
        if (hv.prime_powers.size() == 2) {
            c.require(hv.prime_powers[0].prime == MonomialPrime(v3, {0}) &&
                          hv.prime_powers[0].exponent == 1,
                      "nested fixture: first component is not (x1)^1");
            c.require(hv.prime_powers[1].prime == MonomialPrime(v3, {0, 1}) &&
                          hv.prime_powers[1].exponent == 2,
                      "nested fixture: second component is not (x1,x2)^2");
        }
        c.require(hv.socle_exponent == 3, "nested fixture: socle exponent is not 3");
        c.require(is_polymatroidal(ideal).value, "nested fixture: not polymatroidal");
        c.require(is_connected_codim_one(ideal).connected, "nested fixture: not connected in codim 1");
        c.require(!is_unmixed(ideal), "nested fixture: unexpectedly unmixed");
        c.require(!is_generalized_cm(ideal).value, "nested fixture: unexpectedly gCM");
    }

    // Four-prime matroidal fixture: Ass = {(x,u),(x,z),(y,w),(z,u)}, unmixed
    // matroidal, not gCM with witness localization (uy, uw, yz, wz).
    {
        MonomialIdeal ideal = four_prime_matroidal();
        const VariableSet& v = ideal.vars();
        std::vector<MonomialPrime> expected{
            MonomialPrime(v, {0, 1}), MonomialPrime(v, {0, 3}),
            MonomialPrime(v, {1, 3}), MonomialPrime(v, {2, 4})};
        c.require(associated_primes(ideal) == expected, "four-prime fixture: wrong associated primes");
        c.require(is_unmixed(ideal), "four-prime fixture: not unmixed");
        c.require(is_matroidal(ideal), "four-prime fixture: not matroidal");
        c.require(!is_generalized_cm(ideal).value, "four-prime fixture: unexpectedly gCM");
        MonomialIdeal witness = localization_killing(ideal, {*v.index("x")});
        c.require(witness == parse_ideal("vars u,x,y,z,w (u*y, u*w, y*z, w*z)"),
                  "four-prime fixture: witness localization mismatch");
        c.require(!localization_is_cm(witness), "four-prime fixture: witness localization should not be CM");
    }

    // Clause fixtures: (x1) cap (x2^2) cap m^4 gives {a,b}; (x1) cap (x2)
    // cap m^3 gives {a,c}; the three-block matroidal ideal gives {b,c}.
    {
        VariableSet two = VariableSet::numbered(2);
        MonomialIdeal j1 = intersection(MonomialIdeal(two, {Monomial::variable(2, 0)}),
                                        MonomialIdeal(two, {Monomial::variable(2, 1, 2)}));
        TheoremThReport r1 = theorem_th_classify(j1, 4);
        c.require(r1.clause_a && r1.clause_b && !r1.clause_c && r1.consistent(),
                  "clause fixture: set is not {a,b}");

        VariableSet three = VariableSet::numbered(3);
        MonomialIdeal j2 = intersection(MonomialIdeal(three, {Monomial::variable(3, 0)}),
                                        MonomialIdeal(three, {Monomial::variable(3, 1)}));
        TheoremThReport r2 = theorem_th_classify(j2, 3);
        c.require(r2.clause_a && !r2.clause_b && r2.clause_c && r2.consistent(),
                  "clause fixture: set is not {a,c}");

        TheoremThReport r3 = theorem_th_classify(three_block_matroidal(), 0);
        c.require(!r3.clause_a && r3.clause_b && r3.clause_c && r3.consistent(),
                  "clause fixture: set is not {b,c}");
    }

    // (x1,x2) cap (x2,x3)^2 cap m^3 is polymatroidal and gCM.
    {
        VariableSet three = VariableSet::numbered(3);
        MonomialIdeal ideal = intersection(
            intersection(MonomialPrime(three, {0, 1}).to_ideal(),
                         MonomialPrime(three, {1, 2}).power_ideal(2)),
            MonomialPrime::maximal(three).power_ideal(3));
        c.require(is_polymatroidal(ideal).value, "pairwise-maximal fixture: not polymatroidal");
        c.require(is_generalized_cm(ideal).value, "pairwise-maximal fixture: not gCM");
    }

    // (x1^2, x1x2, x1x3, x2x3): equidimensional but not unmixed.
    {
        MonomialIdeal ideal = parse_ideal("(x1^2, x1*x2, x1*x3, x2*x3)");
        c.require(is_equidimensional(ideal), "embedded fixture: not equidimensional");
        c.require(!is_unmixed(ideal), "embedded fixture: unexpectedly unmixed");
    }

    c.finish(1.0);
}

void run_suite_criterion(int number, const std::string& title, const std::string& suite,
                         double limitSeconds) {
    Criterion c(number, title);
    SuiteReport report = run_suite(suite);
    c.require(!report.budget_exceeded, "work budget exceeded");
    for (const std::string& ce : report.counterexamples) c.require(false, ce);
    for (const std::string& w : report.warnings) std::printf("    warning: %s\n", w.c_str());
    c.finish(limitSeconds);
}

void criterion_7() {
    Criterion c(7, "component-localization and cap-prod identities, 1000 randomized instances each");
    SuiteParams params;
    params.cases = 1000;
    SuiteReport remarkQ = run_suite("remark-q", params);
    c.require(remarkQ.passed() && remarkQ.population == 1000,
              "remark-q: failures or wrong case count");
    for (const std::string& ce : remarkQ.counterexamples) c.require(false, ce);
    SuiteReport capProd = run_suite("cap-prod", params);
    c.require(capProd.passed() && capProd.population == 1000,
              "cap-prod: failures or wrong case count");
    for (const std::string& ce : capProd.counterexamples) c.require(false, ce);
    c.finish(120.0);
}

std::vector<Monomial> monomials_up_to_degree(int n, int maxDegree) {
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == n) {
            out.emplace_back(exps);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(idx)] = e;
            self(self, idx + 1, remaining - e);
        }
        exps[static_cast<std::size_t>(idx)] = 0;
    };
    rec(rec, 0, maxDegree);
    return out;
}

MonomialIdeal random_proper_ideal(std::mt19937_64& rng, int n, int maxDeg, int maxGens) {
    std::uniform_int_distribution<int> pickCount(1, maxGens);
    std::uniform_int_distribution<int> pickDeg(1, maxDeg);
    std::uniform_int_distribution<int> pickVar(0, n - 1);
    std::vector<Monomial> gens;
    int count = pickCount(rng);
    for (int i = 0; i < count; ++i) {
        int d = pickDeg(rng);
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < d; ++k) ++exps[static_cast<std::size_t>(pickVar(rng))];
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(VariableSet::numbered(n), std::move(gens));
}

void criterion_8() {
    Criterion c(8, "property suite: minimalize, membership, localization, hv");
    std::mt19937_64 rng(0xACCE97);
    std::uint64_t cases = 0;

    // Minimalize idempotence and order independence.
    for (int trial = 0; trial < 4000; ++trial) {
        MonomialIdeal ideal = random_proper_ideal(rng, 4, 4, 6);
        std::vector<Monomial> shuffled(ideal.gens().begin(), ideal.gens().end());
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        ++cases;
        if (MonomialIdeal(ideal.vars(), shuffled) != ideal) {
            c.require(false, "minimalize not order-independent: " + render(ideal));
            break;
        }
    }

    // Intersection (and sum) against brute-force membership.
    for (int trial = 0; trial < 400; ++trial) {
        MonomialIdeal a = random_proper_ideal(rng, 3, 3, 3);
        MonomialIdeal b = random_proper_ideal(rng, 3, 3, 3);
        MonomialIdeal meet = intersection(a, b);
        MonomialIdeal join = sum(a, b);
        int maxDeg = std::max(a.max_generator_degree(), b.max_generator_degree()) + 2;
        bool ok = true;
        for (const Monomial& m : monomials_up_to_degree(3, maxDeg)) {
            ++cases;
            if (meet.contains(m) != (a.contains(m) && b.contains(m))) ok = false;
            if (join.contains(m) != (a.contains(m) || b.contains(m))) ok = false;
        }
        if (!ok) {
            c.require(false, "intersection/sum membership mismatch: " + render(a) + " vs " +
                                 render(b));
            break;
        }
    }

    // Localizations of polymatroidal ideals are polymatroidal, and the hv
    // presentation re-intersects to the ideal.
    detail::SuiteContext ctx;
    ctx.budget.limit = default_budget();
    auto pool = detail::polymatroidal_pool(ctx, 3, 3);
    for (const MonomialIdeal& ideal : pool) {
        int n = ideal.vars().size();
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i)
                if (mask & (std::uint32_t{1} << i)) members.push_back(i);
            MonomialIdeal localized =
                monomial_localization(ideal, MonomialPrime(ideal.vars(), members));
            ++cases;
            if (localized.is_proper_nonzero() && !is_polymatroidal(localized).value) {
                c.require(false, "localization not polymatroidal: " + render(ideal));
                break;
            }
        }

        ++cases;
        if (recognize_cm_shape(ideal).is_cm() && !is_generalized_cm(ideal).value)
            c.require(false, "CM ideal not gCM: " + render(ideal));

        ++cases;
        HVPresentation hv = hv_presentation(ideal);
        MonomialIdeal back = MonomialIdeal::unit(ideal.vars());
        for (const PrimePower& pp : hv.prime_powers)
            back = intersection(back, pp.prime.power_ideal(pp.exponent));
        if (hv.socle_exponent > 0)
            back = intersection(
                back, MonomialPrime::maximal(ideal.vars()).power_ideal(hv.socle_exponent));
        if (back != ideal) {
            c.require(false, "hv presentation does not re-intersect: " + render(ideal));
        }
        auto d = ideal.single_degree();
        if (hv.socle_exponent > 0 && d && hv.socle_exponent != *d)
            c.require(false, "hv socle exponent differs from degree: " + render(ideal));
    }

    std::ostringstream note;
    note << cases << " cases";
    c.require(cases >= 10'000, "fewer than 10^4 cases (" + note.str() + ")");
    std::printf("    property cases: %llu\n", static_cast<unsigned long long>(cases));
    c.finish(300.0);
}

}  // namespace

int main() {
    criterion_1();
    run_suite_criterion(2, "pc sweep: squarefree n <= 5, d <= 4", "pc", 120.0);
    run_suite_criterion(3, "gc sweep: polymatroidal n <= 4, d <= 4", "gc", 300.0);
    run_suite_criterion(4, "prop2 sweep: degree-2 polymatroidal n <= 5", "prop2", 120.0);
    run_suite_criterion(5, "thm-mat sweep: matroidal n <= 6, d in {3,4}", "thm-mat", 300.0);
    run_suite_criterion(6, "Reisner oracle agreement, polarized size <= 10", "oracle-agreement",
                        600.0);
    criterion_7();
    criterion_8();

    if (failures == 0) {
        std::printf("OVERALL: all 8 criteria PASS\n");
        return 0;
    }
    std::printf("OVERALL: %d criteria FAILED\n", failures);
    return 1;
}
