#pragma once

#include <optional>
#include <vector>

#include "polymat/decompose.hpp"
#include "polymat/ideal.hpp"
#include "polymat/localize.hpp"
#include "polymat/polymatroid.hpp"

namespace polymat {

/// Cohen-Macaulay test for polymatroidal ideals: exactly the principal /
/// Veronese / squarefree Veronese shapes.
inline bool is_cm_polymatroidal(const MonomialIdeal& ideal) {
    if (!is_polymatroidal(ideal).value)
        throw std::invalid_argument("is_cm_polymatroidal: ideal is not polymatroidal");
    return recognize_cm_shape(ideal).is_cm();
}

/// CM decision for a monomial localization of a polymatroidal ideal: the
/// unit ideal counts as Cohen-Macaulay, otherwise the localization is again
/// polymatroidal and the shape trichotomy decides.
inline bool localization_is_cm(const MonomialIdeal& localized) {
    if (localized.is_unit()) return true;
    if (localized.is_zero()) throw std::invalid_argument("localization_is_cm: zero ideal");
    return recognize_cm_shape(localized).is_cm();
}

struct GcmVerdict {
    bool value = false;
    bool equidimensional = false;
    std::optional<MonomialPrime> witness;  // first monomial prime with non-CM localization

    explicit operator bool() const { return value; }
};

/// Generalized Cohen-Macaulay via the localization criterion: I is gCM iff
/// it is equidimensional and I(p) is Cohen-Macaulay for every monomial prime
/// p != m. The primes run over all proper nonempty subsets of the variables,
/// in order of size then members.
inline GcmVerdict is_generalized_cm(const MonomialIdeal& ideal) {
    if (!is_polymatroidal(ideal).value)
        throw std::invalid_argument("is_generalized_cm: ideal is not polymatroidal");
    GcmVerdict verdict;
    verdict.equidimensional = is_equidimensional(ideal);
    if (!verdict.equidimensional) return verdict;

    int n = ideal.vars().size();
    std::vector<int> subset;
    auto sweep = [&](auto&& self, int start, int size) -> std::optional<MonomialPrime> {
        if (static_cast<int>(subset.size()) == size) {
            MonomialPrime p(ideal.vars(), subset);
            if (!localization_is_cm(monomial_localization(ideal, p))) return p;
            return std::nullopt;
        }
        for (int i = start; i < n; ++i) {
            subset.push_back(i);
            if (auto failed = self(self, i + 1, size)) return failed;
            subset.pop_back();
        }
        return std::nullopt;
    };
    for (int size = 1; size < n; ++size) {
        subset.clear();
        if (auto failed = sweep(sweep, 0, size)) {
            verdict.witness = *failed;
            return verdict;
        }
    }
    verdict.value = true;
    return verdict;
}

/// J * m^{d-t} for J generated in single degree t <= d; checked against the
/// identity J * m^{d-t} == J cap m^d.
inline MonomialIdeal cap_prod(const MonomialIdeal& j, int d) {
    if (!j.is_proper_nonzero()) throw std::invalid_argument("cap_prod: zero or unit ideal");
    auto t = j.single_degree();
    if (!t) throw std::invalid_argument("cap_prod: ideal is not generated in a single degree");
    if (d < *t) throw std::invalid_argument("cap_prod: d must be at least the generation degree");
    MonomialIdeal viaProduct =
        product(j, MonomialPrime::maximal(j.vars()).power_ideal(d - *t));
    MonomialIdeal viaIntersection =
        intersection(j, MonomialPrime::maximal(j.vars()).power_ideal(d));
    if (viaProduct != viaIntersection)
        throw std::logic_error("cap_prod: J*m^{d-t} != J cap m^d");
    return viaProduct;
}

/// The m-saturation I : m^infinity, i.e. the intersection of the primary
/// components whose radical is not the maximal ideal (the unit ideal when I
/// is m-primary).
inline MonomialIdeal saturate(const MonomialIdeal& ideal) {
    Decomposition dec = primary_decomposition(ideal);
    MonomialIdeal result = MonomialIdeal::unit(ideal.vars());
    for (std::size_t i = 0; i < dec.components.size(); ++i)
        if (!dec.primes[i].is_maximal()) result = intersection(result, dec.components[i]);
    return result;
}

struct TheoremThReport {
    bool clause_a = false;  // J is a CM polymatroidal ideal
    bool clause_b = false;  // J equidimensional intersection of prime powers, pairwise sums = m
    bool clause_c = false;  // J unmixed matroidal of degree 2
    bool polymatroidal = false;
    bool gcm = false;  // meaningful only when polymatroidal
    MonomialIdeal ideal;   // I = J cap m^s
    int degree = 0;
    int socle_exponent = 0;

    bool any_clause() const { return clause_a || clause_b || clause_c; }
    bool consistent() const { return any_clause() == (polymatroidal && gcm); }
};

namespace detail {

/// Clause (b): J is an equidimensional intersection of powers of pairwise
/// m-summing primes. Vacuously true for the unit ideal (r = 0). An m-primary
/// part in J rules the presentation out.
inline bool theorem_th_clause_b(const MonomialIdeal& j) {
    if (j.is_unit()) return true;
    auto ass = associated_primes(j);
    for (const auto& p : ass)
        if (p.is_maximal()) return false;
    std::vector<MonomialPrime> primes = ass;
    std::vector<int> exps;
    exps.reserve(primes.size());
    for (const auto& p : primes) exps.push_back(p.containment_exponent(j));
    if (hv_intersection(j.vars(), primes, exps, 0) != j) return false;
    if (!is_equidimensional(j)) return false;
    int n = j.vars().size();
    for (std::size_t a = 0; a < primes.size(); ++a)
        for (std::size_t b = a + 1; b < primes.size(); ++b)
            if (primes[a].sum(primes[b]).height() != n) return false;
    return true;
}

}  // namespace detail

/// The generalized Cohen-Macaulay trichotomy: for I = J cap m^s fully
/// supported and generated in degree d with s in {0, d}, I is a gCM
/// polymatroidal ideal iff one of the clauses holds for J. The clauses are
/// evaluated on the J that is passed in; the canonical choice is the
/// m-saturation of I (see canonical_theorem_th_input).
inline TheoremThReport theorem_th_classify(const MonomialIdeal& j, int s) {
    if (s < 0) throw std::invalid_argument("theorem_th_classify: negative socle exponent");
    if (j.is_zero()) throw std::invalid_argument("theorem_th_classify: zero ideal");
    MonomialIdeal ideal =
        s == 0 ? j : intersection(j, MonomialPrime::maximal(j.vars()).power_ideal(s));
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("theorem_th_classify: I = J cap m^s is not proper");
    if (!ideal.is_fully_supported())
        throw std::invalid_argument("theorem_th_classify: I is not fully supported");
    auto d = ideal.single_degree();
    if (!d) throw std::invalid_argument("theorem_th_classify: I is not single-degree");
    if (s != 0 && s != *d)
        throw std::invalid_argument("theorem_th_classify: s must be 0 or the degree of I");

    TheoremThReport report{.ideal = ideal};
    report.degree = *d;
    report.socle_exponent = s;
    report.clause_a = j.is_proper_nonzero() && recognize_cm_shape(j).is_cm();
    report.clause_b = detail::theorem_th_clause_b(j);
    if (j.is_proper_nonzero()) {
        auto jd = j.single_degree();
        report.clause_c = jd == 2 && is_matroidal(j) && is_unmixed(j);
    }
    report.polymatroidal = is_polymatroidal(ideal).value;
    if (report.polymatroidal) report.gcm = is_generalized_cm(ideal).value;
    return report;
}

/// The canonical (J, s) for an ideal: J is the m-saturation and s is the
/// generation degree when m is associated, 0 otherwise. Returns nothing when
/// I != J cap m^s (then I is not of the theorem's shape, and in particular
/// not polymatroidal).
inline std::optional<std::pair<MonomialIdeal, int>> canonical_theorem_th_input(
    const MonomialIdeal& ideal) {
    auto d = ideal.single_degree();
    if (!d) return std::nullopt;
    MonomialIdeal j = saturate(ideal);
    int s = (j == ideal) ? 0 : *d;
    MonomialIdeal check =
        s == 0 ? j : intersection(j, MonomialPrime::maximal(ideal.vars()).power_ideal(s));
    if (check != ideal) return std::nullopt;
    return std::make_pair(std::move(j), s);
}

struct AkharReport {
    bool pairwise_sums_maximal = false;  // p + q = m for all distinct p, q in Ass(S/I)
    bool polymatroidal = false;
    /// I equals the intersection of the maximal powers of its associated
    /// primes. The pairwise-sum criterion characterizes polymatroidal ideals
    /// exactly on this class; polymatroidal ideals always belong to it.
    bool intersection_type = false;
};

/// Degree-2 pairwise-sum criterion for fully supported ideals.
inline AkharReport lemma_akhar_check(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("lemma_akhar_check: zero or unit ideal");
    if (!ideal.is_fully_supported())
        throw std::invalid_argument("lemma_akhar_check: ideal is not fully supported");
    if (ideal.single_degree() != 2)
        throw std::invalid_argument("lemma_akhar_check: ideal is not generated in degree 2");

    AkharReport report;
    auto ass = associated_primes(ideal);
    int n = ideal.vars().size();
    report.pairwise_sums_maximal = true;
    for (std::size_t a = 0; a < ass.size(); ++a)
        for (std::size_t b = a + 1; b < ass.size(); ++b)
            if (ass[a].sum(ass[b]).height() != n) report.pairwise_sums_maximal = false;

    std::vector<int> exps;
    exps.reserve(ass.size());
    for (const auto& p : ass) exps.push_back(p.containment_exponent(ideal));
    report.intersection_type = detail::hv_intersection(ideal.vars(), ass, exps, 0) == ideal;
    report.polymatroidal = is_polymatroidal(ideal).value;
    return report;
}

}  // namespace polymat
