#pragma once

#include <optional>
#include <vector>

#include "polymat/decompose.hpp"
#include "polymat/ideal.hpp"

namespace polymat {

/// Monomial localization I(p): substitute x_i -> 1 for every variable outside
/// p, then minimalize. The ambient variable set is kept, so localizations of
/// the same ideal compare as plain ideals.
inline MonomialIdeal monomial_localization(const MonomialIdeal& ideal, const MonomialPrime& p) {
    if (ideal.vars() != p.vars())
        throw std::invalid_argument("monomial_localization: mismatched variable sets");
    std::vector<bool> keep = p.member_mask();
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) gens.push_back(g.restricted_to(keep));
    return MonomialIdeal(ideal.vars(), std::move(gens));
}

/// Kill the listed variables (the complementary spelling).
inline MonomialIdeal localization_killing(const MonomialIdeal& ideal,
                                          const std::vector<int>& killed) {
    std::vector<bool> kill(static_cast<std::size_t>(ideal.vars().size()), false);
    for (int i : killed) kill.at(static_cast<std::size_t>(i)) = true;
    std::vector<int> keep;
    for (int i = 0; i < ideal.vars().size(); ++i)
        if (!kill[static_cast<std::size_t>(i)]) keep.push_back(i);
    return monomial_localization(ideal, MonomialPrime(ideal.vars(), std::move(keep)));
}

/// I(p) as the intersection of exactly those components whose support avoids
/// the killed variables. Must agree with monomial_localization.
inline MonomialIdeal localization_via_components(const Decomposition& dec,
                                                 const MonomialPrime& p) {
    if (dec.components.empty())
        throw std::invalid_argument("localization_via_components: empty decomposition");
    const VariableSet& vars = dec.components.front().vars();
    std::vector<bool> keep = p.member_mask();
    MonomialIdeal result = MonomialIdeal::unit(vars);
    for (const MonomialIdeal& q : dec.components) {
        bool survives = true;
        for (int i : q.support()) {
            if (!keep[static_cast<std::size_t>(i)]) {
                survives = false;
                break;
            }
        }
        if (survives) result = intersection(result, q);
    }
    return result;
}

struct SingleVariableLocalization {
    int max_exponent;                   // a_i = max deg_{x_i} over G(I)
    std::optional<int> degree;          // d_i = d - a_i when single-degree
    std::vector<Monomial> generators;   // { u / x_i^{a_i} : x_i^{a_i} | u }
};

/// The degree-drop form of the localization killing one variable: for I
/// generated in single degree d, I(p_{i}) is generated in degree d - a_i by
/// the generators of I divisible by x_i^{a_i}, provided the localization is
/// itself single-degree. When it is not, degree is empty and the generator
/// set is still returned.
inline SingleVariableLocalization single_variable_localization(const MonomialIdeal& ideal,
                                                               int var) {
    auto d = ideal.single_degree();
    if (!d)
        throw std::invalid_argument("single_variable_localization: not single-degree");

    int a = 0;
    for (const Monomial& g : ideal.gens()) a = std::max(a, g.degree_in(var));

    SingleVariableLocalization out;
    out.max_exponent = a;
    int n = ideal.vars().size();
    Monomial pivot = Monomial::variable(n, var, a);
    for (const Monomial& g : ideal.gens())
        if (pivot.divides(g)) out.generators.push_back(g.divided_by(pivot));

    MonomialIdeal localized = localization_killing(ideal, {var});
    if (localized.is_proper_nonzero()) {
        if (auto ld = localized.single_degree()) out.degree = *d - a;
    } else if (localized.is_unit()) {
        // a == d: the localization is the unit ideal, generated in degree 0.
        out.degree = *d - a;
    }
    return out;
}

}  // namespace polymat
