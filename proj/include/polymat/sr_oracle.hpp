#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polymat/homology.hpp"
#include "polymat/ideal.hpp"
#include "polymat/simplicial.hpp"

namespace polymat {

struct Polarization {
    MonomialIdeal ideal;                      // squarefree, over the enlarged ring
    std::vector<std::pair<int, int>> origin;  // new index -> (original var, copy number)
    bool identity = false;                    // input was already squarefree
};

/// Polarization: x_i with maximal exponent e_i >= 2 expands into fresh
/// variables x_i#1..x_i#e_i and x_i^k maps to the product of the first k
/// copies. Squarefree input is returned unchanged. Cohen-Macaulayness is
/// preserved, which is what makes the Reisner oracle applicable to
/// non-squarefree ideals.
inline Polarization polarize(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("polarize: zero or unit ideal");
    int n = ideal.vars().size();
    std::vector<int> maxExp(static_cast<std::size_t>(n), 0);
    for (const Monomial& g : ideal.gens())
        for (int i = 0; i < n; ++i)
            maxExp[static_cast<std::size_t>(i)] =
                std::max(maxExp[static_cast<std::size_t>(i)], g.degree_in(i));

    bool squarefree = ideal.is_squarefree();
    std::vector<std::string> names;
    std::vector<std::vector<int>> slots(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> origin;
    for (int i = 0; i < n; ++i) {
        int e = maxExp[static_cast<std::size_t>(i)];
        if (e <= 1) {
            slots[static_cast<std::size_t>(i)].push_back(static_cast<int>(names.size()));
            origin.emplace_back(i, 1);
            names.push_back(ideal.vars().name(i));
        } else {
            for (int k = 1; k <= e; ++k) {
                slots[static_cast<std::size_t>(i)].push_back(static_cast<int>(names.size()));
                origin.emplace_back(i, k);
                names.push_back(ideal.vars().name(i) + "#" + std::to_string(k));
            }
        }
    }

    if (squarefree) return {ideal, std::move(origin), true};

    VariableSet bigVars{std::move(names)};
    int bigN = bigVars.size();
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) {
        std::vector<int> exps(static_cast<std::size_t>(bigN), 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < g.degree_in(i); ++k)
                exps[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)]
                                                   [static_cast<std::size_t>(k)])] = 1;
        gens.emplace_back(std::move(exps));
    }
    return {MonomialIdeal(std::move(bigVars), std::move(gens)), std::move(origin), false};
}

/// Number of variables the polarization of the ideal lives in.
inline int polarized_variable_count(const MonomialIdeal& ideal) {
    int n = ideal.vars().size();
    int total = 0;
    for (int i = 0; i < n; ++i) {
        int e = 0;
        for (const Monomial& g : ideal.gens()) e = std::max(e, g.degree_in(i));
        total += std::max(e, 1);
    }
    return total;
}

namespace detail {

/// Reisner's criterion over the face-mask list of a complex: every link
/// (including the link of the empty face, the complex itself) must have
/// vanishing reduced homology below its own dimension. Link faces of F are
/// exactly {g \ F : g a face containing F}, with no duplicates.
inline bool reisner_criterion_masks(const std::vector<std::uint32_t>& faces,
                                    const FieldSpec& field) {
    for (std::uint32_t f : faces) {
        std::vector<std::uint32_t> link;
        for (std::uint32_t g : faces)
            if ((g & f) == f) link.push_back(g ^ f);
        int dim = -1;
        for (std::uint32_t g : link) dim = std::max(dim, std::popcount(g) - 1);
        std::vector<int> ranks = reduced_homology_ranks_masks(std::move(link), field);
        for (int k = -1; k < dim; ++k)
            if (ranks[static_cast<std::size_t>(k + 1)] != 0) return false;
    }
    return true;
}

}  // namespace detail

/// Reisner's criterion on a complex.
inline bool reisner_criterion(const SimplicialComplex& complex, const FieldSpec& field) {
    if (complex.is_void()) return true;
    std::vector<std::uint32_t> faces;
    for (const auto& face : complex.all_faces()) {
        std::uint32_t mask = 0;
        for (int v : face) mask |= std::uint32_t{1} << v;
        faces.push_back(mask);
    }
    return detail::reisner_criterion_masks(faces, field);
}

/// Independent Cohen-Macaulayness oracle: polarize, take the Stanley-Reisner
/// complex, and test Reisner's criterion by exact homology computation.
inline bool is_cm_reisner(const MonomialIdeal& ideal,
                          const FieldSpec& field = FieldSpec::rationals()) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("is_cm_reisner: zero or unit ideal");
    Polarization pol = polarize(ideal);
    int n = pol.ideal.vars().size();
    if (n > 24) throw std::invalid_argument("is_cm_reisner: polarization too large");

    // Faces of the Stanley-Reisner complex are the squarefree non-members.
    std::vector<std::uint32_t> faces;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i)) exps[static_cast<std::size_t>(i)] = 1;
        if (!pol.ideal.contains(Monomial(std::move(exps)))) faces.push_back(mask);
    }
    return detail::reisner_criterion_masks(faces, field);
}

}  // namespace polymat
