#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polymat/decompose.hpp"
#include "polymat/ideal.hpp"

namespace polymat {

struct ExchangeWitness {
    Monomial u;
    Monomial v;
    int var;  // index i with deg_{x_i}(u) > deg_{x_i}(v) and no exchange target
};

struct PolymatroidalVerdict {
    bool value = false;
    std::optional<ExchangeWitness> witness;  // set on failure of the exchange step

    explicit operator bool() const { return value; }
};

namespace detail {

inline bool span_contains(std::span<const Monomial> gens, const Monomial& m) {
    for (const Monomial& g : gens)
        if (g.divides(m)) return true;
    return false;
}

inline bool span_has_equal(std::span<const Monomial> gens, const Monomial& m) {
    for (const Monomial& g : gens)
        if (g == m) return true;
    return false;
}

/// Exchange property over a same-degree generating set. `in_minimal_gens`
/// selects the G(I) form of the exchange target test; otherwise membership in
/// I is used. The two agree for single-degree ideals.
inline PolymatroidalVerdict exchange_property(int n, std::span<const Monomial> gens,
                                              bool in_minimal_gens) {
    for (const Monomial& u : gens) {
        for (const Monomial& v : gens) {
            if (u == v) continue;
            for (int i = 0; i < n; ++i) {
                if (u.degree_in(i) <= v.degree_in(i)) continue;
                bool exchanged = false;
                for (int j = 0; j < n && !exchanged; ++j) {
                    if (u.degree_in(j) >= v.degree_in(j)) continue;
                    Monomial target = u.divided_by(Monomial::variable(n, i))
                                          .times(Monomial::variable(n, j));
                    exchanged = in_minimal_gens ? span_has_equal(gens, target)
                                                : span_contains(gens, target);
                }
                if (!exchanged) return {false, ExchangeWitness{u, v, i}};
            }
        }
    }
    return {true, std::nullopt};
}

inline bool single_degree_span(std::span<const Monomial> gens) {
    if (gens.empty()) return false;
    int d = gens.front().degree();
    for (const Monomial& g : gens)
        if (g.degree() != d) return false;
    return true;
}

}  // namespace detail

/// Polymatroidal = generated in a single degree + the exchange property: for
/// u,v in G(I) and deg_{x_i}(u) > deg_{x_i}(v) there is j with
/// deg_{x_j}(u) < deg_{x_j}(v) and x_j(u/x_i) in I. On failure of the
/// exchange step the violating (u, v, i) is reported.
inline PolymatroidalVerdict is_polymatroidal(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("is_polymatroidal: zero or unit ideal");
    if (!detail::single_degree_span(ideal.gens())) return {false, std::nullopt};
    return detail::exchange_property(ideal.vars().size(), ideal.gens(), false);
}

/// The variant whose exchange target must land in G(I) itself.
inline PolymatroidalVerdict is_polymatroidal_gform(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("is_polymatroidal: zero or unit ideal");
    if (!detail::single_degree_span(ideal.gens())) return {false, std::nullopt};
    return detail::exchange_property(ideal.vars().size(), ideal.gens(), true);
}

inline bool is_matroidal(const MonomialIdeal& ideal) {
    return ideal.is_squarefree() && is_polymatroidal(ideal).value;
}

/// Veronese-type ideal I_{d; a_1..a_n}: all monomials of degree d with
/// deg_{x_i} <= a_i. Throws when the caps make the result empty.
inline MonomialIdeal veronese_type(const VariableSet& vars, int d, const std::vector<int>& caps) {
    if (d < 1) throw std::invalid_argument("veronese_type: degree must be >= 1");
    if (static_cast<int>(caps.size()) != vars.size())
        throw std::invalid_argument("veronese_type: one cap per variable required");
    long total = 0;
    for (int a : caps) {
        if (a < 0) throw std::invalid_argument("veronese_type: negative cap");
        total += a;
    }
    if (total < d) throw std::invalid_argument("veronese_type: caps sum below degree, empty ideal");

    std::vector<Monomial> gens;
    std::vector<int> exps(static_cast<std::size_t>(vars.size()), 0);
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (remaining == 0) {
            gens.emplace_back(exps);
            return;
        }
        if (idx == vars.size()) return;
        int cap = std::min(caps[static_cast<std::size_t>(idx)], remaining);
        for (int e = cap; e >= 0; --e) {
            exps[static_cast<std::size_t>(idx)] = e;
            self(self, idx + 1, remaining - e);
        }
        exps[static_cast<std::size_t>(idx)] = 0;
    };
    rec(rec, 0, d);
    return MonomialIdeal(vars, std::move(gens));
}

/// All degree-d monomials in the given variables (q^d for q the prime on
/// `support`).
inline MonomialIdeal veronese_ideal(const VariableSet& vars, const std::vector<int>& support,
                                    int d) {
    return MonomialPrime(vars, support).power_ideal(d);
}

/// All squarefree degree-d monomials in the given variables.
inline MonomialIdeal squarefree_veronese_ideal(const VariableSet& vars,
                                               const std::vector<int>& support, int d) {
    MonomialPrime p(vars, support);
    if (d < 1 || d > p.height())
        throw std::invalid_argument("squarefree_veronese_ideal: degree out of range");
    std::vector<Monomial> gens;
    std::vector<int> exps(static_cast<std::size_t>(vars.size()), 0);
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (remaining == 0) {
            gens.emplace_back(exps);
            return;
        }
        if (idx == p.members().size()) return;
        if (static_cast<int>(p.members().size() - idx) < remaining) return;
        int var = p.members()[idx];
        exps[static_cast<std::size_t>(var)] = 1;
        self(self, idx + 1, remaining - 1);
        exps[static_cast<std::size_t>(var)] = 0;
        self(self, idx + 1, remaining);
    };
    rec(rec, 0, d);
    return MonomialIdeal(vars, std::move(gens));
}

inline bool is_veronese(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero()) return false;
    auto d = ideal.single_degree();
    if (!d) return false;
    return ideal == veronese_ideal(ideal.vars(), ideal.support(), *d);
}

inline bool is_squarefree_veronese(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero() || !ideal.is_squarefree()) return false;
    auto d = ideal.single_degree();
    if (!d) return false;
    auto supp = ideal.support();
    if (*d > static_cast<int>(supp.size())) return false;
    return ideal == squarefree_veronese_ideal(ideal.vars(), supp, *d);
}

enum class CmShapeKind { Principal, Veronese, SquarefreeVeronese, None };

struct CmShape {
    CmShapeKind kind = CmShapeKind::None;
    int degree = 0;            // generation degree for the Veronese shapes
    std::vector<int> support;  // variables of the shape

    bool is_cm() const { return kind != CmShapeKind::None; }
};

/// The Cohen-Macaulay trichotomy of polymatroidal ideals: principal,
/// Veronese, or squarefree Veronese (each taken on the support of the
/// ideal).
inline CmShape recognize_cm_shape(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("recognize_cm_shape: zero or unit ideal");
    if (ideal.is_principal())
        return {CmShapeKind::Principal, ideal.gens().front().degree(), ideal.support()};
    auto d = ideal.single_degree();
    if (!d) return {};
    if (is_veronese(ideal)) return {CmShapeKind::Veronese, *d, ideal.support()};
    if (is_squarefree_veronese(ideal))
        return {CmShapeKind::SquarefreeVeronese, *d, ideal.support()};
    return {};
}

/// The canonical presentation I = p_1^{a_1} cap ... cap p_r^{a_r} cap m^s of
/// a polymatroidal ideal, with each exponent reduced to the least valid one.
inline HVPresentation hv_presentation(const MonomialIdeal& ideal) {
    if (!is_polymatroidal(ideal).value)
        throw std::invalid_argument("hv_presentation: ideal is not polymatroidal");
    return hv_presentation_unchecked(ideal);
}

}  // namespace polymat
