#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polymat/monomial.hpp"

namespace polymat {

/// A monomial ideal, stored as its unique minimal monomial generating set
/// G(I) in graded-lexicographic order. The zero ideal has no generators; the
/// unit ideal is generated by 1. Two ideals over the same variable set are
/// equal iff their generator lists are equal.
class MonomialIdeal {
public:
    MonomialIdeal(VariableSet vars, std::vector<Monomial> gens)
        : vars_(std::move(vars)), gens_(std::move(gens)) {
        for (const Monomial& g : gens_)
            if (g.size() != vars_.size())
                throw std::invalid_argument("MonomialIdeal: generator over wrong variable set");
        minimalize_in_place(gens_);
    }

    static MonomialIdeal zero(VariableSet vars) { return MonomialIdeal(std::move(vars), {}); }

    static MonomialIdeal unit(VariableSet vars) {
        int n = vars.size();
        return MonomialIdeal(std::move(vars), {Monomial::unit(n)});
    }

    /// The maximal ideal m = (x_1,...,x_n).
    static MonomialIdeal maximal(VariableSet vars) {
        int n = vars.size();
        std::vector<Monomial> gens;
        gens.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i));
        return MonomialIdeal(std::move(vars), std::move(gens));
    }

    const VariableSet& vars() const { return vars_; }
    std::span<const Monomial> gens() const { return gens_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
    bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(),
                           [](const Monomial& g) { return g.is_squarefree(); });
    }

    bool is_principal() const { return gens_.size() == 1 && !gens_.front().is_unit(); }

    /// Membership: m is in I iff some minimal generator divides m.
    bool contains(const Monomial& m) const {
        if (m.size() != vars_.size())
            throw std::invalid_argument("MonomialIdeal: monomial over wrong variable set");
        return std::any_of(gens_.begin(), gens_.end(),
                           [&](const Monomial& g) { return g.divides(m); });
    }

    /// Ideal containment: J subset of this iff every generator of J is a member.
    bool contains(const MonomialIdeal& other) const {
        check_same_vars(other);
        return std::all_of(other.gens_.begin(), other.gens_.end(),
                           [&](const Monomial& g) { return contains(g); });
    }

    bool operator==(const MonomialIdeal& other) const {
        return vars_ == other.vars_ && gens_ == other.gens_;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    /// Variables dividing some minimal generator.
    std::vector<int> support() const {
        std::vector<bool> seen(static_cast<std::size_t>(vars_.size()), false);
        for (const Monomial& g : gens_)
            for (int i : g.support()) seen[static_cast<std::size_t>(i)] = true;
        std::vector<int> out;
        for (int i = 0; i < vars_.size(); ++i)
            if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
        return out;
    }

    bool is_fully_supported() const {
        return static_cast<int>(support().size()) == vars_.size();
    }

    MonomialIdeal radical() const {
        std::vector<Monomial> sq;
        sq.reserve(gens_.size());
        for (const Monomial& g : gens_) sq.push_back(g.squarefree_part());
        return MonomialIdeal(vars_, std::move(sq));
    }

    /// The common degree d if every minimal generator has degree d.
    std::optional<int> single_degree() const {
        if (!is_proper_nonzero())
            throw std::invalid_argument("single_degree: zero or unit ideal");
        int d = gens_.front().degree();
        for (const Monomial& g : gens_)
            if (g.degree() != d) return std::nullopt;
        return d;
    }

    int max_generator_degree() const {
        int d = 0;
        for (const Monomial& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    /// Reduces a generating set to the divisibility antichain and sorts it
    /// canonically. Idempotent and order-independent.
    static void minimalize_in_place(std::vector<Monomial>& gens) {
        std::sort(gens.begin(), gens.end(), GrlexLess{});
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> kept;
        kept.reserve(gens.size());
        for (Monomial& g : gens) {
            bool redundant = std::any_of(kept.begin(), kept.end(),
                                         [&](const Monomial& k) { return k.divides(g); });
            if (!redundant) kept.push_back(std::move(g));
        }
        gens = std::move(kept);
    }

    void check_same_vars(const MonomialIdeal& other) const {
        if (vars_ != other.vars_)
            throw std::invalid_argument("MonomialIdeal: mismatched variable sets");
    }

private:
    VariableSet vars_;
    std::vector<Monomial> gens_;  // canonical: grlex-sorted antichain
};

inline MonomialIdeal minimalize(VariableSet vars, std::vector<Monomial> gens) {
    return MonomialIdeal(std::move(vars), std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    a.check_same_vars(b);
    std::vector<Monomial> gens(a.gens().begin(), a.gens().end());
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.vars(), std::move(gens));
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    a.check_same_vars(b);
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& u : a.gens())
        for (const Monomial& v : b.gens()) gens.push_back(u.times(v));
    return MonomialIdeal(a.vars(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& a, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    MonomialIdeal result = MonomialIdeal::unit(a.vars());
    for (int i = 0; i < k; ++i) result = product(result, a);
    return result;
}

inline MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    a.check_same_vars(b);
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& u : a.gens())
        for (const Monomial& v : b.gens()) gens.push_back(u.lcm(v));
    return MonomialIdeal(a.vars(), std::move(gens));
}

inline MonomialIdeal intersection(std::span<const MonomialIdeal> ideals) {
    if (ideals.empty())
        throw std::invalid_argument("intersection: empty list (ambient ring unknown)");
    MonomialIdeal result = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) result = intersection(result, ideals[i]);
    return result;
}

}  // namespace polymat
