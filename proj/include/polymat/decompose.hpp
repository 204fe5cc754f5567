#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "polymat/ideal.hpp"

namespace polymat {

/// A monomial prime ideal: the ideal generated by a subset of the variables.
/// members == all variables encodes the maximal ideal m.
class MonomialPrime {
public:
    MonomialPrime(VariableSet vars, std::vector<int> members)
        : vars_(std::move(vars)), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        for (int i : members_)
            if (i < 0 || i >= vars_.size())
                throw std::invalid_argument("MonomialPrime: variable index out of range");
    }

    static MonomialPrime maximal(VariableSet vars) {
        std::vector<int> all(static_cast<std::size_t>(vars.size()));
        for (int i = 0; i < vars.size(); ++i) all[static_cast<std::size_t>(i)] = i;
        return MonomialPrime(std::move(vars), std::move(all));
    }

    const VariableSet& vars() const { return vars_; }
    const std::vector<int>& members() const { return members_; }
    int height() const { return static_cast<int>(members_.size()); }
    bool is_maximal() const { return height() == vars_.size(); }
    bool is_empty() const { return members_.empty(); }

    bool has_member(int var) const {
        return std::binary_search(members_.begin(), members_.end(), var);
    }

    std::vector<bool> member_mask() const {
        std::vector<bool> mask(static_cast<std::size_t>(vars_.size()), false);
        for (int i : members_) mask[static_cast<std::size_t>(i)] = true;
        return mask;
    }

    /// Degree of u in the variables of this prime; u is in p^a iff this >= a.
    int degree_of(const Monomial& u) const {
        int d = 0;
        for (int i : members_) d += u.degree_in(i);
        return d;
    }

    /// Largest a with I contained in p^a (0 if some generator misses p).
    int containment_exponent(const MonomialIdeal& ideal) const {
        int v = -1;
        for (const Monomial& g : ideal.gens()) {
            int d = degree_of(g);
            v = (v < 0) ? d : std::min(v, d);
        }
        return std::max(v, 0);
    }

    MonomialIdeal to_ideal() const {
        std::vector<Monomial> gens;
        gens.reserve(members_.size());
        for (int i : members_) gens.push_back(Monomial::variable(vars_.size(), i));
        return MonomialIdeal(vars_, std::move(gens));
    }

    /// p^a: all monomials of degree a in the variables of p.
    MonomialIdeal power_ideal(int a) const {
        if (a < 0) throw std::invalid_argument("power_ideal: negative exponent");
        if (a == 0) return MonomialIdeal::unit(vars_);
        std::vector<Monomial> gens;
        std::vector<int> exps(static_cast<std::size_t>(vars_.size()), 0);
        enumerate_powers(0, a, exps, gens);
        return MonomialIdeal(vars_, std::move(gens));
    }

    MonomialPrime sum(const MonomialPrime& other) const {
        if (vars_ != other.vars_)
            throw std::invalid_argument("MonomialPrime: mismatched variable sets");
        std::vector<int> merged = members_;
        merged.insert(merged.end(), other.members_.begin(), other.members_.end());
        return MonomialPrime(vars_, std::move(merged));
    }

    int intersection_size(const MonomialPrime& other) const {
        int count = 0;
        for (int i : members_)
            if (other.has_member(i)) ++count;
        return count;
    }

    bool contains(const MonomialPrime& other) const {
        return std::all_of(other.members_.begin(), other.members_.end(),
                           [&](int i) { return has_member(i); });
    }

    bool operator==(const MonomialPrime& other) const {
        return vars_ == other.vars_ && members_ == other.members_;
    }
    bool operator!=(const MonomialPrime& other) const { return !(*this == other); }

    /// Canonical order: height first, then member list.
    bool operator<(const MonomialPrime& other) const {
        if (height() != other.height()) return height() < other.height();
        return members_ < other.members_;
    }

private:
    void enumerate_powers(int idx, int remaining, std::vector<int>& exps,
                          std::vector<Monomial>& out) const {
        if (remaining == 0) {
            out.emplace_back(exps);
            return;
        }
        if (idx == static_cast<int>(members_.size())) return;
        int var = members_[static_cast<std::size_t>(idx)];
        // Last member takes everything that is left.
        if (idx == static_cast<int>(members_.size()) - 1) {
            exps[static_cast<std::size_t>(var)] = remaining;
            out.emplace_back(exps);
            exps[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[static_cast<std::size_t>(var)] = e;
            enumerate_powers(idx + 1, remaining - e, exps, out);
        }
        exps[static_cast<std::size_t>(var)] = 0;
    }

    VariableSet vars_;
    std::vector<int> members_;  // sorted variable indices
};

/// An irreducible monomial ideal (x_i^{e_i} : e_i > 0), stored as the
/// exponent monomial of its corner.
class IrreducibleComponent {
public:
    IrreducibleComponent(VariableSet vars, Monomial corner)
        : vars_(std::move(vars)), corner_(std::move(corner)) {
        if (corner_.is_unit())
            throw std::invalid_argument("IrreducibleComponent: empty corner");
    }

    const VariableSet& vars() const { return vars_; }
    const Monomial& corner() const { return corner_; }

    MonomialPrime radical() const { return MonomialPrime(vars_, corner_.support()); }

    MonomialIdeal to_ideal() const {
        std::vector<Monomial> gens;
        for (int i : corner_.support())
            gens.push_back(Monomial::variable(vars_.size(), i, corner_.degree_in(i)));
        return MonomialIdeal(vars_, std::move(gens));
    }

    bool operator==(const IrreducibleComponent& other) const {
        return corner_ == other.corner_;
    }
    bool operator<(const IrreducibleComponent& other) const {
        return GrlexLess{}(corner_, other.corner_);
    }

private:
    VariableSet vars_;
    Monomial corner_;
};

struct PrimePower {
    MonomialPrime prime;
    int exponent;  // >= 1

    bool operator==(const PrimePower& other) const {
        return prime == other.prime && exponent == other.exponent;
    }
};

/// Irredundant primary decomposition with provenance flags.
struct Decomposition {
    std::vector<MonomialIdeal> components;  // primary, canonical order
    std::vector<MonomialPrime> primes;      // radical of each component
    std::vector<bool> minimal;              // prime is inclusion-minimal in Ass
};

namespace detail {

inline std::vector<int> ideal_key(const MonomialIdeal& ideal) {
    std::vector<int> key;
    key.reserve(ideal.gens().size() * static_cast<std::size_t>(ideal.vars().size()));
    for (const Monomial& g : ideal.gens())
        key.insert(key.end(), g.exponents().begin(), g.exponents().end());
    return key;
}

/// Recursive splitting: a monomial ideal is irreducible iff every minimal
/// generator is a pure power. Otherwise pick a generator u = u1*u2 with
/// disjoint nonempty supports and split I = (I + (u1)) o (I + (u2)).
class IrreducibleSplitter {
public:
    std::vector<Monomial> run(const MonomialIdeal& ideal) {
        corners_.clear();
        memo_.clear();
        split(ideal);
        std::vector<Monomial> out;
        out.reserve(corners_.size());
        for (auto& [key, corner] : corners_) out.push_back(corner);
        return out;
    }

private:
    void split(const MonomialIdeal& ideal) {
        auto key = ideal_key(ideal);
        if (!memo_.insert(key).second) return;

        const Monomial* splitter = nullptr;
        for (const Monomial& g : ideal.gens()) {
            if (!g.is_pure_power()) {
                splitter = &g;
                break;
            }
        }
        if (!splitter) {
            // Irreducible: record the corner (x_i^{e_i} over the supports).
            std::vector<int> corner(static_cast<std::size_t>(ideal.vars().size()), 0);
            for (const Monomial& g : ideal.gens()) {
                int var = 0;
                g.is_pure_power(&var);
                corner[static_cast<std::size_t>(var)] = g.degree_in(var);
            }
            Monomial c(std::move(corner));
            corners_.emplace(c.exponents(), c);
            return;
        }
        int var = splitter->support().front();
        int n = ideal.vars().size();
        Monomial u1 = Monomial::variable(n, var, splitter->degree_in(var));
        Monomial u2 = splitter->divided_by(u1);
        split(sum(ideal, MonomialIdeal(ideal.vars(), {u1})));
        split(sum(ideal, MonomialIdeal(ideal.vars(), {u2})));
    }

    std::map<std::vector<int>, Monomial> corners_;
    std::set<std::vector<int>> memo_;
};

}  // namespace detail

/// Irredundant irreducible decomposition, canonically ordered. The
/// intersection of the returned components equals I.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("irreducible_decomposition: zero or unit ideal");

    detail::IrreducibleSplitter splitter;
    std::vector<Monomial> corners = splitter.run(ideal);

    std::vector<IrreducibleComponent> comps;
    comps.reserve(corners.size());
    for (Monomial& c : corners) comps.emplace_back(ideal.vars(), std::move(c));

    // Pairwise containment pruning: if C_j is contained in C_k, then C_k
    // contributes nothing to the intersection.
    std::vector<MonomialIdeal> asIdeals;
    asIdeals.reserve(comps.size());
    for (const auto& c : comps) asIdeals.push_back(c.to_ideal());
    std::vector<bool> dead(comps.size(), false);
    for (std::size_t k = 0; k < comps.size(); ++k) {
        for (std::size_t j = 0; j < comps.size() && !dead[k]; ++j) {
            if (j == k || dead[j]) continue;
            if (asIdeals[k].contains(asIdeals[j])) dead[k] = true;
        }
    }
    std::vector<IrreducibleComponent> kept;
    std::vector<MonomialIdeal> keptIdeals;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (!dead[k]) {
            kept.push_back(comps[k]);
            keptIdeals.push_back(asIdeals[k]);
        }
    }

    // Drop-one check: remove any component whose omission leaves the
    // intersection unchanged. This is the definition of irredundancy.
    for (std::size_t k = 0; k < kept.size();) {
        if (kept.size() == 1) break;
        MonomialIdeal rest = MonomialIdeal::unit(ideal.vars());
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != k) rest = intersection(rest, keptIdeals[j]);
        if (rest == ideal) {
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
            keptIdeals.erase(keptIdeals.begin() + static_cast<std::ptrdiff_t>(k));
        } else {
            ++k;
        }
    }

    std::sort(kept.begin(), kept.end());
    return kept;
}

/// Ass(S/I): the radicals of an irredundant irreducible decomposition.
inline std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
    auto comps = irreducible_decomposition(ideal);
    std::vector<MonomialPrime> primes;
    primes.reserve(comps.size());
    for (const auto& c : comps) primes.push_back(c.radical());
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

/// Min(S/I): computed on the radical, where Ass = Min.
inline std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("minimal_primes: zero or unit ideal");
    auto primes = associated_primes(ideal.radical());
    std::vector<MonomialPrime> mins;
    for (const auto& p : primes) {
        bool minimal = std::none_of(primes.begin(), primes.end(), [&](const MonomialPrime& q) {
            return q != p && p.contains(q);
        });
        if (minimal) mins.push_back(p);
    }
    return mins;
}

/// Groups irreducible components by radical and intersects each group.
inline Decomposition primary_decomposition(const MonomialIdeal& ideal) {
    auto comps = irreducible_decomposition(ideal);
    std::map<MonomialPrime, std::vector<const IrreducibleComponent*>> groups;
    for (const auto& c : comps) groups[c.radical()].push_back(&c);

    auto mins = minimal_primes(ideal);
    Decomposition dec;
    for (auto& [prime, members] : groups) {
        MonomialIdeal component = members.front()->to_ideal();
        for (std::size_t i = 1; i < members.size(); ++i)
            component = intersection(component, members[i]->to_ideal());
        bool is_min = std::find(mins.begin(), mins.end(), prime) != mins.end();
        dec.components.push_back(std::move(component));
        dec.primes.push_back(prime);
        dec.minimal.push_back(is_min);
    }

    // Sanity: re-intersecting the components must reproduce I exactly.
    MonomialIdeal check = MonomialIdeal::unit(ideal.vars());
    for (const auto& c : dec.components) check = intersection(check, c);
    if (check != ideal)
        throw std::logic_error("primary_decomposition: components do not intersect to I");
    return dec;
}

inline int height(const MonomialIdeal& ideal) {
    auto mins = minimal_primes(ideal);
    int h = ideal.vars().size();
    for (const auto& p : mins) h = std::min(h, p.height());
    return h;
}

inline bool is_unmixed(const MonomialIdeal& ideal) {
    auto ass = associated_primes(ideal);
    for (const auto& p : ass)
        if (p.height() != ass.front().height()) return false;
    return true;
}

inline bool is_equidimensional(const MonomialIdeal& ideal) {
    auto mins = minimal_primes(ideal);
    for (const auto& p : mins)
        if (p.height() != mins.front().height()) return false;
    return true;
}

/// Presentation I = p_1^{a_1} cap ... cap p_r^{a_r} cap m^s.
/// s == 0 means there is no m-component.
struct HVPresentation {
    std::vector<PrimePower> prime_powers;  // non-maximal associated primes
    int socle_exponent = 0;                // s
};

namespace detail {

inline MonomialIdeal hv_intersection(const VariableSet& vars,
                                     const std::vector<MonomialPrime>& primes,
                                     const std::vector<int>& exps, int s) {
    MonomialIdeal result = MonomialIdeal::unit(vars);
    for (std::size_t i = 0; i < primes.size(); ++i)
        result = intersection(result, primes[i].power_ideal(exps[i]));
    if (s > 0) result = intersection(result, MonomialPrime::maximal(vars).power_ideal(s));
    return result;
}

}  // namespace detail

/// Computes the prime-power presentation of an ideal whose associated primes
/// admit one (every polymatroidal ideal does). Exponents are canonicalized to
/// the least value keeping the intersection equal to I, reduced in canonical
/// prime order. Throws if no presentation exists.
inline HVPresentation hv_presentation_unchecked(const MonomialIdeal& ideal) {
    auto ass = associated_primes(ideal);
    std::vector<MonomialPrime> primes;
    bool has_max = false;
    for (const auto& p : ass) {
        if (p.is_maximal())
            has_max = true;
        else
            primes.push_back(p);
    }

    // Maximal exponents are always valid when any presentation is.
    std::vector<int> exps;
    exps.reserve(primes.size());
    for (const auto& p : primes) exps.push_back(p.containment_exponent(ideal));
    int s = has_max ? MonomialPrime::maximal(ideal.vars()).containment_exponent(ideal) : 0;

    if (detail::hv_intersection(ideal.vars(), primes, exps, s) != ideal)
        throw std::domain_error("hv_presentation: ideal admits no prime-power presentation");

    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (int a = 1; a < exps[i]; ++a) {
            std::vector<int> trial = exps;
            trial[i] = a;
            if (detail::hv_intersection(ideal.vars(), primes, trial, s) == ideal) {
                exps[i] = a;
                break;
            }
        }
    }

    HVPresentation hv;
    for (std::size_t i = 0; i < primes.size(); ++i)
        hv.prime_powers.push_back({primes[i], exps[i]});
    hv.socle_exponent = s;
    return hv;
}

}  // namespace polymat
