#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "polymat/decompose.hpp"
#include "polymat/ideal.hpp"
#include "polymat/polymatroid.hpp"

namespace polymat {

/// Raised when a population or a suite exceeds its work budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Work budget counted in predicate evaluations.
struct Budget {
    std::uint64_t limit = 10'000'000;
    std::uint64_t used = 0;

    void charge(std::uint64_t amount = 1) {
        used += amount;
        if (used > limit)
            throw BudgetExceeded("work budget of " + std::to_string(limit) +
                                 " predicate evaluations exceeded");
    }
};

/// All monomials of degree d in n variables, optionally squarefree, in
/// canonical grlex order.
inline std::vector<Monomial> degree_d_monomials(int n, int d, bool squarefree) {
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(exps);
            return;
        }
        if (idx == n) return;
        int cap = squarefree ? std::min(1, remaining) : remaining;
        for (int e = cap; e >= 0; --e) {
            exps[static_cast<std::size_t>(idx)] = e;
            self(self, idx + 1, remaining - e);
        }
        exps[static_cast<std::size_t>(idx)] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

/// Streams every nonempty subset of the degree-d monomials as a monomial
/// ideal (same-degree monomials are automatically an antichain). Resumable
/// through the subset cursor.
class SingleDegreeEnumerator {
public:
    SingleDegreeEnumerator(int n, int d, bool squarefree, int max_gens = -1)
        : vars_(VariableSet::numbered(n)), monomials_(degree_d_monomials(n, d, squarefree)),
          max_gens_(max_gens) {
        if (monomials_.size() > 62)
            throw BudgetExceeded("single-degree population with " +
                                 std::to_string(monomials_.size()) +
                                 " monomials is too large to enumerate");
    }

    std::uint64_t cursor() const { return cursor_; }
    void seek(std::uint64_t cursor) { cursor_ = cursor; }
    std::uint64_t total_subsets() const {
        return (std::uint64_t{1} << monomials_.size()) - 1;
    }
    const VariableSet& vars() const { return vars_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    /// Fills `scratch` with the next subset; empty optional at the end.
    std::optional<std::uint64_t> next_subset(std::vector<Monomial>& scratch) {
        std::uint64_t end = std::uint64_t{1} << monomials_.size();
        while (++cursor_ < end) {
            int bits = std::popcount(cursor_);
            if (max_gens_ >= 0 && bits > max_gens_) continue;
            scratch.clear();
            for (std::size_t b = 0; b < monomials_.size(); ++b)
                if (cursor_ & (std::uint64_t{1} << b)) scratch.push_back(monomials_[b]);
            return cursor_;
        }
        return std::nullopt;
    }

    std::optional<MonomialIdeal> next() {
        std::vector<Monomial> scratch;
        if (!next_subset(scratch)) return std::nullopt;
        return MonomialIdeal(vars_, std::move(scratch));
    }

private:
    VariableSet vars_;
    std::vector<Monomial> monomials_;
    int max_gens_;
    std::uint64_t cursor_ = 0;
};

namespace detail {

inline std::vector<int> canonical_key(const MonomialIdeal& ideal) {
    std::vector<int> key{ideal.vars().size()};
    for (const Monomial& g : ideal.gens())
        key.insert(key.end(), g.exponents().begin(), g.exponents().end());
    return key;
}

}  // namespace detail

/// Deduplicating accumulator for seeded populations; iteration order is the
/// canonical key order, so downstream reports are deterministic.
class IdealPool {
public:
    bool insert(const MonomialIdeal& ideal) {
        auto key = detail::canonical_key(ideal);
        if (!keys_.insert(std::move(key)).second) return false;
        ideals_.push_back(ideal);
        return true;
    }

    std::vector<MonomialIdeal> sorted() const {
        std::vector<MonomialIdeal> out = ideals_;
        std::sort(out.begin(), out.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
            return detail::canonical_key(a) < detail::canonical_key(b);
        });
        return out;
    }

    std::size_t size() const { return ideals_.size(); }

private:
    std::set<std::vector<int>> keys_;
    std::vector<MonomialIdeal> ideals_;
};

/// All nonempty proper subsets of the variables, by size then members.
inline std::vector<MonomialPrime> proper_monomial_primes(const VariableSet& vars) {
    int n = vars.size();
    std::vector<MonomialPrime> primes;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start, int size) -> void {
        if (static_cast<int>(subset.size()) == size) {
            primes.emplace_back(vars, subset);
            return;
        }
        for (int i = start; i < n; ++i) {
            subset.push_back(i);
            self(self, i + 1, size);
            subset.pop_back();
        }
    };
    for (int size = 1; size < n; ++size) rec(rec, 0, size);
    return primes;
}

/// Veronese-type ideals for all cap vectors with entries <= d, for each
/// degree d <= max_d.
inline void seed_veronese_type(IdealPool& pool, int n, int max_d) {
    VariableSet vars = VariableSet::numbered(n);
    for (int d = 1; d <= max_d; ++d) {
        std::vector<int> caps(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, int idx) -> void {
            if (idx == n) {
                long total = 0;
                for (int c : caps) total += c;
                if (total >= d) pool.insert(veronese_type(vars, d, caps));
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

/// Intersections of up to `max_primes` proper prime powers with exponents
/// <= max_exp, each optionally intersected with m^s for s <= max_exp.
inline void seed_prime_power_intersections(IdealPool& pool, int n, int max_exp, int max_primes,
                                           Budget& budget) {
    VariableSet vars = VariableSet::numbered(n);
    std::vector<MonomialPrime> primes = proper_monomial_primes(vars);
    MonomialPrime maximal = MonomialPrime::maximal(vars);

    std::vector<std::pair<std::size_t, int>> chosen;  // (prime index, exponent)
    auto emit = [&]() {
        MonomialIdeal base = MonomialIdeal::unit(vars);
        for (auto [idx, exp] : chosen)
            base = intersection(base, primes[idx].power_ideal(exp));
        for (int s = 0; s <= max_exp; ++s) {
            budget.charge();
            MonomialIdeal ideal =
                s == 0 ? base : intersection(base, maximal.power_ideal(s));
            if (ideal.is_proper_nonzero()) pool.insert(ideal);
        }
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!chosen.empty()) emit();
        if (static_cast<int>(chosen.size()) == max_primes) return;
        for (std::size_t i = start; i < primes.size(); ++i) {
            for (int e = 1; e <= max_exp; ++e) {
                chosen.emplace_back(i, e);
                self(self, i + 1);
                chosen.pop_back();
            }
        }
    };
    rec(rec, 0);
}

/// Uniformly random proper nonzero monomial ideal for the randomized
/// identity suites.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, int max_n, int max_degree,
                                  int max_gens) {
    std::uniform_int_distribution<int> pickN(2, max_n);
    int n = pickN(rng);
    std::uniform_int_distribution<int> pickCount(1, max_gens);
    std::uniform_int_distribution<int> pickDeg(1, max_degree);
    int count = pickCount(rng);
    std::vector<Monomial> gens;
    for (int i = 0; i < count; ++i) {
        int d = pickDeg(rng);
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        std::uniform_int_distribution<int> pickVar(0, n - 1);
        for (int k = 0; k < d; ++k) ++exps[static_cast<std::size_t>(pickVar(rng))];
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(VariableSet::numbered(n), std::move(gens));
}

}  // namespace polymat
