#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polymat {

/// Ordered set of variable names. The order is fixed at construction and
/// every exponent vector in the same computation indexes into it.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw std::invalid_argument("VariableSet: must contain at least one variable");
        for (const auto& name : names_) {
            if (name.empty())
                throw std::invalid_argument("VariableSet: empty variable name");
        }
        auto sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("VariableSet: duplicate variable name");
    }

    /// x1..xn (or another stem).
    static VariableSet numbered(int n, std::string_view stem = "x") {
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            names.push_back(std::string(stem) + std::to_string(i));
        return VariableSet(std::move(names));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    bool operator==(const VariableSet& other) const { return names_ == other.names_; }
    bool operator!=(const VariableSet& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

/// A monomial as its exponent vector over a fixed VariableSet. Degree 0 is
/// the unit monomial 1. Immutable after construction.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
        for (int e : exp_)
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    static Monomial unit(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    static Monomial variable(int n, int var, int power = 1) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e.at(static_cast<std::size_t>(var)) = power;
        return Monomial(std::move(e));
    }

    int size() const { return static_cast<int>(exp_.size()); }
    int degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }
    int degree_in(int var) const { return exp_.at(static_cast<std::size_t>(var)); }
    const std::vector<int>& exponents() const { return exp_; }

    bool is_unit() const {
        return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
    }

    bool is_squarefree() const {
        return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e <= 1; });
    }

    /// True iff the monomial is x_var^k for a single variable (k >= 1).
    bool is_pure_power(int* var = nullptr) const {
        int found = -1;
        for (int i = 0; i < size(); ++i) {
            if (exp_[static_cast<std::size_t>(i)] > 0) {
                if (found >= 0) return false;
                found = i;
            }
        }
        if (found < 0) return false;
        if (var) *var = found;
        return true;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < size(); ++i)
            if (exp_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
        return s;
    }

    bool divides(const Monomial& other) const {
        check_same_size(other);
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > other.exp_[i]) return false;
        return true;
    }

    Monomial times(const Monomial& other) const {
        check_same_size(other);
        std::vector<int> e(exp_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exp_[i];
        return Monomial(std::move(e));
    }

    Monomial lcm(const Monomial& other) const {
        check_same_size(other);
        std::vector<int> e(exp_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exp_[i]);
        return Monomial(std::move(e));
    }

    /// Exact quotient this / other; other must divide this.
    Monomial divided_by(const Monomial& other) const {
        if (!other.divides(*this))
            throw std::invalid_argument("Monomial: quotient is not exact");
        std::vector<int> e(exp_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exp_[i];
        return Monomial(std::move(e));
    }

    Monomial squarefree_part() const {
        std::vector<int> e(exp_);
        for (int& v : e) v = std::min(v, 1);
        return Monomial(std::move(e));
    }

    /// Kill every variable outside `keep` (substitute 1).
    Monomial restricted_to(const std::vector<bool>& keep) const {
        std::vector<int> e(exp_);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!keep[i]) e[i] = 0;
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
    bool operator!=(const Monomial& other) const { return exp_ != other.exp_; }

private:
    void check_same_size(const Monomial& other) const {
        if (exp_.size() != other.exp_.size())
            throw std::invalid_argument("Monomial: mismatched variable sets");
    }

    std::vector<int> exp_;
};

/// Graded-lexicographic order: degree first, then exponent vectors compared
/// lexicographically with the earlier variable dominating (x1^2 before x1*x2
/// before x2^2). Canonical generator order everywhere.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exponents() > b.exponents();
    }
};

}  // namespace polymat
