#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "polymat/simplicial.hpp"

namespace polymat {

/// Coefficient field for homology: the rationals or a prime field F_p.
struct FieldSpec {
    bool rational = true;
    int p = 0;

    static FieldSpec rationals() { return {true, 0}; }
    static FieldSpec prime(int p) {
        if (p < 2) throw std::invalid_argument("FieldSpec: p must be a prime >= 2");
        return {false, p};
    }

    bool operator==(const FieldSpec& other) const {
        return rational == other.rational && p == other.p;
    }
};

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rank over the rationals by fraction-free (Bareiss) elimination on
/// arbitrary-precision integers.
inline int rank_rational_big(std::vector<std::vector<BigInt>> m) {
    if (m.empty() || m.front().empty()) return 0;
    std::size_t rows = m.size(), cols = m.front().size();
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Bareiss on machine integers with overflow detection; signals the caller
/// to fall back to arbitrary precision instead of producing a wrong rank.
inline bool rank_rational_fast(std::vector<std::vector<std::int64_t>> m, int& rank_out) {
    if (m.empty() || m.front().empty()) {
        rank_out = 0;
        return true;
    }
    std::size_t rows = m.size(), cols = m.front().size();
    std::int64_t prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                std::int64_t a, b;
                if (__builtin_mul_overflow(m[rank][col], m[i][j], &a)) return false;
                if (__builtin_mul_overflow(m[i][col], m[rank][j], &b)) return false;
                std::int64_t diff;
                if (__builtin_sub_overflow(a, b, &diff)) return false;
                m[i][j] = diff / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    rank_out = static_cast<int>(rank);
    return true;
}

inline int rank_rational(const std::vector<std::vector<int>>& entries) {
    std::vector<std::vector<std::int64_t>> fast(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        fast[i].assign(entries[i].begin(), entries[i].end());
    int rank = 0;
    if (rank_rational_fast(std::move(fast), rank)) return rank;
    std::vector<std::vector<BigInt>> big(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        big[i].assign(entries[i].begin(), entries[i].end());
    return rank_rational_big(std::move(big));
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t result = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

inline int rank_mod_p(const std::vector<std::vector<int>>& entries, std::int64_t p) {
    if (entries.empty() || entries.front().empty()) return 0;
    std::vector<std::vector<std::int64_t>> m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m[i].assign(entries[i].begin(), entries[i].end());
    std::size_t rows = m.size(), cols = m.front().size();
    for (auto& row : m)
        for (auto& v : row) {
            v %= p;
            if (v < 0) v += p;
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        std::int64_t inv = mod_pow(m[rank][col], p - 2, p);
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            std::int64_t f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                m[i][j] = (m[i][j] - f * m[rank][j]) % p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

inline int matrix_rank(const std::vector<std::vector<int>>& entries, const FieldSpec& field) {
    return field.rational ? rank_rational(entries) : rank_mod_p(entries, field.p);
}

}  // namespace detail

/// Reduced homology ranks of a complex given as its full list of face
/// bitmasks (the empty face included). Index k of the result is the rank in
/// dimension k-1. Empty input (the void complex) yields an empty vector.
inline std::vector<int> reduced_homology_ranks_masks(std::vector<std::uint32_t> faces,
                                                     const FieldSpec& field) {
    if (faces.empty()) return {};
    int dim = -1;
    for (std::uint32_t f : faces) dim = std::max(dim, std::popcount(f) - 1);

    // Faces grouped by cardinality, sorted for binary-search row lookup.
    std::vector<std::vector<std::uint32_t>> byDim(static_cast<std::size_t>(dim + 2));
    for (std::uint32_t f : faces) byDim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    for (auto& group : byDim) std::sort(group.begin(), group.end());

    auto boundary_rank = [&](int k) -> int {
        const auto& domain = byDim[static_cast<std::size_t>(k + 1)];
        const auto& target = byDim[static_cast<std::size_t>(k)];
        if (domain.empty() || target.empty()) return 0;
        std::vector<std::vector<int>> entries(target.size(), std::vector<int>(domain.size(), 0));
        for (std::size_t col = 0; col < domain.size(); ++col) {
            std::uint32_t face = domain[col];
            int sign = 1;
            for (std::uint32_t bits = face; bits != 0; bits &= bits - 1) {
                std::uint32_t vertexBit = bits & (~bits + 1);
                std::uint32_t sub = face ^ vertexBit;
                auto it = std::lower_bound(target.begin(), target.end(), sub);
                entries[static_cast<std::size_t>(it - target.begin())][col] = sign;
                sign = -sign;
            }
        }
        return detail::matrix_rank(entries, field);
    };

    std::vector<int> boundaryRanks(static_cast<std::size_t>(dim + 3), 0);
    for (int k = 0; k <= dim; ++k)
        boundaryRanks[static_cast<std::size_t>(k + 1)] = boundary_rank(k);

    std::vector<int> ranks(static_cast<std::size_t>(dim + 2), 0);
    for (int k = -1; k <= dim; ++k) {
        int facesK = static_cast<int>(byDim[static_cast<std::size_t>(k + 1)].size());
        int kernel = facesK - boundaryRanks[static_cast<std::size_t>(k + 1)];
        ranks[static_cast<std::size_t>(k + 1)] =
            kernel - boundaryRanks[static_cast<std::size_t>(k + 2)];
    }
    return ranks;
}

/// Ranks of the reduced simplicial homology of the complex in dimensions
/// -1..dim, from exact boundary-matrix ranks over the given field.
inline std::vector<int> reduced_homology_ranks(const SimplicialComplex& complex,
                                               const FieldSpec& field = FieldSpec::rationals()) {
    if (complex.is_void()) return {};
    if (complex.vertices().size() > 24)
        throw std::invalid_argument("reduced_homology_ranks: too many vertices");
    std::vector<std::uint32_t> masks;
    for (const auto& face : complex.all_faces()) {
        std::uint32_t mask = 0;
        for (int v : face) mask |= std::uint32_t{1} << v;
        masks.push_back(mask);
    }
    return reduced_homology_ranks_masks(std::move(masks), field);
}

/// Reduced Euler characteristic: alternating sum of face counts, including
/// the empty face with sign -1.
inline long reduced_euler_characteristic(const SimplicialComplex& complex) {
    long chi = 0;
    for (const auto& face : complex.all_faces())
        chi += (face.size() % 2 == 0) ? -1 : 1;
    return chi;
}

}  // namespace polymat
