#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "polymat/ideal.hpp"

namespace polymat {

/// A simplicial complex on a vertex set, stored as its facet list (an
/// antichain of vertex subsets). The complex containing only the empty face
/// has facets = {{}}; the void complex has no facets at all.
class SimplicialComplex {
public:
    SimplicialComplex(VariableSet vertices, std::vector<std::vector<int>> facets)
        : vertices_(std::move(vertices)), facets_(std::move(facets)) {
        for (auto& f : facets_) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int v : f)
                if (v < 0 || v >= vertices_.size())
                    throw std::invalid_argument("SimplicialComplex: vertex out of range");
        }
        maximalize();
    }

    const VariableSet& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }

    /// dim = size of the largest facet minus one; -1 for the irrelevant
    /// complex {{}}. Undefined (throws) for the void complex.
    int dim() const {
        if (is_void()) throw std::domain_error("SimplicialComplex: void complex has no dimension");
        std::size_t best = 0;
        for (const auto& f : facets_) best = std::max(best, f.size());
        return static_cast<int>(best) - 1;
    }

    bool is_pure() const {
        if (is_void()) return true;
        for (const auto& f : facets_)
            if (f.size() != facets_.front().size()) return false;
        return true;
    }

    bool contains_face(const std::vector<int>& face) const {
        return std::any_of(facets_.begin(), facets_.end(), [&](const std::vector<int>& f) {
            return std::includes(f.begin(), f.end(), face.begin(), face.end());
        });
    }

    /// All faces, including the empty face, sorted by dimension then
    /// lexicographically. Empty for the void complex.
    std::vector<std::vector<int>> all_faces() const {
        std::vector<std::vector<int>> faces;
        if (is_void()) return faces;
        std::set<std::vector<int>> seen;
        for (const auto& f : facets_) {
            // Subsets of the facet via bit enumeration.
            std::size_t k = f.size();
            for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
                std::vector<int> face;
                for (std::size_t b = 0; b < k; ++b)
                    if (mask & (std::size_t{1} << b)) face.push_back(f[b]);
                seen.insert(std::move(face));
            }
        }
        faces.assign(seen.begin(), seen.end());
        std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return faces;
    }

    /// link(F) = { G : G disjoint from F, G union F is a face }.
    SimplicialComplex link(const std::vector<int>& face) const {
        if (!contains_face(face))
            throw std::invalid_argument("link: not a face of the complex");
        std::vector<std::vector<int>> linkFacets;
        for (const auto& f : facets_) {
            if (!std::includes(f.begin(), f.end(), face.begin(), face.end())) continue;
            std::vector<int> rest;
            std::set_difference(f.begin(), f.end(), face.begin(), face.end(),
                                std::back_inserter(rest));
            linkFacets.push_back(std::move(rest));
        }
        return SimplicialComplex(vertices_, std::move(linkFacets));
    }

    bool operator==(const SimplicialComplex& other) const {
        return vertices_ == other.vertices_ && facets_ == other.facets_;
    }

private:
    void maximalize() {
        std::sort(facets_.begin(), facets_.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
        std::vector<std::vector<int>> kept;
        for (auto& f : facets_) {
            bool dominated =
                std::any_of(kept.begin(), kept.end(), [&](const std::vector<int>& big) {
                    return std::includes(big.begin(), big.end(), f.begin(), f.end());
                });
            if (!dominated) kept.push_back(std::move(f));
        }
        // Canonical order: by dimension, then lexicographic.
        std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        facets_ = std::move(kept);
    }

    VariableSet vertices_;
    std::vector<std::vector<int>> facets_;
};

/// Faces of the Stanley-Reisner complex of a squarefree ideal are the
/// subsets whose product is not in the ideal.
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("stanley_reisner_complex: zero or unit ideal");
    if (!ideal.is_squarefree())
        throw std::invalid_argument("stanley_reisner_complex: ideal is not squarefree");
    int n = ideal.vars().size();
    if (n > 24) throw std::invalid_argument("stanley_reisner_complex: too many variables");

    std::vector<std::vector<int>> faces;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        std::vector<int> face;
        for (int i = 0; i < n; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                exps[static_cast<std::size_t>(i)] = 1;
                face.push_back(i);
            }
        }
        if (!ideal.contains(Monomial(std::move(exps)))) faces.push_back(std::move(face));
    }
    return SimplicialComplex(ideal.vars(), std::move(faces));
}

/// Inverse direction: the ideal of minimal non-faces.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    int n = complex.vertices().size();
    if (n > 24) throw std::invalid_argument("stanley_reisner_ideal: too many vertices");
    std::vector<Monomial> gens;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        std::vector<int> face;
        for (int i = 0; i < n; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                exps[static_cast<std::size_t>(i)] = 1;
                face.push_back(i);
            }
        }
        if (!complex.contains_face(face)) gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(complex.vertices(), std::move(gens));
}

}  // namespace polymat
