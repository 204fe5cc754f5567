#pragma once

#include <queue>
#include <vector>

#include "polymat/decompose.hpp"
#include "polymat/ideal.hpp"
#include "polymat/localize.hpp"
#include "polymat/polymatroid.hpp"
#include "polymat/simplicial.hpp"

namespace polymat {

/// Graph on Min(S/I) with an edge wherever the sum of two minimal primes has
/// exactly h+1 generators (h = height of I). Only defined for
/// equidimensional ideals.
struct MinPrimeGraph {
    std::vector<MonomialPrime> nodes;
    std::vector<std::pair<int, int>> edges;
};

inline MinPrimeGraph min_prime_graph(const MonomialIdeal& ideal) {
    if (!is_equidimensional(ideal))
        throw std::invalid_argument("min_prime_graph: ideal is not equidimensional");
    MinPrimeGraph graph;
    graph.nodes = minimal_primes(ideal);
    int h = graph.nodes.front().height();
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < graph.nodes.size(); ++j)
            if (graph.nodes[i].sum(graph.nodes[j]).height() == h + 1)
                graph.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return graph;
}

enum class Codim1Reason { Connected, Disconnected, NotEquidimensional };

struct Codim1Verdict {
    bool connected = false;
    Codim1Reason reason = Codim1Reason::Disconnected;
    MinPrimeGraph graph;                            // empty when not equidimensional
    std::vector<std::pair<int, int>> spanning_edges;  // BFS tree when connected
    std::vector<bool> reached;  // bipartition witness when disconnected

    explicit operator bool() const { return connected; }
};

/// Connectedness in codimension one. A non-equidimensional ideal is not
/// connected in codimension one by definition, so the verdict is false with
/// a reason code rather than an error.
inline Codim1Verdict is_connected_codim_one(const MonomialIdeal& ideal) {
    if (!ideal.is_proper_nonzero())
        throw std::invalid_argument("is_connected_codim_one: zero or unit ideal");
    Codim1Verdict verdict;
    if (!is_equidimensional(ideal)) {
        verdict.reason = Codim1Reason::NotEquidimensional;
        return verdict;
    }
    verdict.graph = min_prime_graph(ideal);
    std::size_t n = verdict.graph.nodes.size();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : verdict.graph.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    verdict.reached.assign(n, false);
    std::queue<int> queue;
    queue.push(0);
    verdict.reached[0] = true;
    while (!queue.empty()) {
        int at = queue.front();
        queue.pop();
        for (int next : adj[static_cast<std::size_t>(at)]) {
            if (!verdict.reached[static_cast<std::size_t>(next)]) {
                verdict.reached[static_cast<std::size_t>(next)] = true;
                verdict.spanning_edges.emplace_back(at, next);
                queue.push(next);
            }
        }
    }
    verdict.connected =
        std::all_of(verdict.reached.begin(), verdict.reached.end(), [](bool b) { return b; });
    verdict.reason = verdict.connected ? Codim1Reason::Connected : Codim1Reason::Disconnected;
    return verdict;
}

/// A pure complex is strongly connected when any two facets are linked by a
/// chain of facets meeting in codimension one.
inline bool strongly_connected(const SimplicialComplex& complex) {
    if (!complex.is_pure())
        throw std::invalid_argument("strongly_connected: complex is not pure");
    if (complex.is_void()) return true;
    const auto& facets = complex.facets();
    std::size_t n = facets.size();
    if (n <= 1) return true;
    std::size_t facetSize = facets.front().size();
    std::vector<bool> reached(n, false);
    std::queue<std::size_t> queue;
    queue.push(0);
    reached[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        std::size_t at = queue.front();
        queue.pop();
        for (std::size_t j = 0; j < n; ++j) {
            if (reached[j]) continue;
            std::vector<int> common;
            std::set_intersection(facets[at].begin(), facets[at].end(), facets[j].begin(),
                                  facets[j].end(), std::back_inserter(common));
            if (common.size() + 1 == facetSize) {
                reached[j] = true;
                ++count;
                queue.push(j);
            }
        }
    }
    return count == n;
}

struct LemmaLocReport {
    bool hypothesis_ok = false;  // T in supp(I) and every (t-1)-subset divides a generator
    bool a = false;              // product of T divides no generator
    bool b = false;              // all t localizations agree
    bool c = false;              // no associated prime meets T in exactly one variable
};

/// The three-way equivalence for matroidal ideals: conditions (a), (b), (c)
/// are evaluated independently so their agreement can be tested. T is given
/// by variable indices.
inline LemmaLocReport lemma_loc_equivalence(const MonomialIdeal& ideal,
                                            const std::vector<int>& subset) {
    if (!is_matroidal(ideal))
        throw std::invalid_argument("lemma_loc_equivalence: ideal is not matroidal");
    std::vector<int> T = subset;
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    if (T.empty()) throw std::invalid_argument("lemma_loc_equivalence: empty subset");

    LemmaLocReport report;
    auto supp = ideal.support();
    bool inSupport = std::all_of(T.begin(), T.end(), [&](int i) {
        return std::binary_search(supp.begin(), supp.end(), i);
    });

    int n = ideal.vars().size();
    auto productOf = [&](const std::vector<int>& vars) {
        Monomial m = Monomial::unit(n);
        for (int i : vars) m = m.times(Monomial::variable(n, i));
        return m;
    };
    auto dividesSomeGen = [&](const Monomial& m) {
        return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                           [&](const Monomial& g) { return m.divides(g); });
    };

    // Hypothesis: every (t-1)-subset of T divides some generator.
    bool hypothesis = inSupport;
    for (std::size_t drop = 0; drop < T.size() && hypothesis; ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < T.size(); ++i)
            if (i != drop) sub.push_back(T[i]);
        if (!dividesSomeGen(productOf(sub))) hypothesis = false;
    }
    report.hypothesis_ok = hypothesis;

    report.a = !dividesSomeGen(productOf(T));

    MonomialIdeal killedAll = localization_killing(ideal, T);
    report.b = true;
    for (std::size_t drop = 0; drop < T.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < T.size(); ++i)
            if (i != drop) sub.push_back(T[i]);
        if (localization_killing(ideal, sub) != killedAll) {
            report.b = false;
            break;
        }
    }

    report.c = true;
    for (const MonomialPrime& p : associated_primes(ideal)) {
        int met = 0;
        for (int i : T)
            if (p.has_member(i)) ++met;
        if (met == 1) {
            report.c = false;
            break;
        }
    }
    return report;
}

}  // namespace polymat
