#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mcg/canonical.hpp"
#include "mcg/graph.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"
#include "mcg/transforms.hpp"

namespace mcg {

/// Removable pair R = {alpha, beta}: G - R is bipartite and matching
/// covered. Normalized so that alpha is the lower edge id and color class A
/// contains alpha's ends (alpha = a1a2, beta = b1b2).
struct Doubleton {
    EdgeId alpha = -1;
    EdgeId beta = -1;
    Bipartition h_partition;  // of G - R
    VertexId a1 = -1, a2 = -1, b1 = -1, b2 = -1;

    VertexSet ends() const { return VertexSet::of({a1, a2, b1, b2}); }
    bool contains(EdgeId e) const { return e == alpha || e == beta; }
};

inline Graph underlying_bipartite(const Graph& g, const Doubleton& r) {
    return delete_edge(delete_edge(g, r.alpha), r.beta);
}

/// Validates and normalizes an edge pair as a removable doubleton.
inline std::optional<Doubleton> make_doubleton(const Graph& g, EdgeId e1, EdgeId e2) {
    if (e1 == e2) return std::nullopt;
    Graph h = delete_edge(delete_edge(g, e1), e2);
    auto bip = bipartition_of(h);
    if (!bip || !is_matching_covered(h)) return std::nullopt;
    Doubleton r;
    r.alpha = std::min(e1, e2);
    r.beta = std::max(e1, e2);
    const Edge& ea = g.edge(r.alpha);
    const Edge& eb = g.edge(r.beta);
    // In a nonbipartite matching covered graph the doubleton edges always
    // join same-class pairs, one pair per class.
    if (bip->color_a.contains(ea.u) != bip->color_a.contains(ea.v) ||
        bip->color_a.contains(eb.u) != bip->color_a.contains(eb.v) ||
        bip->color_a.contains(ea.u) == bip->color_a.contains(eb.u))
        throw theorem_violation("doubleton edges are not same-class pairs of opposite classes");
    r.h_partition = *bip;
    if (!bip->color_a.contains(ea.u)) std::swap(r.h_partition.color_a, r.h_partition.color_b);
    r.a1 = std::min(ea.u, ea.v);
    r.a2 = std::max(ea.u, ea.v);
    r.b1 = std::min(eb.u, eb.v);
    r.b2 = std::max(eb.u, eb.v);
    return r;
}

/// All edges whose deletion leaves a matching covered graph.
inline std::vector<EdgeId> removable_edges(const Graph& g) {
    std::vector<EdgeId> out;
    for (const Edge& e : g.edges())
        if (is_matching_covered(delete_edge(g, e.id))) out.push_back(e.id);
    return out;
}

inline bool is_removable(const Graph& g, EdgeId e) {
    return is_matching_covered(delete_edge(g, e));
}

/// All removable doubletons, ordered by (alpha, beta). Empty for bipartite
/// input.
inline std::vector<Doubleton> removable_doubletons(const Graph& g) {
    if (!is_matching_covered(g))
        throw std::invalid_argument("removable_doubletons: not matching covered");
    if (is_bipartite(g)) return {};
    std::vector<Doubleton> out;
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (auto r = make_doubleton(g, edges[i].id, edges[j].id)) out.push_back(*r);
    return out;
}

/// Removable in G and in the underlying bipartite graph H = G - R.
inline bool is_r_compatible(const Graph& g, const Doubleton& r, EdgeId e) {
    if (r.contains(e)) throw std::invalid_argument("is_r_compatible: edge lies in the doubleton");
    return is_removable(g, e) && is_removable(underlying_bipartite(g, r), e);
}

/// Number of maximal nontrivial barriers of G - e (zero, one or two).
inline int index_of(const Graph& g, const Doubleton& r, EdgeId e) {
    if (!is_r_compatible(g, r, e))
        throw std::invalid_argument("index_of: edge is not R-compatible");
    Graph ge = delete_edge(g, e);
    int count = 0;
    for (const Barrier& b : maximal_barriers(ge)) count += b.vertices.size() >= 2;
    if (count > 2) throw theorem_violation("more than two maximal nontrivial barriers in G-e");
    return count;
}

/// Order of the unique brick of G - e.
inline int rank_of(const Graph& g, const Doubleton& r, EdgeId e) {
    if (!is_r_compatible(g, r, e))
        throw std::invalid_argument("rank_of: edge is not R-compatible");
    DecompositionResult d = tight_cut_decomposition(delete_edge(g, e));
    if (d.brick_count != 1)
        throw theorem_violation("R-compatible edge is not b-invariant");
    for (const DecompositionPiece& p : d.pieces)
        if (p.brick) return p.graph.order();
    return 0;  // unreachable
}

inline bool is_b_invariant(const Graph& g, EdgeId e) {
    if (!is_removable(g, e)) return false;
    return tight_cut_decomposition(delete_edge(g, e)).brick_count == 1;
}

/// Thin: b-invariant with a brick retract.
inline bool is_thin(const Graph& g, EdgeId e) {
    if (!is_b_invariant(g, e)) return false;
    RetractResult rr = retract(delete_edge(g, e));
    return !rr.degenerate && is_brick(rr.graph);
}

/// Strictly thin: thin with a simple retract (of a simple brick).
inline bool is_strictly_thin(const Graph& g, EdgeId e) {
    if (!is_thin(g, e)) return false;
    return retract(delete_edge(g, e)).graph.is_simple();
}

/// R-thin: R-compatible with a brick retract.
inline bool is_r_thin(const Graph& g, const Doubleton& r, EdgeId e) {
    if (r.contains(e) || !is_r_compatible(g, r, e)) return false;
    RetractResult rr = retract(delete_edge(g, e));
    return !rr.degenerate && is_brick(rr.graph);
}

inline bool is_strictly_r_thin(const Graph& g, const Doubleton& r, EdgeId e) {
    if (!is_r_thin(g, r, e)) return false;
    return retract(delete_edge(g, e)).graph.is_simple();
}

namespace detail {

inline Graph k4() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph c6_bar() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace detail

/// Lowest-id R-thin edge. Every R-brick other than K4 and C6-bar has one;
/// finding none on such input is a theorem violation.
inline std::optional<EdgeId> find_r_thin_edge(const Graph& g, const Doubleton& r) {
    std::vector<EdgeId> ids;
    for (const Edge& e : g.edges())
        if (!r.contains(e.id)) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    for (EdgeId e : ids)
        if (is_r_thin(g, r, e)) return e;
    if (is_brick(g) && !are_isomorphic(g, detail::k4()) && !are_isomorphic(g, detail::c6_bar()))
        throw theorem_violation("R-brick distinct from K4 and C6-bar has no R-thin edge");
    return std::nullopt;
}

inline std::optional<EdgeId> find_strictly_r_thin_edge(const Graph& g, const Doubleton& r) {
    std::vector<EdgeId> ids;
    for (const Edge& e : g.edges())
        if (!r.contains(e.id)) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    for (EdgeId e : ids)
        if (is_strictly_r_thin(g, r, e)) return e;
    return std::nullopt;
}

struct DoubletonClassification {
    int doubleton = -1;  // index into the graph's doubleton list
    bool r_compatible = false;
    std::optional<int> index;
    std::optional<int> rank;
    bool r_thin = false;
    bool strictly_r_thin = false;
};

struct EdgeClass {
    EdgeId edge = -1;
    bool removable = false;
    bool b_invariant = false;
    bool thin = false;
    bool strictly_thin = false;
    std::vector<DoubletonClassification> per_doubleton;
};

/// Full per-edge classification against every removable doubleton.
inline std::vector<EdgeClass> classify_edges(const Graph& g,
                                             const std::vector<Doubleton>& doubletons) {
    bool simple = g.is_simple();
    std::vector<EdgeClass> out;
    for (const Edge& e : g.edges()) {
        EdgeClass c;
        c.edge = e.id;
        c.removable = is_removable(g, e.id);
        if (c.removable) {
            c.b_invariant = is_b_invariant(g, e.id);
            c.thin = c.b_invariant && is_thin(g, e.id);
            c.strictly_thin = simple && c.thin && is_strictly_thin(g, e.id);
        }
        for (size_t i = 0; i < doubletons.size(); ++i) {
            const Doubleton& r = doubletons[i];
            DoubletonClassification dc;
            dc.doubleton = int(i);
            if (!r.contains(e.id) && c.removable) {
                dc.r_compatible = is_r_compatible(g, r, e.id);
                if (dc.r_compatible) {
                    dc.index = index_of(g, r, e.id);
                    dc.rank = rank_of(g, r, e.id);
                    dc.r_thin = is_r_thin(g, r, e.id);
                    dc.strictly_r_thin = simple && dc.r_thin && is_strictly_r_thin(g, r, e.id);
                }
            }
            c.per_doubleton.push_back(dc);
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// A strictly thin edge that is R-compatible for at least one doubleton.
inline bool has_compatible_strictly_thin_edge(const Graph& g,
                                              const std::vector<Doubleton>& doubletons) {
    for (const Edge& e : g.edges()) {
        if (!is_strictly_thin(g, e.id)) continue;
        for (const Doubleton& r : doubletons)
            if (!r.contains(e.id) && is_r_compatible(g, r, e.id)) return true;
    }
    return false;
}

}  // namespace mcg
