#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "mcg/graph.hpp"
#include "mcg/matching.hpp"

namespace mcg {

struct Cut {
    VertexSet shore;  // X; the complement shore is implied
    std::vector<EdgeId> edges;

    bool trivial(int n) const { return shore.size() == 1 || shore.size() == n - 1; }
};

struct DecompositionPiece {
    Graph graph;
    bool brick = false;
};

struct DecompositionResult {
    std::vector<DecompositionPiece> pieces;
    int brick_count = 0;
};

/// True iff no vertex cut of size < k disconnects g (brute force, k <= 4).
inline bool vertex_connectivity_at_least(const Graph& g, int k) {
    int n = g.order();
    if (n <= k) return false;
    std::vector<VertexId> cut;
    auto search = [&](auto&& self, VertexId from, int remaining) -> bool {
        if (remaining == 0) {
            auto del = delete_vertices(g, VertexSet::from(cut));
            return is_connected(del.graph);
        }
        for (VertexId v = from; v < n; ++v) {
            cut.push_back(v);
            bool ok = self(self, v + 1, remaining - 1);
            cut.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int size = 0; size < k; ++size)
        if (!search(search, 0, size)) return false;
    return true;
}

/// |M ∩ ∂(X)| = 1 for every perfect matching M. Decided exactly: a shore of
/// even size is never tight, and an odd shore fails iff two vertex-disjoint
/// cut edges extend to a perfect matching.
inline bool is_tight_cut(const Graph& g, VertexSet x) {
    int n = g.order();
    if (x.empty() || x == VertexSet::full(n))
        throw std::invalid_argument("is_tight_cut: shore must be nonempty and proper");
    if (x.size() % 2 == 0) return false;
    MatchingOracle oracle(g);
    std::vector<EdgeId> cut = cut_edges(g, x);
    VertexSet all = VertexSet::full(n);
    for (size_t i = 0; i < cut.size(); ++i)
        for (size_t j = i + 1; j < cut.size(); ++j) {
            const Edge& e = g.edge(cut[i]);
            const Edge& f = g.edge(cut[j]);
            if (e.incident(f.u) || e.incident(f.v)) continue;
            VertexSet rest = all;
            rest.remove(e.u);
            rest.remove(e.v);
            rest.remove(f.u);
            rest.remove(f.v);
            if (oracle.matchable(rest)) return false;
        }
    return true;
}

/// Deterministic orders in which candidate tight cuts are tried; used to
/// exercise the decomposition-invariance property.
enum class CutPolicy {
    fast_then_lex,   // barrier cuts, 2-separation cuts, then exhaustive
    lex,             // shores by (size, lexicographic)
    reverse_lex,     // shores by (size, reverse lexicographic)
    large_first,     // shores by (descending size, lexicographic)
    twosep_then_lex  // 2-separation cuts, barrier cuts, then exhaustive
};

namespace detail {

inline std::optional<Cut> make_cut(const Graph& g, VertexSet x) {
    return Cut{x, cut_edges(g, x)};
}

/// Barrier cuts: shores are odd components of G-S for a nontrivial maximal
/// barrier S.
inline std::optional<Cut> first_barrier_cut(const Graph& g) {
    for (const Barrier& b : maximal_barriers(g)) {
        if (b.vertices.size() < 2) continue;
        for (const VertexSet& comp : b.odd_components) {
            if (comp.size() < 2 || comp.size() > g.order() - 2) continue;
            Cut c{comp, cut_edges(g, comp)};
            assert(is_tight_cut(g, comp));
            return c;
        }
    }
    return std::nullopt;
}

/// 2-separation cuts: {u,v} a 2-vertex cut with an even component K; the
/// shore is V(K) ∪ {u}.
inline std::optional<Cut> first_twosep_cut(const Graph& g) {
    int n = g.order();
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            auto comps = components_within(g, VertexSet::full(n) - VertexSet::of({u, v}));
            if (comps.size() < 2) continue;
            for (const VertexSet& comp : comps) {
                if (comp.size() % 2 != 0) continue;
                VertexSet shore = comp;
                shore.add(u);
                if (shore.size() < 2 || shore.size() > n - 2) continue;
                if (is_tight_cut(g, shore)) return Cut{shore, cut_edges(g, shore)};
            }
        }
    return std::nullopt;
}

inline std::optional<Cut> exhaustive_cut(const Graph& g, CutPolicy policy) {
    int n = g.order();
    std::vector<VertexSet> shores;
    for (std::uint64_t bits = 1; bits + 1 < (1ull << n); ++bits) {
        VertexSet x(bits);
        if (x.size() < 2 || x.size() > n - 2) continue;
        if (x.size() % 2 == 0) continue;
        shores.push_back(x);
    }
    switch (policy) {
        case CutPolicy::reverse_lex:
            std::stable_sort(shores.begin(), shores.end(), [](VertexSet a, VertexSet b) {
                return std::pair(a.size(), ~a.bits()) < std::pair(b.size(), ~b.bits());
            });
            break;
        case CutPolicy::large_first:
            std::stable_sort(shores.begin(), shores.end(), [](VertexSet a, VertexSet b) {
                return std::pair(-a.size(), a.bits()) < std::pair(-b.size(), b.bits());
            });
            break;
        default:
            std::stable_sort(shores.begin(), shores.end(), [](VertexSet a, VertexSet b) {
                return std::pair(a.size(), a.bits()) < std::pair(b.size(), b.bits());
            });
            break;
    }
    for (VertexSet x : shores)
        if (is_tight_cut(g, x)) return make_cut(g, x);
    return std::nullopt;
}

}  // namespace detail

/// First nontrivial tight cut under the given policy, if any.
inline std::optional<Cut> find_nontrivial_tight_cut(const Graph& g,
                                                    CutPolicy policy = CutPolicy::fast_then_lex) {
    if (g.order() > kSubsetCap) throw cap_exceeded("tight cut search beyond cap");
    if (policy == CutPolicy::fast_then_lex) {
        if (auto c = detail::first_barrier_cut(g)) return c;
        if (auto c = detail::first_twosep_cut(g)) return c;
    } else if (policy == CutPolicy::twosep_then_lex) {
        if (auto c = detail::first_twosep_cut(g)) return c;
        if (auto c = detail::first_barrier_cut(g)) return c;
    }
    return detail::exhaustive_cut(g, policy);
}

/// G/(X̄ → x̄): contract the complement of `keep` to one vertex, which gets a
/// provenance label listing the contracted vertices. Edge ids of surviving
/// edges are preserved.
inline Graph contract_complement(const Graph& g, VertexSet keep) {
    int n = g.order();
    std::vector<VertexId> map(n, -1);
    int k = 0;
    for (VertexId v = 0; v < n; ++v)
        if (keep.contains(v)) map[v] = k++;
    Graph h(k + 1);
    VertexId bar = k;
    std::string members;
    for (VertexId v = 0; v < n; ++v)
        if (!keep.contains(v)) members += (members.empty() ? "" : ",") + std::to_string(v);
    h.set_label(bar, "contracted:" + members);
    for (VertexId v = 0; v < n; ++v)
        if (keep.contains(v) && !g.label(v).empty()) h.set_label(map[v], g.label(v));
    h.reserve_ids(g.next_edge_id());
    for (const Edge& e : g.edges()) {
        bool cu = keep.contains(e.u), cv = keep.contains(e.v);
        if (!cu && !cv) continue;  // becomes a loop at the contraction vertex
        h.add_edge_keeping_id(cu ? map[e.u] : bar, cv ? map[e.v] : bar, e.id);
    }
    return h;
}

inline bool is_brick(const Graph& g) {
    int n = g.order();
    if (n < 4 || n % 2 != 0) return false;
    return vertex_connectivity_at_least(g, 3) && is_bicritical(g);
}

/// Brick via the tight-cut definition, for cross-validation against the
/// 3-connected + bicritical characterization.
inline bool is_brick_by_tight_cuts(const Graph& g) {
    return is_matching_covered(g) && !is_bipartite(g) &&
           !find_nontrivial_tight_cut(g).has_value();
}

/// Bipartite matching covered graph free of nontrivial tight cuts. Order six
/// or more uses the |N(S)| >= |S|+2 characterization; smaller orders fall
/// back to the definition.
inline bool is_brace(const Graph& g) {
    auto bip = bipartition_of(g);
    if (!bip) throw std::invalid_argument("is_brace: graph is not bipartite");
    if (!is_matching_covered(g)) return false;
    if (g.order() < 6) return !find_nontrivial_tight_cut(g).has_value();
    std::vector<VertexId> a = bip->color_a.to_vector();
    int half = int(a.size());
    for (std::uint64_t bits = 1; bits < (1ull << half); ++bits) {
        VertexSet s;
        for (int i = 0; i < half; ++i)
            if ((bits >> i) & 1ull) s.add(a[i]);
        if (s.size() > half - 2) continue;
        VertexSet nbhd;
        for (const Edge& e : g.edges()) {
            if (s.contains(e.u)) nbhd.add(e.v);
            if (s.contains(e.v)) nbhd.add(e.u);
        }
        if (nbhd.size() < s.size() + 2) return false;
    }
    return true;
}

/// Recursive tight cut decomposition. Each contraction of a nontrivial tight
/// cut must stay matching covered with fewer vertices, which is checked.
inline DecompositionResult tight_cut_decomposition(const Graph& g,
                                                   CutPolicy policy = CutPolicy::fast_then_lex) {
    if (!is_matching_covered(g))
        throw std::invalid_argument("tight_cut_decomposition: not matching covered");
    DecompositionResult out;
    std::vector<Graph> work{g};
    while (!work.empty()) {
        Graph cur = std::move(work.back());
        work.pop_back();
        auto cut = find_nontrivial_tight_cut(cur, policy);
        if (!cut) {
            bool brick = !is_bipartite(cur);
            out.brick_count += brick;
            out.pieces.push_back({std::move(cur), brick});
            continue;
        }
        Graph side1 = contract_complement(cur, cut->shore);
        Graph side2 = contract_complement(cur, VertexSet::full(cur.order()) - cut->shore);
        for (Graph* side : {&side1, &side2}) {
            if (side->order() >= cur.order() || !is_matching_covered(*side))
                throw theorem_violation("tight cut contraction is not a smaller mc graph");
        }
        work.push_back(std::move(side1));
        work.push_back(std::move(side2));
    }
    std::sort(out.pieces.begin(), out.pieces.end(),
              [](const DecompositionPiece& a, const DecompositionPiece& b) {
                  return a.graph.order() < b.graph.order();
              });
    return out;
}

/// b(G): the number of bricks in any tight cut decomposition.
inline int brick_count(const Graph& g) { return tight_cut_decomposition(g).brick_count; }

}  // namespace mcg
