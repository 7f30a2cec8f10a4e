#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// Enumeration and subset-search cap; everything here is exact search.
inline constexpr int kSubsetCap = 16;

struct Matching {
    std::vector<EdgeId> edges;  // sorted ascending
    bool operator==(const Matching&) const = default;
};

struct Barrier {
    VertexSet vertices;
    std::vector<VertexSet> odd_components;  // witness: odd components of G-S
};

struct CanonicalPartition {
    std::vector<Barrier> blocks;  // maximal barriers, disjoint, covering V
};

/// Memoized matchability queries against one graph value. The memo is keyed
/// by the vertex subset still to be covered; one instance per analysis pass.
class MatchingOracle {
public:
    explicit MatchingOracle(const Graph& g) : g_(g), n_(g.order()) {
        if (n_ > kSubsetCap + 4) throw cap_exceeded("matching oracle beyond subset cap");
        memo_.assign(size_t(1) << n_, -1);
        adj_.assign(n_, 0);
        for (const Edge& e : g.edges()) {
            adj_[e.u] |= 1ull << e.v;
            adj_[e.v] |= 1ull << e.u;
        }
    }

    const Graph& graph() const { return g_; }

    /// Can the induced subgraph on `targets` be perfectly matched?
    bool matchable(VertexSet targets) {
        return matchable_bits(targets.bits());
    }

    bool has_perfect_matching() { return matchable(VertexSet::full(n_)); }

    /// All perfect matchings of the induced subgraph on `targets`, each a
    /// sorted edge-id list; the result is sorted lexicographically.
    std::vector<Matching> enumerate(VertexSet targets) {
        std::vector<Matching> out;
        std::vector<EdgeId> current;
        enumerate_rec(targets.bits(), current, out);
        for (Matching& m : out) std::sort(m.edges.begin(), m.edges.end());
        std::sort(out.begin(), out.end(),
                  [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
        return out;
    }

private:
    bool matchable_bits(std::uint64_t bits) {
        if (bits == 0) return true;
        int8_t& slot = memo_[bits];
        if (slot != -1) return slot != 0;
        int v = __builtin_ctzll(bits);
        bool ok = false;
        std::uint64_t candidates = adj_[v] & bits;
        for (std::uint64_t c = candidates; c && !ok; c &= c - 1) {
            int u = __builtin_ctzll(c);
            ok = matchable_bits(bits & ~(1ull << v) & ~(1ull << u));
        }
        slot = ok ? 1 : 0;
        return ok;
    }

    void enumerate_rec(std::uint64_t bits, std::vector<EdgeId>& current,
                       std::vector<Matching>& out) {
        if (bits == 0) {
            out.push_back({current});
            return;
        }
        int v = __builtin_ctzll(bits);
        for (const Edge& e : g_.edges()) {
            if (!e.incident(v)) continue;
            VertexId u = e.other(v);
            if (!((bits >> u) & 1ull)) continue;
            std::uint64_t rest = bits & ~(1ull << v) & ~(1ull << u);
            if (!matchable_bits(rest)) continue;
            current.push_back(e.id);
            enumerate_rec(rest, current, out);
            current.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int8_t> memo_;
    std::vector<std::uint64_t> adj_;
};

inline bool has_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) return false;
    return MatchingOracle(g).has_perfect_matching();
}

inline std::vector<Matching> enumerate_perfect_matchings(const Graph& g, int cap = kSubsetCap) {
    if (g.order() > cap) throw cap_exceeded("enumerate_perfect_matchings beyond cap");
    if (g.order() % 2 != 0) return {};
    return MatchingOracle(g).enumerate(VertexSet::full(g.order()));
}

/// Some perfect matching contains e.
inline bool is_admissible(const Graph& g, EdgeId id) {
    const Edge& e = g.edge(id);
    if (g.order() % 2 != 0) return false;
    MatchingOracle oracle(g);
    VertexSet rest = VertexSet::full(g.order());
    rest.remove(e.u);
    rest.remove(e.v);
    return oracle.matchable(rest);
}

inline bool is_matching_covered(const Graph& g) {
    if (g.order() < 2 || g.order() % 2 != 0 || g.size() == 0) return false;
    if (!is_connected(g)) return false;
    MatchingOracle oracle(g);
    VertexSet all = VertexSet::full(g.order());
    for (const Edge& e : g.edges()) {
        VertexSet rest = all;
        rest.remove(e.u);
        rest.remove(e.v);
        if (!oracle.matchable(rest)) return false;
    }
    return true;
}

inline bool is_stable_set(const Graph& g, VertexSet s) {
    for (const Edge& e : g.edges())
        if (s.contains(e.u) && s.contains(e.v)) return false;
    return true;
}

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.order(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1ull << e.v;
        adj[e.v] |= 1ull << e.u;
    }
    return adj;
}

inline int odd_components_masked(const std::vector<std::uint64_t>& adj, std::uint64_t keep) {
    int odd = 0;
    std::uint64_t left = keep;
    while (left) {
        std::uint64_t comp = 1ull << __builtin_ctzll(left);
        for (;;) {
            std::uint64_t grown = comp;
            std::uint64_t scan = comp;
            while (scan) {
                int v = __builtin_ctzll(scan);
                scan &= scan - 1;
                grown |= adj[v] & keep;
            }
            if (grown == comp) break;
            comp = grown;
        }
        odd += __builtin_popcountll(comp) & 1;
        left &= ~comp;
    }
    return odd;
}

inline std::vector<VertexSet> odd_components_of_deletion(const Graph& g, VertexSet s) {
    std::vector<VertexSet> odd;
    for (const VertexSet& comp : components_within(g, VertexSet::full(g.order()) - s))
        if (comp.size() % 2 == 1) odd.push_back(comp);
    return odd;
}

}  // namespace detail

inline int odd_component_count(const Graph& g, VertexSet s) {
    return int(detail::odd_components_of_deletion(g, s).size());
}

/// All barriers by subset enumeration (odd(G-S) == |S|). Requires a perfect
/// matching; n capped at kSubsetCap. For a matching covered graph every
/// returned barrier is stable, which is asserted.
inline std::vector<Barrier> barriers(const Graph& g) {
    int n = g.order();
    if (n > kSubsetCap) throw cap_exceeded("barrier enumeration beyond cap");
    if (!has_perfect_matching(g)) throw std::invalid_argument("barriers: no perfect matching");
    bool mc = is_matching_covered(g);
    auto adj = detail::adjacency_masks(g);
    std::uint64_t full = VertexSet::full(n).bits();
    std::vector<Barrier> out;
    for (std::uint64_t bits = 1; bits < (1ull << n); ++bits) {
        if (detail::odd_components_masked(adj, full & ~bits) != __builtin_popcountll(bits))
            continue;
        VertexSet s(bits);
        auto odd = detail::odd_components_of_deletion(g, s);
        if (mc) assert(is_stable_set(g, s));
        out.push_back({s, std::move(odd)});
    }
    return out;
}

inline std::vector<Barrier> maximal_barriers(const Graph& g) {
    std::vector<Barrier> all = barriers(g);
    std::vector<Barrier> out;
    for (const Barrier& b : all) {
        bool maximal = true;
        for (const Barrier& c : all)
            if (b.vertices != c.vertices && b.vertices.subset_of(c.vertices)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(b);
    }
    return out;
}

/// Maximal barriers of a matching covered graph partition its vertex set.
inline CanonicalPartition canonical_partition(const Graph& g) {
    if (!is_matching_covered(g))
        throw std::invalid_argument("canonical_partition: graph is not matching covered");
    CanonicalPartition p{maximal_barriers(g)};
    VertexSet seen;
    for (const Barrier& b : p.blocks) {
        if (seen.intersects(b.vertices))
            throw theorem_violation("canonical partition blocks overlap");
        seen = seen | b.vertices;
    }
    if (seen != VertexSet::full(g.order()))
        throw theorem_violation("canonical partition does not cover V");
    return p;
}

/// G-{u,v} has a perfect matching for every pair of distinct vertices.
inline bool is_bicritical(const Graph& g) {
    int n = g.order();
    if (n < 4 || n % 2 != 0) return false;
    MatchingOracle oracle(g);
    VertexSet all = VertexSet::full(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            VertexSet rest = all;
            rest.remove(u);
            rest.remove(v);
            if (!oracle.matchable(rest)) return false;
        }
    return true;
}

}  // namespace mcg
