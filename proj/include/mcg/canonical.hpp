#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

namespace detail {

inline std::vector<std::vector<int>> multiplicity_matrix(const Graph& g) {
    std::vector<std::vector<int>> m(g.order(), std::vector<int>(g.order(), 0));
    for (const Edge& e : g.edges()) {
        ++m[e.u][e.v];
        ++m[e.v][e.u];
    }
    return m;
}

/// Iterated color refinement. Color values are ranks of sorted invariant
/// keys, so they agree across isomorphic graphs.
inline std::vector<int> refined_colors(const Graph& g, const std::vector<std::vector<int>>& mult) {
    int n = g.order();
    std::vector<int> color(n, 0);
    for (;;) {
        using Key = std::pair<int, std::vector<std::pair<int, int>>>;
        std::vector<Key> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < n; ++u)
                if (mult[v][u]) nb.emplace_back(color[u], mult[v][u]);
            std::sort(nb.begin(), nb.end());
            keys[v] = {color[v], std::move(nb)};
        }
        std::map<Key, int> rank;
        for (const Key& k : keys) rank.emplace(k, 0);
        int next = 0;
        for (auto& [k, r] : rank) r = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = rank[keys[v]];
        if (fresh == color) return color;
        color = std::move(fresh);
    }
}

struct CanonicalSearch {
    int n;
    const std::vector<std::vector<int>>& mult;
    std::vector<int> color;      // refined color per vertex
    std::vector<int> target;     // color required at each position
    std::vector<int> best_rows;  // concatenated rows of the best matrix
    std::vector<int> best_perm;  // position -> vertex
    std::vector<int> perm;
    std::vector<int> rows;
    std::vector<bool> used;

    void run() {
        perm.assign(n, -1);
        used.assign(n, false);
        rows.clear();
        extend(0);
    }

    void extend(int pos) {
        if (pos == n) {
            if (best_perm.empty() || rows < best_rows) {
                best_rows = rows;
                best_perm = perm;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != target[pos]) continue;
            size_t mark = rows.size();
            for (int i = 0; i < pos; ++i) rows.push_back(mult[v][perm[i]]);
            if (prefix_can_win()) {
                perm[pos] = v;
                used[v] = true;
                extend(pos + 1);
                used[v] = false;
                perm[pos] = -1;
            }
            rows.resize(mark);
        }
    }

    // Prune exactly when the prefix already compares greater than the
    // incumbent: no completion of it can become the minimum.
    bool prefix_can_win() const {
        if (best_perm.empty()) return true;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] < best_rows[i]) return true;
            if (rows[i] > best_rows[i]) return false;
        }
        return true;
    }
};

}  // namespace detail

/// Canonical relabeling: position -> vertex, minimizing (color sequence,
/// adjacency multiplicity matrix) lexicographically.
inline std::vector<VertexId> canonical_order(const Graph& g) {
    int n = g.order();
    if (n == 0) return {};
    auto mult = detail::multiplicity_matrix(g);
    auto color = detail::refined_colors(g, mult);
    std::vector<int> target = color;
    std::sort(target.begin(), target.end());
    detail::CanonicalSearch s{n, mult, color, target, {}, {}, {}, {}, {}};
    s.run();
    std::vector<VertexId> out(s.best_perm.begin(), s.best_perm.end());
    return out;
}

/// Equal byte strings iff the graphs are isomorphic (multiplicity-aware).
inline std::string canonical_form(const Graph& g) {
    int n = g.order();
    auto order = canonical_order(g);
    auto mult = detail::multiplicity_matrix(g);
    std::string out;
    out.reserve(1 + n * (n - 1) / 2);
    out.push_back(char(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) out.push_back(char(mult[order[i]][order[j]]));
    return out;
}

/// Vertex bijection g1 -> g2 preserving edge multiplicities, if one exists.
inline std::optional<std::vector<VertexId>> isomorphism(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
    if (canonical_form(g1) != canonical_form(g2)) return std::nullopt;
    auto o1 = canonical_order(g1);
    auto o2 = canonical_order(g2);
    std::vector<VertexId> map(g1.order());
    for (int i = 0; i < g1.order(); ++i) map[o1[i]] = o2[i];
    return map;
}

inline bool are_isomorphic(const Graph& g1, const Graph& g2) {
    return g1.order() == g2.order() && g1.size() == g2.size() &&
           canonical_form(g1) == canonical_form(g2);
}

}  // namespace mcg
