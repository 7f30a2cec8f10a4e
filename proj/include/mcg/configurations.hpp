#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "mcg/families.hpp"
#include "mcg/graph.hpp"
#include "mcg/removability.hpp"

namespace mcg {

enum class ConfigKind { r_ladder, r_biwheel };

/// An R-ladder or R-biwheel subgraph of H = G - R. Corners a, b lie in V(R);
/// u and w are the free corners (hubs in the biwheel case).
struct RConfiguration {
    ConfigKind kind = ConfigKind::r_ladder;
    VertexId a = -1, u = -1, b = -1, w = -1;
    VertexSet vertices;
    std::vector<EdgeId> edges;     // sorted
    std::vector<EdgeId> internal;  // internal rungs or spokes
    std::vector<EdgeId> external;  // [au, bw]
};

namespace detail {

struct ConfigSearch {
    const Graph& g;
    const Doubleton& r;
    Graph h;
    std::vector<RConfiguration> found;
    // An order-six block satisfies both definitions at once, so the same
    // edge set may legitimately appear under each kind.
    std::set<std::pair<ConfigKind, std::vector<EdgeId>>> seen;

    ConfigSearch(const Graph& g_, const Doubleton& r_)
        : g(g_), r(r_), h(underlying_bipartite(g_, r_)) {}

    std::optional<EdgeId> h_edge(VertexId u, VertexId v) const {
        for (const Edge& e : h.edges())
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.id;
        return std::nullopt;
    }

    bool cubic(VertexId v) const { return g.degree(v) == 3; }

    void emit(RConfiguration cfg) {
        std::sort(cfg.edges.begin(), cfg.edges.end());
        if (seen.insert({cfg.kind, cfg.edges}).second) found.push_back(std::move(cfg));
    }

    // --- R-ladders -------------------------------------------------------

    void ladders() {
        for (VertexId a : {r.a1, r.a2})
            for (VertexId u : h.neighbors(a))
                if (auto rung = h_edge(a, u)) grow_ladder(a, u, {*rung}, {}, VertexSet::of({a, u}));
    }

    // rungs[i] is the rung x_i y_i; side edges accumulate path edges.
    void grow_ladder(VertexId xi, VertexId yi, std::vector<EdgeId> rungs,
                     std::vector<EdgeId> side_edges, VertexSet used) {
        if (rungs.size() >= 3) try_close_ladder(xi, yi, rungs, side_edges, used);
        for (VertexId xn : h.neighbors(xi)) {
            if (used.contains(xn)) continue;
            auto ex = h_edge(xi, xn);
            for (VertexId yn : h.neighbors(yi)) {
                if (yn == xn || used.contains(yn)) continue;
                auto ey = h_edge(yi, yn);
                auto rung = h_edge(xn, yn);
                if (!rung) continue;
                auto next_rungs = rungs;
                next_rungs.push_back(*rung);
                auto next_sides = side_edges;
                next_sides.push_back(*ex);
                next_sides.push_back(*ey);
                VertexSet next_used = used;
                next_used.add(xn);
                next_used.add(yn);
                grow_ladder(xn, yn, std::move(next_rungs), std::move(next_sides), next_used);
            }
        }
    }

    void try_close_ladder(VertexId xj, VertexId yj, const std::vector<EdgeId>& rungs,
                          const std::vector<EdgeId>& side_edges, VertexSet used) {
        // the B-colored end of the last rung is b and must lie in V(R)
        VertexId b = r.h_partition.color_b.contains(xj) ? xj : yj;
        VertexId w = b == xj ? yj : xj;
        if (b != r.b1 && b != r.b2) return;
        const Edge& first = g.edge(rungs.front());
        VertexId a = r.h_partition.color_a.contains(first.u) ? first.u : first.v;
        VertexId u = first.u == a ? first.v : first.u;
        // (i) every vertex except possibly u and w is cubic in G
        bool ok = true;
        used.for_each([&](VertexId v) {
            if (v != u && v != w && !cubic(v)) ok = false;
        });
        if (!ok) return;
        // (iii) internal rungs are R-thin of index two
        for (size_t i = 1; i + 1 < rungs.size(); ++i)
            if (!is_r_thin(g, r, rungs[i]) || index_of(g, r, rungs[i]) != 2) return;
        RConfiguration cfg;
        cfg.kind = ConfigKind::r_ladder;
        cfg.a = a;
        cfg.u = u;
        cfg.b = b;
        cfg.w = w;
        cfg.vertices = used;
        cfg.edges = rungs;
        cfg.edges.insert(cfg.edges.end(), side_edges.begin(), side_edges.end());
        cfg.internal.assign(rungs.begin() + 1, rungs.end() - 1);
        cfg.external = {rungs.front(), rungs.back()};
        emit(cfg);
    }

    // --- R-biwheels ------------------------------------------------------

    void biwheels() {
        for (VertexId a : {r.a1, r.a2})
            for (VertexId b : {r.b1, r.b2})
                for (VertexId u : h.neighbors(a)) {
                    if (u == b || cubic(u)) continue;  // hubs are noncubic
                    for (VertexId w : h.neighbors(b)) {
                        if (w == a || w == u || cubic(w)) continue;
                        auto ext_a = h_edge(u, a);
                        auto ext_b = h_edge(w, b);
                        if (!ext_a || !ext_b) continue;
                        grow_biwheel_path(a, b, u, w, {a}, VertexSet::of({a, u, w}),
                                          {*ext_a}, {});
                    }
                }
    }

    // path alternates: even positions adjacent to u, odd positions to w.
    void grow_biwheel_path(VertexId last, VertexId b, VertexId u, VertexId w,
                           std::vector<VertexId> path, VertexSet used,
                           std::vector<EdgeId> spokes, std::vector<EdgeId> path_edges) {
        int next_pos = int(path.size());
        VertexId hub = next_pos % 2 == 0 ? u : w;
        for (VertexId xn : h.neighbors(last)) {
            if (used.contains(xn) && xn != b) continue;
            if (xn == u || xn == w) continue;
            auto pe = h_edge(last, xn);
            auto spoke = h_edge(hub, xn);
            if (!spoke) continue;
            if (xn == b) {
                if (next_pos % 2 == 1 && next_pos >= 3) {
                    auto full_path = path;
                    full_path.push_back(b);
                    auto full_spokes = spokes;
                    full_spokes.push_back(*spoke);
                    auto full_pedges = path_edges;
                    full_pedges.push_back(*pe);
                    VertexSet all = used;
                    all.add(b);
                    try_close_biwheel(full_path, u, w, all, full_spokes, full_pedges);
                }
                continue;
            }
            auto next_path = path;
            next_path.push_back(xn);
            VertexSet next_used = used;
            next_used.add(xn);
            auto next_spokes = spokes;
            next_spokes.push_back(*spoke);
            auto next_pedges = path_edges;
            next_pedges.push_back(*pe);
            grow_biwheel_path(xn, b, u, w, std::move(next_path), next_used,
                              std::move(next_spokes), std::move(next_pedges));
        }
    }

    void try_close_biwheel(const std::vector<VertexId>& path, VertexId u, VertexId w,
                           VertexSet used, const std::vector<EdgeId>& spokes,
                           const std::vector<EdgeId>& path_edges) {
        // (i) hubs noncubic (checked at selection); every path vertex cubic
        for (VertexId v : path)
            if (!cubic(v)) return;
        // (iii) internal spokes are R-thin of index one
        for (size_t i = 1; i + 1 < spokes.size(); ++i)
            if (!is_r_thin(g, r, spokes[i]) || index_of(g, r, spokes[i]) != 1) return;
        RConfiguration cfg;
        cfg.kind = ConfigKind::r_biwheel;
        cfg.a = path.front();
        cfg.u = u;
        cfg.b = path.back();
        cfg.w = w;
        cfg.vertices = used;
        cfg.edges = spokes;
        cfg.edges.insert(cfg.edges.end(), path_edges.begin(), path_edges.end());
        cfg.internal.assign(spokes.begin() + 1, spokes.end() - 1);
        cfg.external = {spokes.front(), spokes.back()};
        emit(cfg);
    }
};

}  // namespace detail

/// All R-ladder and R-biwheel configurations of a simple R-brick, anchored
/// at V(R), deduplicated by edge set and ordered deterministically.
inline std::vector<RConfiguration> find_r_configurations(const Graph& g, const Doubleton& r) {
    detail::ConfigSearch search(g, r);
    search.ladders();
    search.biwheels();
    std::sort(search.found.begin(), search.found.end(),
              [](const RConfiguration& x, const RConfiguration& y) {
                  return std::pair(x.kind, x.edges) < std::pair(y.kind, y.edges);
              });
    return search.found;
}

}  // namespace mcg
