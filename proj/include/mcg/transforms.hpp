#pragma once

#include <algorithm>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

struct BicontractionStep {
    VertexId center = -1;                // the degree-2 vertex, pre-contraction indices
    VertexId left = -1, right = -1;      // its two neighbours
    VertexId merged = -1;                // resulting vertex, post-contraction indices
    std::vector<VertexId> vertex_map;    // old index -> new index
    std::vector<EdgeId> dropped_edges;   // left-right edges that would become loops
};

struct BicontractionResult {
    Graph graph;
    BicontractionStep step;
};

/// Contract both edges at a degree-2 vertex with distinct neighbours. Edges
/// joining the two neighbours would become loops; they are deleted and
/// recorded in the step.
inline BicontractionResult bicontract(const Graph& g, VertexId v) {
    g.check_vertex(v);
    if (g.degree(v) != 2) throw std::invalid_argument("bicontract: vertex degree is not two");
    auto nbrs = g.neighbors(v);
    if (nbrs.size() != 2)
        throw std::invalid_argument("bicontract: neighbours are not distinct");
    VertexId u = nbrs[0], w = nbrs[1];

    BicontractionStep step;
    step.center = v;
    step.left = u;
    step.right = w;
    step.vertex_map.assign(g.order(), -1);
    int k = 0;
    for (VertexId x = 0; x < g.order(); ++x)
        if (x != v && x != w) step.vertex_map[x] = k++;
    step.vertex_map[w] = step.vertex_map[u];
    step.vertex_map[v] = step.vertex_map[u];
    step.merged = step.vertex_map[u];

    Graph h(k);
    for (VertexId x = 0; x < g.order(); ++x)
        if (x != v && x != w && !g.label(x).empty()) h.set_label(step.vertex_map[x], g.label(x));
    std::string merged_label;
    for (VertexId x : {u, v, w})
        if (!g.label(x).empty()) merged_label += (merged_label.empty() ? "" : "+") + g.label(x);
    if (!merged_label.empty()) h.set_label(step.merged, merged_label);

    h.reserve_ids(g.next_edge_id());
    for (const Edge& e : g.edges()) {
        if (e.incident(v)) continue;  // the two contracted edges
        if ((e.u == u && e.v == w) || (e.u == w && e.v == u)) {
            step.dropped_edges.push_back(e.id);
            continue;
        }
        h.add_edge_keeping_id(step.vertex_map[e.u], step.vertex_map[e.v], e.id);
    }
    return {std::move(h), std::move(step)};
}

struct RetractResult {
    Graph graph;
    std::vector<BicontractionStep> log;
    std::vector<VertexId> vertex_map;  // original index -> final index
    bool degenerate = false;           // collapsed below four vertices
};

/// Bicontract degree-2 vertices (lowest current index first) until none
/// remain. A collapse below four vertices is flagged, not an error.
inline RetractResult retract(const Graph& g) {
    RetractResult out;
    out.graph = g;
    out.vertex_map.resize(g.order());
    for (VertexId v = 0; v < g.order(); ++v) out.vertex_map[v] = v;
    for (;;) {
        VertexId pick = -1;
        for (VertexId v = 0; v < out.graph.order(); ++v)
            if (out.graph.degree(v) == 2 && out.graph.neighbors(v).size() == 2) {
                pick = v;
                break;
            }
        if (pick == -1) break;
        BicontractionResult bc = bicontract(out.graph, pick);
        for (VertexId& m : out.vertex_map)
            if (m != -1) m = bc.step.vertex_map[m];
        out.log.push_back(std::move(bc.step));
        out.graph = std::move(bc.graph);
    }
    out.degenerate = out.graph.order() < 4;
    return out;
}

struct BiSplitResult {
    Graph graph;
    VertexId v1 = -1, v2 = -1, v0 = -1;
    EdgeId link1 = -1, link2 = -1;  // the new edges v1-v0, v2-v0
};

/// Replace v by v1 (keeping v's index) and v2, distributing v's edges per
/// the partition, and join a new vertex v0 to both.
inline BiSplitResult bi_split(const Graph& g, VertexId v, const std::vector<EdgeId>& part1,
                              const std::vector<EdgeId>& part2) {
    g.check_vertex(v);
    std::vector<EdgeId> incident = g.incident_edges(v);
    std::vector<EdgeId> combined = part1;
    combined.insert(combined.end(), part2.begin(), part2.end());
    std::sort(combined.begin(), combined.end());
    std::vector<EdgeId> expected = incident;
    std::sort(expected.begin(), expected.end());
    if (part1.empty() || part2.empty() || combined != expected ||
        std::adjacent_find(combined.begin(), combined.end()) != combined.end())
        throw std::invalid_argument("bi_split: parts must partition the edges at v");

    BiSplitResult out;
    Graph h(g.order());
    for (VertexId x = 0; x < g.order(); ++x)
        if (!g.label(x).empty()) h.set_label(x, g.label(x));
    out.v1 = v;
    out.v2 = h.add_vertex();
    out.v0 = h.add_vertex();
    auto in_part2 = [&](EdgeId id) {
        return std::find(part2.begin(), part2.end(), id) != part2.end();
    };
    h.reserve_ids(g.next_edge_id());
    for (const Edge& e : g.edges()) {
        VertexId u = e.u, w = e.v;
        if (e.incident(v) && in_part2(e.id)) (u == v ? u : w) = out.v2;
        h.add_edge_keeping_id(u, w, e.id);
    }
    out.link1 = h.add_edge(out.v1, out.v0);
    out.link2 = h.add_edge(out.v2, out.v0);
    out.graph = std::move(h);
    return out;
}

}  // namespace mcg
