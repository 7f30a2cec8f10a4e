#pragma once

#include <json.hpp>

#include "mcg/engine.hpp"
#include "mcg/families.hpp"
#include "mcg/io.hpp"
#include "mcg/matching.hpp"
#include "mcg/removability.hpp"
#include "mcg/structure.hpp"

namespace mcg {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "brickforge/1";

inline json tag_json(const FamilyTag& tag) {
    return json{{"name", family_name(tag.family)}, {"params", tag.params}};
}

inline json graph_json(const Graph& g,
                       const std::vector<std::pair<EdgeId, EdgeId>>& doubletons = {}) {
    return json{{"order", g.order()}, {"size", g.size()}, {"mcg", to_mcg(g, doubletons)}};
}

/// Position of an edge in the id-sorted order used by the mcg/1 writer.
inline int edge_position(const Graph& g, EdgeId id) {
    std::vector<EdgeId> ids;
    for (const Edge& e : g.edges()) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw unknown_edge(id);
    return int(it - ids.begin());
}

inline json doubleton_json(const Graph& g, const Doubleton& r) {
    return json{{"alpha", edge_position(g, r.alpha)},
                {"beta", edge_position(g, r.beta)},
                {"alpha_ends", {r.a1, r.a2}},
                {"beta_ends", {r.b1, r.b2}},
                {"color_a", r.h_partition.color_a.to_vector()},
                {"color_b", r.h_partition.color_b.to_vector()}};
}

/// Full analysis of one graph: predicates, doubletons, per-edge classes,
/// brick count and family tag. Deterministic field order and content.
inline json analyze(const Graph& g) {
    json out;
    out["schema"] = kSchema;
    out["graph"] = graph_json(g);

    bool connected = is_connected(g);
    bool bipartite = is_bipartite(g);
    bool pm = has_perfect_matching(g);
    bool mc = is_matching_covered(g);
    bool bicritical = is_bicritical(g);
    bool three_connected = vertex_connectivity_at_least(g, 3);
    bool brick = is_brick(g);
    std::vector<Doubleton> doubletons = mc ? removable_doubletons(g) : std::vector<Doubleton>{};
    bool near_bipartite = mc && !bipartite && !doubletons.empty();

    out["predicates"] = {
        {"connected", connected},
        {"bipartite", bipartite},
        {"has_perfect_matching", pm},
        {"matching_covered", mc},
        {"bicritical", bicritical},
        {"three_connected", three_connected},
        {"brick", brick},
        {"brace", bipartite ? json(is_brace(g)) : json(nullptr)},
        {"near_bipartite", near_bipartite},
    };
    out["brick_count"] = mc ? json(brick_count(g)) : json(nullptr);

    Recognition rec = recognize(g);
    out["family"] = tag_json(rec.tag);
    json matches = json::array();
    for (const FamilyTag& t : rec.all_matches) matches.push_back(tag_json(t));
    out["family"]["all_matches"] = matches;

    json ds = json::array();
    for (const Doubleton& r : doubletons) ds.push_back(doubleton_json(g, r));
    out["doubletons"] = ds;

    json edges = json::array();
    if (mc) {
        for (const EdgeClass& c : classify_edges(g, doubletons)) {
            const Edge& e = g.edge(c.edge);
            json je{{"edge", edge_position(g, c.edge)},
                    {"ends", {e.u, e.v}},
                    {"removable", c.removable},
                    {"b_invariant", c.b_invariant},
                    {"thin", c.thin},
                    {"strictly_thin", c.strictly_thin}};
            json per = json::array();
            for (const DoubletonClassification& dc : c.per_doubleton) {
                per.push_back({{"doubleton", dc.doubleton},
                               {"r_compatible", dc.r_compatible},
                               {"index", dc.index ? json(*dc.index) : json(nullptr)},
                               {"rank", dc.rank ? json(*dc.rank) : json(nullptr)},
                               {"r_thin", dc.r_thin},
                               {"strictly_r_thin", dc.strictly_r_thin}});
            }
            je["per_doubleton"] = per;
            edges.push_back(je);
        }
    }
    out["edges"] = edges;
    return out;
}

inline json decompose_json(const Graph& g) {
    json out;
    out["schema"] = kSchema;
    out["graph"] = graph_json(g);
    DecompositionResult d = tight_cut_decomposition(g);
    json pieces = json::array();
    for (const DecompositionPiece& p : d.pieces)
        pieces.push_back({{"order", p.graph.order()},
                          {"size", p.graph.size()},
                          {"kind", p.brick ? "brick" : "brace"},
                          {"simple", p.graph.is_simple()},
                          {"mcg", to_mcg(p.graph)}});
    out["pieces"] = pieces;
    out["brick_count"] = d.brick_count;
    return out;
}

inline json reduce_json(const Graph& g, const Doubleton& r) {
    ReductionTrace trace = reduce(g, r);
    json out;
    out["schema"] = kSchema;
    json steps = json::array();
    for (const ReductionStep& s : trace.steps) {
        json js;
        js["graph"] = graph_json(s.graph, {{s.doubleton.alpha, s.doubleton.beta}});
        js["doubleton"] = doubleton_json(s.graph, s.doubleton);
        js["strictly_r_thin_edge"] =
            s.chosen_edge ? json(edge_position(s.graph, *s.chosen_edge)) : json(nullptr);
        json log = json::array();
        for (const BicontractionStep& bc : s.retract_log)
            log.push_back({{"center", bc.center},
                           {"left", bc.left},
                           {"right", bc.right},
                           {"merged", bc.merged}});
        js["retract_log"] = log;
        steps.push_back(js);
    }
    out["steps"] = steps;
    out["terminal_family"] = tag_json(trace.terminal.tag);
    return out;
}

inline json iso_json(const Graph& g1, const Graph& g2) {
    json out;
    out["schema"] = kSchema;
    auto witness = isomorphism(g1, g2);
    out["isomorphic"] = witness.has_value();
    out["witness"] = witness ? json(*witness) : json(nullptr);
    return out;
}

}  // namespace mcg
