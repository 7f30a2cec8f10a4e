#pragma once

#include <string>
#include <vector>

#include "mcg/canonical.hpp"
#include "mcg/graph.hpp"
#include "mcg/removability.hpp"

namespace mcg {

enum class Family {
    none,
    truncated_biwheel,
    prism,
    mobius_ladder,
    staircase,
    pseudo_biwheel,
    double_biwheel_1,
    double_ladder_1,
    laddered_biwheel_1,
    double_biwheel_2,
    double_ladder_2,
    laddered_biwheel_2,
    odd_wheel,
    petersen,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::none: return "none";
        case Family::truncated_biwheel: return "truncated_biwheel";
        case Family::prism: return "prism";
        case Family::mobius_ladder: return "mobius_ladder";
        case Family::staircase: return "staircase";
        case Family::pseudo_biwheel: return "pseudo_biwheel";
        case Family::double_biwheel_1: return "double_biwheel_I";
        case Family::double_ladder_1: return "double_ladder_I";
        case Family::laddered_biwheel_1: return "laddered_biwheel_I";
        case Family::double_biwheel_2: return "double_biwheel_II";
        case Family::double_ladder_2: return "double_ladder_II";
        case Family::laddered_biwheel_2: return "laddered_biwheel_II";
        case Family::odd_wheel: return "odd_wheel";
        case Family::petersen: return "petersen";
    }
    return "none";
}

/// Member of the union of the eleven families of the strictly-R-thin-free
/// classification.
inline bool in_family_list_11(Family f) {
    return f != Family::none && f != Family::odd_wheel && f != Family::petersen;
}

/// Member of the eight families free of compatible strictly thin edges.
inline bool in_family_list_8(Family f) {
    switch (f) {
        case Family::truncated_biwheel:
        case Family::prism:
        case Family::mobius_ladder:
        case Family::staircase:
        case Family::double_biwheel_1:
        case Family::double_ladder_1:
        case Family::laddered_biwheel_1:
        case Family::double_ladder_2:
            return true;
        default:
            return false;
    }
}

struct FamilyTag {
    Family family = Family::none;
    std::vector<int> params;  // orders: {n} or {n1, n2}

    bool operator==(const FamilyTag&) const = default;
};

enum class BlockKind { ladder, partial_biwheel };

/// A ladder or partial biwheel placed inside a host graph, with its corners
/// and rung/spoke edges. External rungs/spokes are au and bw; a,w are in
/// color class A and b,u in B; u,w are hubs when the block is a biwheel.
struct BlockSpec {
    BlockKind kind = BlockKind::ladder;
    int order = 0;
    VertexId a = -1, u = -1, b = -1, w = -1;
    std::vector<EdgeId> external;  // [au, bw]
    std::vector<EdgeId> internal;  // internal rungs/spokes
    std::vector<VertexId> vertices;
};

namespace detail {

/// Builds a ladder on vmap (local index -> host vertex); order >= 6, even.
inline BlockSpec emit_ladder(Graph& g, int order, const std::vector<VertexId>& vmap) {
    int j = order / 2 - 1;  // rung count j + 1 >= 3
    auto x = [&](int i) { return vmap[i]; };
    auto y = [&](int i) { return vmap[j + 1 + i]; };
    BlockSpec spec;
    spec.kind = BlockKind::ladder;
    spec.order = order;
    spec.vertices = vmap;
    for (int i = 0; i < j; ++i) g.add_edge(x(i), x(i + 1));
    for (int i = 0; i < j; ++i) g.add_edge(y(i), y(i + 1));
    std::vector<EdgeId> rungs;
    for (int i = 0; i <= j; ++i) rungs.push_back(g.add_edge(x(i), y(i)));
    spec.a = x(0);
    spec.u = y(0);
    if (j % 2 == 1) {  // x_j lands in color class B
        spec.b = x(j);
        spec.w = y(j);
    } else {
        spec.b = y(j);
        spec.w = x(j);
    }
    spec.external = {rungs.front(), rungs.back()};
    spec.internal.assign(rungs.begin() + 1, rungs.end() - 1);
    return spec;
}

/// Builds a partial biwheel on vmap; order >= 6, even. The hub u is joined
/// to the even path positions, w to the odd ones.
inline BlockSpec emit_partial_biwheel(Graph& g, int order, const std::vector<VertexId>& vmap) {
    int j = (order - 4) / 2;  // path x0..x_{2j+1}
    int last = 2 * j + 1;
    auto x = [&](int i) { return vmap[i]; };
    VertexId u = vmap[order - 2], w = vmap[order - 1];
    BlockSpec spec;
    spec.kind = BlockKind::partial_biwheel;
    spec.order = order;
    spec.vertices = vmap;
    for (int i = 0; i < last; ++i) g.add_edge(x(i), x(i + 1));
    std::vector<EdgeId> spokes;
    EdgeId ext_a = g.add_edge(u, x(0));
    for (int i = 2; i <= 2 * j; i += 2) spokes.push_back(g.add_edge(u, x(i)));
    for (int i = 1; i < last; i += 2) spokes.push_back(g.add_edge(w, x(i)));
    EdgeId ext_b = g.add_edge(w, x(last));
    spec.a = x(0);
    spec.u = u;
    spec.b = x(last);
    spec.w = w;
    spec.external = {ext_a, ext_b};
    spec.internal = spokes;
    return spec;
}

inline std::vector<VertexId> iota_map(int from, int count) {
    std::vector<VertexId> v(count);
    for (int i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

inline BlockSpec emit_block(Graph& g, BlockKind kind, int order,
                            const std::vector<VertexId>& vmap) {
    return kind == BlockKind::ladder ? emit_ladder(g, order, vmap)
                                     : emit_partial_biwheel(g, order, vmap);
}

/// Local indices of the u and w corners inside a block of the given kind.
inline std::pair<int, int> block_uw_locals(BlockKind kind, int order) {
    if (kind == BlockKind::partial_biwheel) return {order - 2, order - 1};
    int j = order / 2 - 1;
    int u_local = j + 1;                       // y0
    int w_local = j % 2 == 1 ? 2 * j + 1 : j;  // y_j or x_j
    return {u_local, w_local};
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace detail

struct FamilyMember {
    Graph graph;
    FamilyTag tag;
    std::vector<Doubleton> doubletons;  // construction R first, then R' if any
    std::vector<BlockSpec> blocks;
};

struct Block {
    Graph graph;
    BlockSpec spec;
};

inline Block make_ladder(int order) {
    detail::require(order >= 6 && order % 2 == 0, "ladder order must be even and at least six");
    Graph g(order);
    BlockSpec spec = detail::emit_ladder(g, order, detail::iota_map(0, order));
    return {std::move(g), std::move(spec)};
}

inline Block make_partial_biwheel(int order) {
    detail::require(order >= 6 && order % 2 == 0,
                    "partial biwheel order must be even and at least six");
    Graph g(order);
    BlockSpec spec = detail::emit_partial_biwheel(g, order, detail::iota_map(0, order));
    return {std::move(g), std::move(spec)};
}

namespace detail {

inline FamilyMember finish(Graph g, FamilyTag tag, std::vector<std::pair<EdgeId, EdgeId>> rs,
                           std::vector<BlockSpec> blocks) {
    FamilyMember m;
    m.graph = std::move(g);
    m.tag = std::move(tag);
    m.blocks = std::move(blocks);
    for (auto [a, b] : rs) {
        auto r = make_doubleton(m.graph, a, b);
        if (!r) throw theorem_violation("family construction doubleton is not removable");
        m.doubletons.push_back(*r);
    }
    return m;
}

/// Prism, Moebius ladder or truncated biwheel: block + edges aw and bu.
inline FamilyMember single_block_nt(Family fam, BlockKind kind, int n) {
    Graph g(n);
    BlockSpec spec = emit_block(g, kind, n, iota_map(0, n));
    EdgeId alpha = g.add_edge(spec.a, spec.w);
    EdgeId beta = g.add_edge(spec.b, spec.u);
    return finish(std::move(g), {fam, {n}}, {{alpha, beta}}, {spec});
}

/// Staircase / pseudo-biwheel: block + apexes a2, b2 and five edges.
inline FamilyMember apex_family(Family fam, BlockKind kind, int n) {
    Graph g(n);
    BlockSpec spec = emit_block(g, kind, n - 2, iota_map(0, n - 2));
    VertexId a2 = n - 2, b2 = n - 1;
    EdgeId alpha = g.add_edge(spec.a, a2);
    EdgeId alpha_p = g.add_edge(spec.u, a2);
    EdgeId beta = g.add_edge(spec.b, b2);
    EdgeId beta_p = g.add_edge(spec.w, b2);
    g.add_edge(a2, b2);
    return finish(std::move(g), {fam, {n}}, {{alpha, beta}, {alpha_p, beta_p}}, {spec});
}

/// Type I: two blocks sharing their u and w corners, plus a1a2 and b1b2.
inline FamilyMember type_one(Family fam, BlockKind k1, int n1, BlockKind k2, int n2) {
    Graph g(n1 + n2 - 2);
    BlockSpec s1 = emit_block(g, k1, n1, iota_map(0, n1));
    auto [u_local, w_local] = block_uw_locals(k2, n2);
    std::vector<VertexId> vmap(n2);
    int fresh = n1;
    for (int i = 0; i < n2; ++i) {
        if (i == u_local)
            vmap[i] = s1.u;
        else if (i == w_local)
            vmap[i] = s1.w;
        else
            vmap[i] = fresh++;
    }
    BlockSpec s2 = emit_block(g, k2, n2, vmap);
    EdgeId alpha = g.add_edge(s1.a, s2.a);
    EdgeId beta = g.add_edge(s1.b, s2.b);
    return finish(std::move(g), {fam, {n1, n2}}, {{alpha, beta}}, {s1, s2});
}

/// Type II: two disjoint blocks plus a1a2, b1b2, u1w2 and w1u2.
inline FamilyMember type_two(Family fam, BlockKind k1, int n1, BlockKind k2, int n2) {
    Graph g(n1 + n2);
    BlockSpec s1 = emit_block(g, k1, n1, iota_map(0, n1));
    BlockSpec s2 = emit_block(g, k2, n2, iota_map(n1, n2));
    EdgeId alpha = g.add_edge(s1.a, s2.a);
    EdgeId beta = g.add_edge(s1.b, s2.b);
    EdgeId alpha_p = g.add_edge(s1.u, s2.w);
    EdgeId beta_p = g.add_edge(s1.w, s2.u);
    return finish(std::move(g), {fam, {n1, n2}}, {{alpha, beta}, {alpha_p, beta_p}}, {s1, s2});
}

inline FamilyMember k4_member() {
    Graph g(4);
    for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
    EdgeId alpha = g.add_edge(0, 2);
    EdgeId beta = g.add_edge(1, 3);
    return finish(std::move(g), {Family::mobius_ladder, {4}}, {{alpha, beta}}, {});
}

}  // namespace detail

inline FamilyMember make_family(const FamilyTag& tag) {
    using detail::require;
    const auto& p = tag.params;
    auto even_ge = [&](int v, int lo) { return v >= lo && v % 2 == 0; };
    switch (tag.family) {
        case Family::truncated_biwheel:
            require(p.size() == 1 && even_ge(p[0], 6), "truncated biwheel order must be even >= 6");
            return detail::single_block_nt(tag.family, BlockKind::partial_biwheel, p[0]);
        case Family::prism:
            require(p.size() == 1 && p[0] >= 6 && p[0] % 4 == 2,
                    "prism order must be 6, 10, 14, ... (odd ladder)");
            return detail::single_block_nt(tag.family, BlockKind::ladder, p[0]);
        case Family::mobius_ladder:
            require(p.size() == 1 && (p[0] == 4 || (p[0] >= 8 && p[0] % 4 == 0)),
                    "Moebius ladder order must be 4, 8, 12, ... (even ladder)");
            if (p[0] == 4) return detail::k4_member();
            return detail::single_block_nt(tag.family, BlockKind::ladder, p[0]);
        case Family::staircase:
            require(p.size() == 1 && even_ge(p[0], 8), "staircase order must be even >= 8");
            return detail::apex_family(tag.family, BlockKind::ladder, p[0]);
        case Family::pseudo_biwheel:
            require(p.size() == 1 && even_ge(p[0], 10),
                    "pseudo-biwheel order must be even >= 10 (block >= 8)");
            return detail::apex_family(tag.family, BlockKind::partial_biwheel, p[0]);
        case Family::double_biwheel_1:
            require(p.size() == 2 && even_ge(p[0], 6) && even_ge(p[1], 6) && p[0] <= p[1],
                    "double biwheel I blocks must be even >= 6");
            return detail::type_one(tag.family, BlockKind::partial_biwheel, p[0],
                                    BlockKind::partial_biwheel, p[1]);
        case Family::double_ladder_1:
            require(p.size() == 2 && even_ge(p[0], 6) && even_ge(p[1], 6) && p[0] <= p[1],
                    "double ladder I blocks must be even >= 6");
            return detail::type_one(tag.family, BlockKind::ladder, p[0], BlockKind::ladder, p[1]);
        case Family::laddered_biwheel_1:
            require(p.size() == 2 && even_ge(p[0], 6) && even_ge(p[1], 6),
                    "laddered biwheel I blocks must be even >= 6 (biwheel, ladder)");
            return detail::type_one(tag.family, BlockKind::partial_biwheel, p[0],
                                    BlockKind::ladder, p[1]);
        case Family::double_biwheel_2:
            require(p.size() == 2 && even_ge(p[0], 8) && even_ge(p[1], 8) && p[0] <= p[1],
                    "double biwheel II blocks must be even >= 8");
            return detail::type_two(tag.family, BlockKind::partial_biwheel, p[0],
                                    BlockKind::partial_biwheel, p[1]);
        case Family::double_ladder_2:
            require(p.size() == 2 && even_ge(p[0], 6) && even_ge(p[1], 6) && p[0] <= p[1],
                    "double ladder II blocks must be even >= 6");
            return detail::type_two(tag.family, BlockKind::ladder, p[0], BlockKind::ladder, p[1]);
        case Family::laddered_biwheel_2:
            require(p.size() == 2 && even_ge(p[0], 8) && even_ge(p[1], 6),
                    "laddered biwheel II needs a biwheel >= 8 and a ladder >= 6");
            return detail::type_two(tag.family, BlockKind::partial_biwheel, p[0],
                                    BlockKind::ladder, p[1]);
        case Family::odd_wheel: {
            require(p.size() == 1 && p[0] >= 4 && p[0] % 2 == 0, "odd wheel order must be even >= 4");
            int rim = p[0] - 1;
            Graph g(p[0]);
            for (int i = 1; i <= rim; ++i) g.add_edge(0, i);
            for (int i = 1; i <= rim; ++i) g.add_edge(i, i == rim ? 1 : i + 1);
            FamilyMember m;
            m.graph = std::move(g);
            m.tag = tag;
            return m;
        }
        case Family::petersen: {
            require(p.empty(), "petersen takes no parameters");
            Graph g(10);
            for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
            for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
            for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
            FamilyMember m;
            m.graph = std::move(g);
            m.tag = tag;
            return m;
        }
        case Family::none:
            break;
    }
    throw std::invalid_argument("make_family: bad family tag");
}

/// All family tags whose member has the given order, in the classification
/// theorem's listing order (the eleven families first).
inline std::vector<FamilyTag> family_members_of_order(int n) {
    std::vector<FamilyTag> out;
    if (n < 4 || n % 2 != 0) return out;
    if (n >= 6) out.push_back({Family::truncated_biwheel, {n}});
    if (n >= 6 && n % 4 == 2) out.push_back({Family::prism, {n}});
    if (n == 4 || (n >= 8 && n % 4 == 0)) out.push_back({Family::mobius_ladder, {n}});
    if (n >= 8) out.push_back({Family::staircase, {n}});
    if (n >= 10) out.push_back({Family::pseudo_biwheel, {n}});
    for (int n1 = 6; n1 <= n + 2 - n1; n1 += 2) {
        int n2 = n + 2 - n1;
        if (n2 >= 6) out.push_back({Family::double_biwheel_1, {n1, n2}});
    }
    for (int n1 = 6; n1 <= n + 2 - n1; n1 += 2) {
        int n2 = n + 2 - n1;
        if (n2 >= 6) out.push_back({Family::double_ladder_1, {n1, n2}});
    }
    for (int n1 = 6; n1 + 6 <= n + 2; n1 += 2) {
        int n2 = n + 2 - n1;
        out.push_back({Family::laddered_biwheel_1, {n1, n2}});
    }
    for (int n1 = 8; n1 <= n - n1; n1 += 2) {
        int n2 = n - n1;
        if (n2 >= 8) out.push_back({Family::double_biwheel_2, {n1, n2}});
    }
    for (int n1 = 6; n1 <= n - n1; n1 += 2) {
        int n2 = n - n1;
        if (n2 >= 6) out.push_back({Family::double_ladder_2, {n1, n2}});
    }
    for (int n1 = 8; n1 + 6 <= n; n1 += 2) {
        int n2 = n - n1;
        out.push_back({Family::laddered_biwheel_2, {n1, n2}});
    }
    out.push_back({Family::odd_wheel, {n}});
    if (n == 10) out.push_back({Family::petersen, {}});
    return out;
}

struct Recognition {
    FamilyTag tag;                       // first match in listing order
    std::vector<FamilyTag> all_matches;  // every matching construction
};

/// Catalog-and-isomorphism recognition over all members of the same order.
inline Recognition recognize(const Graph& g) {
    Recognition rec;
    if (g.order() % 2 != 0 || !g.is_simple()) return rec;
    std::string form = canonical_form(g);
    for (const FamilyTag& tag : family_members_of_order(g.order())) {
        FamilyMember member = make_family(tag);
        if (member.graph.size() != g.size()) continue;
        if (canonical_form(member.graph) == form) rec.all_matches.push_back(tag);
    }
    if (!rec.all_matches.empty()) rec.tag = rec.all_matches.front();
    return rec;
}

}  // namespace mcg
