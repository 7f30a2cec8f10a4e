#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcg {

using VertexId = int;
using EdgeId = int;

class unknown_edge : public std::invalid_argument {
public:
    explicit unknown_edge(EdgeId id)
        : std::invalid_argument("unknown edge id " + std::to_string(id)) {}
};

class unknown_vertex : public std::invalid_argument {
public:
    explicit unknown_vertex(VertexId v)
        : std::invalid_argument("unknown vertex " + std::to_string(v)) {}
};

class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

class theorem_violation : public std::runtime_error {
public:
    explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

/// Set of dense vertex indices backed by a 64-bit mask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet full(int n) {
        return n >= 64 ? VertexSet(~0ull) : VertexSet((1ull << n) - 1);
    }
    static VertexSet of(std::initializer_list<VertexId> vs) {
        VertexSet s;
        for (VertexId v : vs) s.add(v);
        return s;
    }
    static VertexSet from(const std::vector<VertexId>& vs) {
        VertexSet s;
        for (VertexId v : vs) s.add(v);
        return s;
    }

    void add(VertexId v) { bits_ |= 1ull << v; }
    void remove(VertexId v) { bits_ &= ~(1ull << v); }
    bool contains(VertexId v) const { return (bits_ >> v) & 1ull; }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    bool operator==(const VertexSet&) const = default;

    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(VertexId(__builtin_ctzll(b)));
    }

private:
    std::uint64_t bits_ = 0;
};

struct Edge {
    VertexId u = -1;
    VertexId v = -1;
    EdgeId id = -1;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool incident(VertexId x) const { return u == x || v == x; }
};

struct Bipartition {
    VertexSet color_a;
    VertexSet color_b;
};

/// Loopless undirected multigraph with dense vertex indices 0..n-1 and
/// stable edge ids. Deleted ids are never reused within a derivation chain.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
        Graph g(n);
        for (auto [u, v] : es) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }
    int size() const { return int(edges_.size()); }

    EdgeId add_edge(VertexId u, VertexId v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        EdgeId id = next_id_++;
        edges_.push_back({u, v, id});
        return id;
    }

    /// Carries an edge over from a predecessor graph, keeping its identity.
    EdgeId add_edge_keeping_id(VertexId u, VertexId v, EdgeId id) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (has_edge_id(id)) throw std::invalid_argument("duplicate edge id");
        next_id_ = std::max(next_id_, id + 1);
        edges_.push_back({u, v, id});
        return id;
    }

    EdgeId next_edge_id() const { return next_id_; }

    /// Keeps ids of edges deleted upstream from being reused downstream.
    void reserve_ids(EdgeId next) { next_id_ = std::max(next_id_, next); }

    VertexId add_vertex() {
        labels_.resize(n_ + 1);
        return n_++;
    }

    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge_id(EdgeId id) const { return find_edge(id) != nullptr; }

    const Edge& edge(EdgeId id) const {
        const Edge* e = find_edge(id);
        if (!e) throw unknown_edge(id);
        return *e;
    }

    bool adjacent(VertexId u, VertexId v) const {
        for (const Edge& e : edges_)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
        return false;
    }

    int multiplicity(VertexId u, VertexId v) const {
        int k = 0;
        for (const Edge& e : edges_)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++k;
        return k;
    }

    int degree(VertexId v) const {
        int d = 0;
        for (const Edge& e : edges_) d += e.incident(v);
        return d;
    }

    std::vector<EdgeId> incident_edges(VertexId v) const {
        std::vector<EdgeId> out;
        for (const Edge& e : edges_)
            if (e.incident(v)) out.push_back(e.id);
        return out;
    }

    /// Distinct neighbours, ascending.
    std::vector<VertexId> neighbors(VertexId v) const {
        VertexSet s;
        for (const Edge& e : edges_)
            if (e.incident(v)) s.add(e.other(v));
        return s.to_vector();
    }

    bool is_simple() const {
        std::vector<std::pair<int, int>> seen;
        for (const Edge& e : edges_) {
            auto p = std::minmax(e.u, e.v);
            seen.emplace_back(p.first, p.second);
        }
        std::sort(seen.begin(), seen.end());
        return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    }

    /// Underlying simple graph; edge ids renumbered from zero.
    Graph simplify() const {
        Graph g(n_);
        g.labels_ = labels_;
        for (const Edge& e : edges_)
            if (!g.adjacent(e.u, e.v)) g.add_edge(e.u, e.v);
        return g;
    }

    const std::string& label(VertexId v) const {
        static const std::string empty;
        return size_t(v) < labels_.size() ? labels_[v] : empty;
    }
    void set_label(VertexId v, std::string s) {
        check_vertex(v);
        if (labels_.size() < size_t(n_)) labels_.resize(n_);
        labels_[v] = std::move(s);
    }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_) throw unknown_vertex(v);
    }

private:
    const Edge* find_edge(EdgeId id) const {
        for (const Edge& e : edges_)
            if (e.id == id) return &e;
        return nullptr;
    }

    int n_ = 0;
    EdgeId next_id_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

inline void copy_labels(const Graph& from, Graph& to, const std::vector<VertexId>& old_to_new) {
    for (VertexId v = 0; v < from.order(); ++v)
        if (old_to_new[v] != -1 && !from.label(v).empty())
            to.set_label(old_to_new[v], from.label(v));
}

inline Graph delete_edge(const Graph& g, EdgeId id) {
    if (!g.has_edge_id(id)) throw unknown_edge(id);
    Graph out(g.order());
    for (VertexId v = 0; v < g.order(); ++v)
        if (!g.label(v).empty()) out.set_label(v, g.label(v));
    out.reserve_ids(g.next_edge_id());
    for (const Edge& e : g.edges())
        if (e.id != id) out.add_edge_keeping_id(e.u, e.v, e.id);
    return out;
}

inline Graph delete_edges(const Graph& g, const std::vector<EdgeId>& ids) {
    Graph out = g;
    for (EdgeId id : ids) out = delete_edge(out, id);
    return out;
}

/// Induced subgraph after deleting a vertex set, with the index maps in
/// both directions (old_to_new[v] == -1 for deleted v).
struct VertexDeletion {
    Graph graph;
    std::vector<VertexId> old_to_new;
    std::vector<VertexId> new_to_old;
};

inline VertexDeletion delete_vertices(const Graph& g, VertexSet s) {
    s.for_each([&](VertexId v) { g.check_vertex(v); });
    VertexDeletion out;
    out.old_to_new.assign(g.order(), -1);
    int k = 0;
    for (VertexId v = 0; v < g.order(); ++v)
        if (!s.contains(v)) {
            out.old_to_new[v] = k++;
            out.new_to_old.push_back(v);
        }
    Graph h(k);
    h.reserve_ids(g.next_edge_id());
    copy_labels(g, h, out.old_to_new);
    for (const Edge& e : g.edges())
        if (!s.contains(e.u) && !s.contains(e.v))
            h.add_edge_keeping_id(out.old_to_new[e.u], out.old_to_new[e.v], e.id);
    out.graph = std::move(h);
    return out;
}

inline VertexDeletion delete_vertices(const Graph& g, const std::vector<VertexId>& vs) {
    return delete_vertices(g, VertexSet::from(vs));
}

/// Connected components as vertex sets, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (VertexId s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp;
        std::vector<VertexId> stack{s};
        comp.add(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const Edge& e : g.edges())
                if (e.incident(v) && !comp.contains(e.other(v))) {
                    comp.add(e.other(v));
                    stack.push_back(e.other(v));
                }
        }
        seen = seen | comp;
        out.push_back(comp);
    }
    return out;
}

/// Components of the subgraph induced on `keep`.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet keep) {
    std::vector<VertexSet> out;
    VertexSet seen;
    keep.for_each([&](VertexId s) {
        if (seen.contains(s)) return;
        VertexSet comp;
        std::vector<VertexId> stack{s};
        comp.add(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const Edge& e : g.edges()) {
                if (!e.incident(v)) continue;
                VertexId w = e.other(v);
                if (keep.contains(w) && !comp.contains(w)) {
                    comp.add(w);
                    stack.push_back(w);
                }
            }
        }
        seen = seen | comp;
        out.push_back(comp);
    });
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

/// Deterministic 2-coloring: in each component (ordered by least vertex) the
/// least vertex goes to color A. Returns nothing if any component is odd.
inline std::optional<Bipartition> bipartition_of(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (VertexId s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const Edge& e : g.edges()) {
                if (!e.incident(v)) continue;
                VertexId w = e.other(v);
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (VertexId v = 0; v < g.order(); ++v)
        (color[v] == 0 ? b.color_a : b.color_b).add(v);
    return b;
}

inline bool is_bipartite(const Graph& g) { return bipartition_of(g).has_value(); }

/// Cut edges ∂(X): one end in X, the other outside.
inline std::vector<EdgeId> cut_edges(const Graph& g, VertexSet x) {
    std::vector<EdgeId> out;
    for (const Edge& e : g.edges())
        if (x.contains(e.u) != x.contains(e.v)) out.push_back(e.id);
    return out;
}

}  // namespace mcg
