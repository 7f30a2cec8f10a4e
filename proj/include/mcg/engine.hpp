#pragma once

#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mcg/canonical.hpp"
#include "mcg/configurations.hpp"
#include "mcg/families.hpp"
#include "mcg/graph.hpp"
#include "mcg/matching.hpp"
#include "mcg/removability.hpp"
#include "mcg/structure.hpp"
#include "mcg/transforms.hpp"

namespace mcg {

inline constexpr int kDefaultCorpusCap = 12;

/// One reduction step: the graph, its doubleton, the strictly R-thin edge
/// chosen (none on the terminal step) and the retract log that produced the
/// next graph.
struct ReductionStep {
    Graph graph;
    Doubleton doubleton;
    std::optional<EdgeId> chosen_edge;
    std::vector<BicontractionStep> retract_log;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;  // input first, terminal last
    Recognition terminal;
};

namespace detail {

inline void require_simple_r_brick(const Graph& g, const Doubleton& r, const char* who) {
    if (!g.is_simple()) throw std::invalid_argument(std::string(who) + ": graph is not simple");
    if (!is_brick(g)) throw std::invalid_argument(std::string(who) + ": graph is not a brick");
    if (!g.has_edge_id(r.alpha) || !g.has_edge_id(r.beta))
        throw std::invalid_argument(std::string(who) + ": doubleton edges missing");
}

inline Doubleton remap_doubleton(const Graph& g, const Doubleton& r, const char* who) {
    if (!g.has_edge_id(r.alpha) || !g.has_edge_id(r.beta))
        throw theorem_violation(std::string(who) + ": doubleton edge vanished");
    auto fresh = make_doubleton(g, r.alpha, r.beta);
    if (!fresh) throw theorem_violation(std::string(who) + ": doubleton no longer removable");
    return *fresh;
}

}  // namespace detail

/// Repeatedly delete the lowest-id strictly R-thin edge and take the
/// retract. Stops when none exists; the terminal graph must then land in
/// the eleven-family list, anything else is a theorem violation.
inline ReductionTrace reduce(const Graph& g0, const Doubleton& r0) {
    detail::require_simple_r_brick(g0, r0, "reduce");
    ReductionTrace trace;
    Graph g = g0;
    Doubleton r = r0;
    int budget = g0.order() + g0.size() + 2;
    while (budget-- > 0) {
        auto e = find_strictly_r_thin_edge(g, r);
        if (!e) {
            Recognition rec = recognize(g);
            if (!in_family_list_11(rec.tag.family))
                throw theorem_violation(
                    "simple R-brick with no strictly R-thin edge is outside the eleven families");
            trace.steps.push_back({g, r, std::nullopt, {}});
            trace.terminal = rec;
            return trace;
        }
        RetractResult rr = retract(delete_edge(g, *e));
        trace.steps.push_back({g, r, e, rr.log});
        if (rr.degenerate)
            throw theorem_violation("reduce: retract collapsed below four vertices");
        Graph next = std::move(rr.graph);
        Doubleton next_r = detail::remap_doubleton(next, r, "reduce");
        if (!next.is_simple() || !is_brick(next))
            throw theorem_violation("reduce: retract is not a simple R-brick");
        g = std::move(next);
        r = next_r;
    }
    throw theorem_violation("reduce: did not terminate within the step budget");
}

struct SplitChoice {
    VertexId vertex = -1;
    std::vector<EdgeId> part1, part2;
};

/// One inverse-reduction move: up to two bi-splits of j followed by one new
/// edge e, with retract(result - e) isomorphic to j.
struct ExpansionStep {
    std::vector<SplitChoice> splits;
    VertexId end1 = -1, end2 = -1;  // ends of the new edge in the result
    Graph result;
    EdgeId new_edge = -1;
    Doubleton result_doubleton;
};

namespace detail {

/// Partitions of the edges at v into two unordered parts of size >= 2; the
/// part containing the first incident edge is part1.
inline std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> split_partitions(
    const Graph& g, VertexId v) {
    std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> out;
    std::vector<EdgeId> inc = g.incident_edges(v);
    int d = int(inc.size());
    if (d < 4) return out;
    for (std::uint32_t bits = 0; bits < (1u << (d - 1)); ++bits) {
        // inc[0] always in part1; remaining d-1 edges assigned by bits
        std::vector<EdgeId> p1{inc[0]}, p2;
        for (int i = 1; i < d; ++i) ((bits >> (i - 1)) & 1 ? p1 : p2).push_back(inc[i]);
        if (int(p1.size()) >= 2 && int(p2.size()) >= 2) out.emplace_back(p1, p2);
    }
    return out;
}

struct ExpansionContext {
    const Graph& j;
    const Doubleton& r;
    std::vector<ExpansionStep> steps;
    std::set<std::string> seen;

    void consider(Graph g, std::vector<SplitChoice> splits, VertexId e1, VertexId e2) {
        EdgeId fresh = g.add_edge(e1, e2);
        if (!g.is_simple()) return;
        auto rd = make_doubleton_quiet(g);
        if (!rd) return;
        if (!is_brick(g)) return;
        if (!is_strictly_r_thin(g, *rd, fresh)) return;
        RetractResult rr = retract(delete_edge(g, fresh));
        if (rr.degenerate || !are_isomorphic(rr.graph, j))
            throw theorem_violation("expansion round trip failed");
        std::string form = canonical_form(g);
        if (!seen.insert(form).second) return;
        ExpansionStep step;
        step.splits = std::move(splits);
        step.end1 = e1;
        step.end2 = e2;
        step.new_edge = fresh;
        step.result_doubleton = *rd;
        step.result = std::move(g);
        steps.push_back(std::move(step));
    }

    std::optional<Doubleton> make_doubleton_quiet(const Graph& g) const {
        if (!g.has_edge_id(r.alpha) || !g.has_edge_id(r.beta)) return std::nullopt;
        try {
            return make_doubleton(g, r.alpha, r.beta);
        } catch (const theorem_violation&) {
            return std::nullopt;
        }
    }
};

}  // namespace detail

/// Every simple R-brick G with a strictly R-thin edge e and retract(G-e)
/// isomorphic to j, obtained from j by zero, one or two bi-splits plus one
/// new edge; deduplicated by canonical form.
inline std::vector<ExpansionStep> expand_all(const Graph& j, const Doubleton& r, int max_order) {
    detail::require_simple_r_brick(j, r, "expand_all");
    if (j.order() > max_order) throw cap_exceeded("expand_all: source beyond the order cap");
    detail::ExpansionContext ctx{j, r, {}, {}};
    int n = j.order();

    // no split: a new edge between nonadjacent vertices
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!j.adjacent(u, v)) ctx.consider(j, {}, u, v);

    if (n + 2 <= max_order) {
        for (VertexId v = 0; v < n; ++v) {
            for (auto& [p1, p2] : detail::split_partitions(j, v)) {
                BiSplitResult bs = bi_split(j, v, p1, p2);
                // one split: the new edge must lift v0 to degree three
                for (VertexId x = 0; x < bs.graph.order(); ++x) {
                    if (x == bs.v0 || x == bs.v1 || x == bs.v2) continue;
                    ctx.consider(bs.graph, {{v, p1, p2}}, std::min(bs.v0, x), std::max(bs.v0, x));
                }
                // two splits: join the two degree-two joints
                if (n + 4 <= max_order) {
                    for (VertexId u = 0; u < bs.graph.order(); ++u) {
                        if (u == bs.v0) continue;
                        for (auto& [q1, q2] : detail::split_partitions(bs.graph, u)) {
                            BiSplitResult bs2 = bi_split(bs.graph, u, q1, q2);
                            ctx.consider(bs2.graph, {{v, p1, p2}, {u, q1, q2}},
                                         std::min(bs.v0, bs2.v0), std::max(bs.v0, bs2.v0));
                        }
                    }
                }
            }
        }
    }
    return std::move(ctx.steps);
}

struct CorpusEntry {
    Graph graph;
    std::vector<Doubleton> doubletons;
};

/// Canonical form -> entry; iteration order is deterministic.
using Corpus = std::map<std::string, CorpusEntry>;

/// Closure of all eleven-family members of order <= max_order under
/// expansion, across every removable doubleton of every member.
inline Corpus generate_corpus(int max_order, int jobs = 1, bool allow_large = false) {
    if (max_order > kDefaultCorpusCap && !allow_large)
        throw cap_exceeded("generate_corpus: order cap is 12 unless explicitly raised");
    if (max_order > 14) throw cap_exceeded("generate_corpus: order cap is 14");
    Corpus corpus;
    std::deque<std::string> queue;
    std::mutex mu;
    std::condition_variable cv;
    auto insert = [&](const Graph& g) {
        std::string form = canonical_form(g);
        auto doubletons = removable_doubletons(g);
        std::lock_guard lock(mu);
        if (corpus.contains(form)) return;
        corpus.emplace(form, CorpusEntry{g, std::move(doubletons)});
        queue.push_back(form);
        cv.notify_all();
    };
    for (int n = 4; n <= max_order; n += 2)
        for (const FamilyTag& tag : family_members_of_order(n))
            if (in_family_list_11(tag.family)) insert(make_family(tag).graph);

    auto process_one = [&](const std::string& form) {
        CorpusEntry entry;
        {
            std::lock_guard lock(mu);
            entry = corpus.at(form);
        }
        for (const Doubleton& r : entry.doubletons)
            for (ExpansionStep& step : expand_all(entry.graph, r, max_order))
                insert(step.result);
    };

    if (jobs <= 1) {
        while (!queue.empty()) {
            std::string form = queue.front();
            queue.pop_front();
            process_one(form);
        }
    } else {
        int active = 0;
        auto worker = [&] {
            std::unique_lock lock(mu);
            for (;;) {
                cv.wait(lock, [&] { return !queue.empty() || active == 0; });
                if (queue.empty()) return;  // active == 0: closure complete
                std::string form = queue.front();
                queue.pop_front();
                ++active;
                lock.unlock();
                process_one(form);
                lock.lock();
                --active;
                cv.notify_all();
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return corpus;
}

struct VerificationReport {
    int graphs = 0;
    int pairs = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// Strictly-R-thin-free members of the corpus must land in the eleven
/// families, for every removable doubleton.
inline VerificationReport verify_thm_free_implies_family(const Corpus& corpus) {
    VerificationReport rep;
    for (const auto& [form, entry] : corpus) {
        ++rep.graphs;
        for (const Doubleton& r : entry.doubletons) {
            ++rep.pairs;
            if (find_strictly_r_thin_edge(entry.graph, r)) continue;
            Recognition rec = recognize(entry.graph);
            if (!in_family_list_11(rec.tag.family))
                rep.counterexamples.push_back("unrecognized strictly-R-thin-free brick, order " +
                                              std::to_string(entry.graph.order()));
        }
    }
    return rep;
}

/// Bricks free of compatible strictly thin edges must land in the
/// eight-family list; pseudo-biwheels and the type II biwheel families must
/// conversely have a compatible strictly thin edge.
inline VerificationReport verify_thm_compatible_strictly_thin(const Corpus& corpus) {
    VerificationReport rep;
    for (const auto& [form, entry] : corpus) {
        ++rep.graphs;
        Recognition rec = recognize(entry.graph);
        bool has_cst = has_compatible_strictly_thin_edge(entry.graph, entry.doubletons);
        if (!has_cst) {
            bool in_eight = false;
            for (const FamilyTag& t : rec.all_matches)
                if (in_family_list_8(t.family)) in_eight = true;
            if (!in_eight)
                rep.counterexamples.push_back(
                    "brick free of compatible strictly thin edges outside the eight families, "
                    "order " +
                    std::to_string(entry.graph.order()));
        }
        bool excluded_family_member = false;
        bool in_eight_too = false;
        for (const FamilyTag& t : rec.all_matches) {
            if (t.family == Family::pseudo_biwheel || t.family == Family::double_biwheel_2 ||
                t.family == Family::laddered_biwheel_2)
                excluded_family_member = true;
            if (in_family_list_8(t.family)) in_eight_too = true;
        }
        if (excluded_family_member && !in_eight_too && !has_cst)
            rep.counterexamples.push_back(
                "excluded-family member without a compatible strictly thin edge, order " +
                std::to_string(entry.graph.order()));
    }
    return rep;
}

/// On strictly-R-thin-free corpus pairs: R-thin edges of index one are
/// internal spokes of an R-biwheel, edges of index two lie in an R-ladder.
inline VerificationReport verify_r_configuration_theorems(const Corpus& corpus) {
    VerificationReport rep;
    for (const auto& [form, entry] : corpus) {
        ++rep.graphs;
        const Graph& g = entry.graph;
        for (const Doubleton& r : entry.doubletons) {
            if (find_strictly_r_thin_edge(g, r)) continue;
            ++rep.pairs;
            auto configs = find_r_configurations(g, r);
            for (const Edge& e : g.edges()) {
                if (r.contains(e.id) || !is_r_thin(g, r, e.id)) continue;
                int idx = index_of(g, r, e.id);
                bool located = false;
                if (idx == 1) {
                    for (const RConfiguration& k : configs)
                        if (k.kind == ConfigKind::r_biwheel &&
                            std::find(k.internal.begin(), k.internal.end(), e.id) !=
                                k.internal.end())
                            located = true;
                } else if (idx == 2) {
                    for (const RConfiguration& k : configs)
                        if (k.kind == ConfigKind::r_ladder &&
                            std::find(k.edges.begin(), k.edges.end(), e.id) != k.edges.end())
                            located = true;
                }
                if (!located)
                    rep.counterexamples.push_back(
                        "R-thin edge of index " + std::to_string(idx) +
                        " not located in a configuration, order " + std::to_string(g.order()));
            }
        }
    }
    return rep;
}

/// reduce() must succeed on every corpus pair with every intermediate a
/// simple R-brick and the terminal in the eleven families.
inline VerificationReport verify_reduction_totality(const Corpus& corpus) {
    VerificationReport rep;
    for (const auto& [form, entry] : corpus) {
        ++rep.graphs;
        for (const Doubleton& r : entry.doubletons) {
            ++rep.pairs;
            try {
                ReductionTrace trace = reduce(entry.graph, r);
                if (trace.steps.empty() || trace.steps.back().chosen_edge.has_value())
                    rep.counterexamples.push_back("reduction trace has no terminal step");
            } catch (const theorem_violation& tv) {
                rep.counterexamples.push_back(std::string("reduction failed: ") + tv.what());
            }
        }
    }
    return rep;
}

}  // namespace mcg
