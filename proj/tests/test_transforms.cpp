#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "mcg/canonical.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"
#include "mcg/transforms.hpp"

using namespace mcg;

TEST_CASE("bicontracting a path vertex of C6 gives C4") {
    auto result = bicontract(fixtures::cycle(6), 1);
    CHECK(result.graph.order() == 4);
    CHECK(are_isomorphic(result.graph, fixtures::cycle(4)));
    CHECK(result.step.center == 1);
}

TEST_CASE("bicontract rejects wrong degrees") {
    CHECK_THROWS_AS(bicontract(fixtures::k4(), 0), std::invalid_argument);
    Graph doubled(3);
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    doubled.add_edge(1, 2);
    CHECK_THROWS_AS(bicontract(doubled, 0), std::invalid_argument);  // neighbours not distinct
}

TEST_CASE("St8 minus e bicontracts down to K4 with multiple edges") {
    Graph g = delete_edge(fixtures::st8(), 5);
    VertexId d2 = -1;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2) {
            d2 = v;
            break;
        }
    REQUIRE(d2 != -1);
    auto once = bicontract(g, d2);
    CHECK(once.graph.order() == 6);
    RetractResult rr = retract(g);
    CHECK(rr.graph.order() == 4);
    CHECK_FALSE(rr.graph.is_simple());
    CHECK(are_isomorphic(rr.graph.simplify(), fixtures::k4()));
    CHECK_FALSE(rr.degenerate);
    CHECK(rr.log.size() == 2);
}

TEST_CASE("retract of a graph without degree-2 vertices is itself") {
    RetractResult rr = retract(fixtures::petersen());
    CHECK(rr.log.empty());
    CHECK(rr.graph.order() == 10);
    CHECK_FALSE(rr.degenerate);
}

TEST_CASE("retract tracks the doubleton edges through contractions") {
    // Deleting e from Fig9a keeps alpha and beta alive in the retract.
    fixtures::Fig9a fig;
    RetractResult rr = retract(delete_edge(fig.graph, fig.e));
    CHECK(rr.graph.order() == 8);
    CHECK(rr.graph.has_edge_id(fig.alpha));
    CHECK(rr.graph.has_edge_id(fig.beta));
}

TEST_CASE("retract of C4 collapses and is flagged degenerate") {
    RetractResult rr = retract(fixtures::cycle(4));
    CHECK(rr.degenerate);
    CHECK(rr.graph.order() == 2);
}

TEST_CASE("retract of a matching covered graph stays matching covered") {
    for (const Graph& g : {delete_edge(fixtures::st8(), 5), delete_edge(fixtures::tricorn(), 0),
                           fixtures::cycle(8)}) {
        REQUIRE(is_matching_covered(g));
        RetractResult rr = retract(g);
        if (rr.graph.order() >= 2) CHECK(is_matching_covered(rr.graph));
    }
}

TEST_CASE("retract is unique up to isomorphism under random orders") {
    // Random bicontraction order instead of lowest-index order.
    std::mt19937 rng(59);
    auto random_retract = [&](Graph g) {
        for (;;) {
            std::vector<VertexId> candidates;
            for (VertexId v = 0; v < g.order(); ++v)
                if (g.degree(v) == 2 && g.neighbors(v).size() == 2) candidates.push_back(v);
            if (candidates.empty()) return g;
            std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
            g = bicontract(g, candidates[pick(rng)]).graph;
        }
    };
    std::vector<Graph> bases = {delete_edge(fixtures::st8(), 5),
                                delete_edge(fixtures::tricorn(), 0),
                                delete_edge(fixtures::tricorn(), 1),
                                fixtures::cycle(10)};
    for (const Graph& g : bases) {
        Graph reference = retract(g).graph;
        for (int trial = 0; trial < 10; ++trial)
            CHECK(are_isomorphic(random_retract(g), reference));
    }
}

TEST_CASE("bi_split then bicontract returns the original graph") {
    Graph g = fixtures::k4();
    auto incident = g.incident_edges(0);
    REQUIRE(incident.size() == 3);
    BiSplitResult bs = bi_split(g, 0, {incident[0], incident[1]}, {incident[2]});
    CHECK(bs.graph.order() == 6);
    CHECK(is_matching_covered(bs.graph));
    auto back = bicontract(bs.graph, bs.v0);
    CHECK(are_isomorphic(back.graph, g));
    // the original edge ids survive the round trip
    for (const Edge& e : g.edges()) CHECK(back.graph.has_edge_id(e.id));
}

TEST_CASE("bi_split validates the partition") {
    Graph g = fixtures::k4();
    auto incident = g.incident_edges(0);
    CHECK_THROWS_AS(bi_split(g, 0, {}, incident), std::invalid_argument);
    CHECK_THROWS_AS(bi_split(g, 0, {incident[0]}, {incident[0], incident[1]}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bi_split(g, 0, {incident[0]}, {incident[1]}), std::invalid_argument);
}

TEST_CASE("bi_split keeps matching covered graphs matching covered") {
    for (const Graph& g : {fixtures::k4(), fixtures::c6_bar(), fixtures::cycle(6)}) {
        for (VertexId v = 0; v < g.order(); ++v) {
            auto inc = g.incident_edges(v);
            if (inc.size() < 2) continue;
            // one representative split per vertex
            std::vector<EdgeId> p1(inc.begin(), inc.begin() + 1);
            std::vector<EdgeId> p2(inc.begin() + 1, inc.end());
            BiSplitResult bs = bi_split(g, v, p1, p2);
            CHECK(is_matching_covered(bs.graph));
        }
    }
}

TEST_CASE("bicontract of bi_split is the identity for all splits on small graphs") {
    for (const Graph& g : {fixtures::k4(), fixtures::cycle(6), fixtures::c6_bar()}) {
        for (VertexId v = 0; v < g.order(); ++v) {
            auto inc = g.incident_edges(v);
            int d = int(inc.size());
            for (std::uint32_t bits = 1; bits + 1 < (1u << d); ++bits) {
                std::vector<EdgeId> p1, p2;
                for (int i = 0; i < d; ++i) ((bits >> i) & 1 ? p1 : p2).push_back(inc[i]);
                BiSplitResult bs = bi_split(g, v, p1, p2);
                CHECK(are_isomorphic(bicontract(bs.graph, bs.v0).graph, g));
            }
        }
    }
}
