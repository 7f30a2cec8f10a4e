#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "mcg/canonical.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"

using namespace mcg;

namespace {

// Oracle for tightness: enumerate every perfect matching and count cut edges.
bool tight_by_enumeration(const Graph& g, VertexSet x) {
    auto cut = cut_edges(g, x);
    for (const Matching& m : enumerate_perfect_matchings(g)) {
        int hits = 0;
        for (EdgeId id : m.edges)
            if (std::find(cut.begin(), cut.end(), id) != cut.end()) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

using Signature = std::multiset<std::pair<std::string, bool>>;

Signature decomposition_signature(const DecompositionResult& d) {
    Signature sig;
    for (const DecompositionPiece& p : d.pieces)
        sig.insert({canonical_form(p.graph.simplify()), p.brick});
    return sig;
}

}  // namespace

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity_at_least(fixtures::k4(), 3));
    CHECK_FALSE(vertex_connectivity_at_least(fixtures::cycle(6), 3));
    CHECK(vertex_connectivity_at_least(fixtures::cycle(6), 2));
    CHECK(vertex_connectivity_at_least(fixtures::petersen(), 3));
    CHECK_FALSE(vertex_connectivity_at_least(fixtures::petersen(), 4));
    CHECK_FALSE(vertex_connectivity_at_least(fixtures::path4(), 2));
}

TEST_CASE("tight cuts around a degree-2 vertex") {
    // In St8 - e, vertex 1 has degree two with neighbours 0 and 2.
    Graph g = delete_edge(fixtures::st8(), 5);
    CHECK(is_tight_cut(g, VertexSet::of({0, 1, 2})));
    CHECK(tight_by_enumeration(g, VertexSet::of({0, 1, 2})));
}

TEST_CASE("singleton shores are tight in matching covered graphs") {
    Graph g = fixtures::petersen();
    CHECK(is_tight_cut(g, VertexSet::of({3})));
}

TEST_CASE("a 5-cycle shore of Petersen is not tight") {
    CHECK_FALSE(is_tight_cut(fixtures::petersen(), VertexSet::of({0, 1, 2, 3, 4})));
    CHECK_FALSE(tight_by_enumeration(fixtures::petersen(), VertexSet::of({0, 1, 2, 3, 4})));
}

TEST_CASE("is_tight_cut agrees with the enumeration oracle on random shores") {
    std::mt19937 rng(41);
    for (const Graph& g : {fixtures::petersen(), fixtures::c6_bar(), fixtures::st8(),
                           delete_edge(fixtures::st8(), 5), fixtures::cycle(8)}) {
        std::uniform_int_distribution<std::uint64_t> pick(1, (1ull << g.order()) - 2);
        for (int trial = 0; trial < 40; ++trial) {
            VertexSet x(pick(rng));
            if (x.empty() || x == VertexSet::full(g.order())) continue;
            CHECK(is_tight_cut(g, x) == tight_by_enumeration(g, x));
        }
    }
}

TEST_CASE("bricks and braces have no nontrivial tight cut") {
    CHECK_FALSE(find_nontrivial_tight_cut(fixtures::k4()).has_value());
    CHECK_FALSE(find_nontrivial_tight_cut(fixtures::petersen()).has_value());
    CHECK_FALSE(find_nontrivial_tight_cut(fixtures::k33()).has_value());
    CHECK_FALSE(find_nontrivial_tight_cut(fixtures::cycle(4)).has_value());
    // C6 is not a brace: {v} ∪ N(v) around any degree-2 vertex is tight.
    CHECK(find_nontrivial_tight_cut(fixtures::cycle(6)).has_value());
    CHECK(find_nontrivial_tight_cut(delete_edge(fixtures::st8(), 5)).has_value());
}

TEST_CASE("brick recognition") {
    CHECK(is_brick(fixtures::k4()));
    CHECK(is_brick(fixtures::c6_bar()));
    CHECK(is_brick(fixtures::petersen()));
    CHECK(is_brick(fixtures::w5()));
    CHECK(is_brick(fixtures::tricorn()));
    CHECK(is_brick(fixtures::st8()));
    CHECK_FALSE(is_brick(fixtures::cycle(6)));
    CHECK_FALSE(is_brick(fixtures::k33()));  // bipartite
}

TEST_CASE("brace recognition") {
    CHECK_FALSE(is_brace(fixtures::cycle(6)));
    CHECK(is_brace(fixtures::k33()));
    CHECK(is_brace(fixtures::cycle(4)));
    CHECK_THROWS_AS(is_brace(fixtures::k4()), std::invalid_argument);
}

TEST_CASE("decomposition of Petersen minus an edge has two bricks") {
    Graph pet = fixtures::petersen();
    for (EdgeId id : {0, 5, 10}) {
        DecompositionResult d = tight_cut_decomposition(delete_edge(pet, id));
        CHECK(d.brick_count == 2);
    }
}

TEST_CASE("bipartite matching covered graphs decompose with b = 0") {
    for (const Graph& g : {fixtures::cycle(6), fixtures::k33(), fixtures::cycle(4)}) {
        DecompositionResult d = tight_cut_decomposition(g);
        CHECK(d.brick_count == 0);
        for (const DecompositionPiece& p : d.pieces) CHECK_FALSE(p.brick);
    }
}

TEST_CASE("St8 minus its removable edge decomposes to one brick: K4 with multiples") {
    DecompositionResult d = tight_cut_decomposition(delete_edge(fixtures::st8(), 5));
    CHECK(d.brick_count == 1);
    for (const DecompositionPiece& p : d.pieces)
        if (p.brick) {
            CHECK(p.graph.order() == 4);
            CHECK(are_isomorphic(p.graph.simplify(), fixtures::k4()));
            CHECK_FALSE(p.graph.is_simple());
        }
}

TEST_CASE("bricks coincide with the tight-cut definition on assorted graphs") {
    for (const Graph& g : {fixtures::k4(), fixtures::c6_bar(), fixtures::petersen(),
                           fixtures::w5(), fixtures::st8(), fixtures::tricorn(),
                           fixtures::cycle(6), fixtures::k33(), fixtures::cycle(4)}) {
        bool def = is_matching_covered(g) && is_brick(g);
        CHECK(def == is_brick_by_tight_cuts(g));
    }
}

TEST_CASE("decomposition is invariant across cut selection policies") {
    std::vector<Graph> graphs = {delete_edge(fixtures::petersen(), 0),
                                 delete_edge(fixtures::st8(), 5),
                                 delete_edge(fixtures::tricorn(), 0),
                                 fixtures::cycle(8),
                                 fixtures::st8()};
    for (const Graph& g : graphs) {
        std::optional<Signature> base;
        int base_b = -1;
        for (CutPolicy policy : {CutPolicy::fast_then_lex, CutPolicy::lex, CutPolicy::reverse_lex,
                                 CutPolicy::large_first, CutPolicy::twosep_then_lex}) {
            DecompositionResult d = tight_cut_decomposition(g, policy);
            Signature sig = decomposition_signature(d);
            if (!base) {
                base = sig;
                base_b = d.brick_count;
            } else {
                CHECK(sig == *base);
                CHECK(d.brick_count == base_b);
            }
        }
    }
}
