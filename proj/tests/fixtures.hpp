#pragma once

// Hand-built reference graphs used as independent oracles across the test
// suites. These are written out edge by edge on purpose: the family
// constructors are cross-checked against them, so they must not use them.

#include "mcg/graph.hpp"

namespace fixtures {

using mcg::Graph;

inline Graph k4() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Graph path4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}); }

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph k33() {
    return Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// Two triangles {0,1,2}, {3,4,5} joined by the matching 0-3, 1-4, 2-5.
inline Graph c6_bar() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

// Outer 5-cycle 0..4, spokes i-(i+5), inner 5-cycle at distance two.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
    return g;
}

// Hub 0, rim 1..5.
inline Graph w5() {
    Graph g(6);
    for (int i = 1; i <= 5; ++i) g.add_edge(0, i);
    for (int i = 1; i <= 5; ++i) g.add_edge(i, i == 5 ? 1 : i + 1);
    return g;
}

// Staircase of order eight. Ladder: top path 0-1-2, middle path 3-4-5,
// rungs 0-3 / 1-4 / 2-5 (edge id 5, the unique removable edge); apex
// vertices 6 and 7.
inline Graph st8() {
    Graph g(8);
    g.add_edge(0, 1);   // 0 top path
    g.add_edge(1, 2);   // 1
    g.add_edge(3, 4);   // 2 middle path
    g.add_edge(4, 5);   // 3
    g.add_edge(0, 3);   // 4 external rung (f)
    g.add_edge(1, 4);   // 5 internal rung (e, the removable edge)
    g.add_edge(2, 5);   // 6 external rung
    g.add_edge(6, 3);   // 7 alpha:  a2=6, a1=3
    g.add_edge(6, 0);   // 8 alpha': u1=0
    g.add_edge(7, 2);   // 9 beta:   b2=7, b1=2
    g.add_edge(7, 5);   // 10 beta': w1=5
    g.add_edge(6, 7);   // 11
    return g;
}

// Tricorn: outer cycle 0..5 with the three short sides 0-1, 2-3, 4-5 being
// its removable edges; inner claw center 6 with arms 7, 8, 9.
inline Graph tricorn() {
    Graph g(10);
    g.add_edge(0, 1);  // removable
    g.add_edge(2, 3);  // removable
    g.add_edge(4, 5);  // removable
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(5, 0);
    g.add_edge(6, 7);
    g.add_edge(6, 8);
    g.add_edge(6, 9);
    g.add_edge(7, 0);
    g.add_edge(7, 1);
    g.add_edge(8, 2);
    g.add_edge(8, 3);
    g.add_edge(9, 4);
    g.add_edge(9, 5);
    return g;
}

// 12-vertex brick whose edge e = t1-s1 is strictly R-thin with retract T8.
// Bottom path b0..b5 = 0..5, top path t0,t1,t2 = 6,7,8, lower path
// s0,s1,s2 = 9,10,11. R = {alpha, beta} = {b0-s0, b5-t2}.
struct Fig9a {
    Graph graph{12};
    mcg::EdgeId alpha, beta, e;
    Fig9a() {
        auto& g = graph;
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(6, 7);
        g.add_edge(7, 8);
        g.add_edge(9, 10);
        g.add_edge(10, 11);
        e = g.add_edge(7, 10);
        alpha = g.add_edge(0, 9);
        g.add_edge(9, 1);
        g.add_edge(2, 6);
        g.add_edge(6, 0);
        g.add_edge(3, 11);
        g.add_edge(11, 5);
        g.add_edge(4, 8);
        beta = g.add_edge(8, 5);
    }
};

// Retract of (the Fig9a-style double biwheel of type I minus a bold edge):
// 8 vertices, 13 edges, three edge-disjoint triangles, not near-bipartite.
inline Graph fig6b() {
    Graph g(8);
    // path remnants 0,1 (left), 2..5 (right), hubs u=6, w=7
    g.add_edge(0, 5);  // beta image
    g.add_edge(5, 7);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(0, 6);
    g.add_edge(1, 7);
    g.add_edge(2, 7);
    g.add_edge(3, 6);
    g.add_edge(4, 7);
    g.add_edge(5, 6);
    g.add_edge(1, 2);  // alpha image
    return g;
}

}  // namespace fixtures
