#pragma once

// Fixtures shared across the unit tests.

#include <vector>

#include "bowtie/bowtie.hpp"

namespace testsupport {

// Two copies of the 7-point complete instance glued along one common edge
// {0,1,2}: 11 vertices, 13 edges, linear but not complete.  Its bowtie graph
// has two big components (one per copy) plus isolated cross bowties, which
// makes it the smallest interesting playground for anchors with several
// partners and for the induction engine.
//
// Edge ids: 0..6 first copy, 7..12 second copy (relabelled 3..6 -> 7..10).
inline bowtie::LinearRGraph glued_fanos() {
    return bowtie::build_linear_rgraph(3, 11,
                                       {{0, 1, 2},
                                        {0, 3, 4},
                                        {0, 5, 6},
                                        {1, 3, 5},
                                        {1, 4, 6},
                                        {2, 3, 6},
                                        {2, 4, 5},
                                        {0, 7, 8},
                                        {0, 9, 10},
                                        {1, 7, 9},
                                        {1, 8, 10},
                                        {2, 7, 10},
                                        {2, 8, 9}});
}

// K6 as a linear 2-graph: 15 pair-edges in lexicographic order.
inline bowtie::LinearRGraph k6() {
    std::vector<std::vector<bowtie::VertexId>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.push_back({u, v});
    return bowtie::build_linear_rgraph(2, 6, edges);
}

// Colours K6's edges so class 0 is a perfect matching {01, 23, 45} and
// class 1 is its complement (the cocktail-party graph K_{2,2,2}).
inline bowtie::Colouring k6_matching_colouring(const bowtie::LinearRGraph& g) {
    std::vector<int> values(static_cast<std::size_t>(g.m()), 1);
    for (bowtie::EdgeId e = 0; e < g.m(); ++e) {
        const auto& edge = g.edge(e);
        if ((edge[0] == 0 && edge[1] == 1) || (edge[0] == 2 && edge[1] == 3) ||
            (edge[0] == 4 && edge[1] == 5))
            values[static_cast<std::size_t>(e)] = 0;
    }
    return bowtie::make_colouring(g, 2, values);
}

}  // namespace testsupport
