#pragma once

// The bowtie auxiliary graph B of a colour class.
//
// A bowtie is an unordered pair {S,T} of class hyperedges with |S & T| = 1;
// the shared vertex is its centre.  Two bowties are adjacent iff they share
// exactly one hyperedge and, writing them {S1,T} and {S2,T}, the other two
// edges meet in exactly one vertex that lies outside the shared edge:
//   |S1 & S2| = 1   and   S1 & S2 & T = empty.
// Equivalently: {S1, S2, T} pairwise intersect in three distinct vertices —
// a C3.  That equivalence drives the construction: for a bowtie {S,T}, every
// class edge Q through a cross pair {x in S\T, y in T\S} closes a C3
// {Q,S,T} by linearity, contributing the two neighbours {Q,S} and {Q,T}.
// Distinct cross pairs yield distinct Q, so the degree of every vertex of B
// is 2 * (number of such Q) — even, and at most 2(r-1)^2.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bowtie/colouring.hpp"
#include "bowtie/core.hpp"

namespace bowtie {

struct Bowtie {
    EdgeId e1 = -1;  // smaller edge id
    EdgeId e2 = -1;  // larger edge id
    VertexId centre = -1;
};

class BowtieGraph {
  public:
    int r = 0;
    int n = 0;
    int colour = 0;  // class the graph was built from (0 for the whole graph)

    std::vector<Bowtie> bowties;
    std::vector<std::vector<int>> adj;           // sorted neighbour lists
    std::vector<std::vector<int>> centre_groups;  // B_u per vertex u

    int size() const { return static_cast<int>(bowties.size()); }
    int degree(int b) const { return static_cast<int>(adj[static_cast<std::size_t>(b)].size()); }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& nb : adj) twice += static_cast<long long>(nb.size());
        return twice / 2;
    }

    bool adjacent(int a, int b) const {
        const auto& na = adj[static_cast<std::size_t>(a)];
        return std::binary_search(na.begin(), na.end(), b);
    }

    // Bowtie id of the class-edge pair {a, b}, if it is one.
    std::optional<int> id_of(EdgeId a, EdgeId b) const {
        if (a > b) std::swap(a, b);
        auto it = pair_to_id_.find(key(a, b));
        if (it == pair_to_id_.end()) return std::nullopt;
        return it->second;
    }

    // The hyperedge two bowties share, if exactly one (the precondition of
    // the adjacency rule).
    std::optional<EdgeId> shared_edge(int a, int b) const {
        const Bowtie& x = bowties[static_cast<std::size_t>(a)];
        const Bowtie& y = bowties[static_cast<std::size_t>(b)];
        int matches = 0;
        EdgeId shared = -1;
        for (EdgeId p : {x.e1, x.e2})
            for (EdgeId q : {y.e1, y.e2})
                if (p == q) {
                    ++matches;
                    shared = p;
                }
        if (matches != 1) return std::nullopt;
        return shared;
    }

    friend BowtieGraph build_bowtie_graph(const ClassView& view);
    friend BowtieGraph bowtie_graph_from_parts(int r, int n, int colour, int host_m,
                                               std::vector<Bowtie> bowties,
                                               std::vector<std::vector<int>> adj);

  private:
    std::uint64_t key(EdgeId a, EdgeId b) const {
        return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(b);
    }

    int m_ = 0;  // host graph edge count (key stride)
    std::unordered_map<std::uint64_t, int> pair_to_id_;
};

// Builds B for a colour class.  Bowtie ids are assigned in centre-group
// order: centres ascending, and within a centre the edge pairs in
// lexicographic order.  Runs in O(|B| r^2) pair lookups.
inline BowtieGraph build_bowtie_graph(const ClassView& view) {
    const LinearRGraph& g = view.graph();
    BowtieGraph bg;
    bg.r = g.r();
    bg.n = g.n();
    bg.colour = view.colour();
    bg.m_ = g.m();
    bg.centre_groups.assign(static_cast<std::size_t>(g.n()), {});

    for (VertexId u = 0; u < g.n(); ++u) {
        std::vector<EdgeId> through = view.edges_through(u);
        for (std::size_t i = 0; i < through.size(); ++i)
            for (std::size_t j = i + 1; j < through.size(); ++j) {
                // Edges through u meet in exactly {u} by linearity.
                int id = bg.size();
                bg.bowties.push_back(Bowtie{through[i], through[j], u});
                bg.pair_to_id_.emplace(bg.key(through[i], through[j]), id);
                bg.centre_groups[static_cast<std::size_t>(u)].push_back(id);
            }
    }

    bg.adj.assign(bg.bowties.size(), {});
    for (int b = 0; b < bg.size(); ++b) {
        const Bowtie& bt = bg.bowties[static_cast<std::size_t>(b)];
        const auto& s = g.edge(bt.e1);
        const auto& t = g.edge(bt.e2);
        for (VertexId x : s) {
            if (x == bt.centre) continue;  // x in S \ T
            for (VertexId y : t) {
                if (y == bt.centre) continue;  // y in T \ S
                auto q = view.pair_edge(x, y);
                if (!q || *q == bt.e1 || *q == bt.e2) continue;
                // {Q, S, T} is a C3; its other two bowties are b's neighbours.
                auto qs = bg.id_of(*q, bt.e1);
                auto qt = bg.id_of(*q, bt.e2);
                if (!qs || !qt)
                    throw Error("bowtie index inconsistent while building adjacency");
                bg.adj[static_cast<std::size_t>(b)].push_back(*qs);
                bg.adj[static_cast<std::size_t>(b)].push_back(*qt);
            }
        }
        auto& nb = bg.adj[static_cast<std::size_t>(b)];
        std::sort(nb.begin(), nb.end());
    }
    return bg;
}

// Reassembles a BowtieGraph from serialized parts (deserialization path);
// derives the lookup index and centre groups, and normalizes adjacency order.
inline BowtieGraph bowtie_graph_from_parts(int r, int n, int colour, int host_m,
                                           std::vector<Bowtie> bowties,
                                           std::vector<std::vector<int>> adj) {
    if (bowties.size() != adj.size())
        throw Error("bowtie list and adjacency list sizes differ");
    BowtieGraph bg;
    bg.r = r;
    bg.n = n;
    bg.colour = colour;
    bg.m_ = host_m;
    bg.bowties = std::move(bowties);
    bg.adj = std::move(adj);
    bg.centre_groups.assign(static_cast<std::size_t>(n), {});
    for (int b = 0; b < bg.size(); ++b) {
        Bowtie& bt = bg.bowties[static_cast<std::size_t>(b)];
        if (bt.e1 > bt.e2) std::swap(bt.e1, bt.e2);
        if (bt.e1 < 0 || bt.e2 >= host_m || bt.e1 == bt.e2)
            throw Error("bowtie " + std::to_string(b) + " has invalid edge ids");
        if (bt.centre < 0 || bt.centre >= n)
            throw Error("bowtie " + std::to_string(b) + " has invalid centre");
        bg.pair_to_id_.emplace(bg.key(bt.e1, bt.e2), b);
        bg.centre_groups[static_cast<std::size_t>(bt.centre)].push_back(b);
        auto& nb = bg.adj[static_cast<std::size_t>(b)];
        std::sort(nb.begin(), nb.end());
        for (int x : nb)
            if (x < 0 || x >= static_cast<int>(bg.adj.size()))
                throw Error("adjacency id out of range");
    }
    return bg;
}

// Direct evaluation of the adjacency rule on two edge pairs — used by tests
// to cross-check the constructive build above.
inline bool rule_adjacent(const LinearRGraph& g, const Bowtie& a, const Bowtie& b) {
    int matches = 0;
    EdgeId shared = -1;
    for (EdgeId p : {a.e1, a.e2})
        for (EdgeId q : {b.e1, b.e2})
            if (p == q) {
                ++matches;
                shared = p;
            }
    if (matches != 1) return false;
    EdgeId s1 = a.e1 == shared ? a.e2 : a.e1;
    EdgeId s2 = b.e1 == shared ? b.e2 : b.e1;
    auto meet = edge_intersection(g, s1, s2);
    if (meet.size() != 1) return false;
    return !g.edge_contains(shared, meet[0]);
}

// ---------------------------------------------------------------------------
// Structural checks: the provable properties of B, verified instance by
// instance.  Returns a report (never throws) so violations can be rendered.

struct StructureReport {
    bool ok = false;
    bool adjacency_yields_c3 = true;   // every B-edge's support is a C3
    bool degrees_even = true;          // d_B(b) = 0 (mod 2) for all b
    bool max_degree_ok = true;         // max d_B(b) <= 2(r-1)^2
    bool centre_groups_independent = true;  // no B-edge inside one B_u
    bool degree_sum_identity = true;   // per-vertex identity below
    int max_degree = 0;

    // For each vertex u:  sum_{b in B_u} d_B(b)
    //                       = 2 * (triangles of the class 2-section through u
    //                              - C(r-1,2) * class degree of u).
    struct VertexIdentity {
        VertexId u;
        long long lhs;
        long long rhs;
    };
    std::vector<VertexIdentity> identity;  // all vertices, for reporting
    std::vector<std::string> violations;
};

inline StructureReport check_structure(const ClassView& view, const BowtieGraph& bg) {
    const LinearRGraph& g = view.graph();
    StructureReport rep;

    const int cap = 2 * (bg.r - 1) * (bg.r - 1);
    for (int b = 0; b < bg.size(); ++b) {
        const int d = bg.degree(b);
        rep.max_degree = std::max(rep.max_degree, d);
        if (d % 2 != 0) {
            rep.degrees_even = false;
            rep.violations.push_back("bowtie " + std::to_string(b) + " has odd degree " +
                                     std::to_string(d));
        }
        if (d > cap) {
            rep.max_degree_ok = false;
            rep.violations.push_back("bowtie " + std::to_string(b) + " has degree " +
                                     std::to_string(d) + " > " + std::to_string(cap));
        }
    }

    for (int a = 0; a < bg.size(); ++a) {
        for (int b : bg.adj[static_cast<std::size_t>(a)]) {
            if (b <= a) continue;
            const Bowtie& x = bg.bowties[static_cast<std::size_t>(a)];
            const Bowtie& y = bg.bowties[static_cast<std::size_t>(b)];
            if (x.centre == y.centre) {
                rep.centre_groups_independent = false;
                rep.violations.push_back("adjacent bowties " + std::to_string(a) + ", " +
                                         std::to_string(b) + " share centre " +
                                         std::to_string(x.centre));
            }
            auto shared = bg.shared_edge(a, b);
            bool c3 = false;
            if (shared) {
                EdgeId s1 = x.e1 == *shared ? x.e2 : x.e1;
                EdgeId s2 = y.e1 == *shared ? y.e2 : y.e1;
                c3 = classify_triple(g, *shared, s1, s2).is_c3;
            }
            if (!c3) {
                rep.adjacency_yields_c3 = false;
                rep.violations.push_back("edge {" + std::to_string(a) + "," +
                                         std::to_string(b) + "} does not yield a C3");
            }
        }
    }

    TriangleCounts tc = count_triangles(underlying_graph(view));
    const long long pairs_per_edge = binom2(bg.r - 1);
    rep.identity.reserve(static_cast<std::size_t>(g.n()));
    for (VertexId u = 0; u < g.n(); ++u) {
        long long lhs = 0;
        for (int b : bg.centre_groups[static_cast<std::size_t>(u)]) lhs += bg.degree(b);
        const long long rhs =
            2 * (tc.per_vertex[static_cast<std::size_t>(u)] -
                 pairs_per_edge * view.class_degree(u));
        rep.identity.push_back({u, lhs, rhs});
        if (lhs != rhs) {
            rep.degree_sum_identity = false;
            rep.violations.push_back("vertex " + std::to_string(u) + ": degree sum " +
                                     std::to_string(lhs) + " != " + std::to_string(rhs));
        }
    }

    rep.ok = rep.adjacency_yields_c3 && rep.degrees_even && rep.max_degree_ok &&
             rep.centre_groups_independent && rep.degree_sum_identity;
    return rep;
}

// ---------------------------------------------------------------------------
// Lifting a 2-section triangle to hyperedges: the three pair edges either all
// coincide (the triangle lies inside one hyperedge) or are three distinct
// edges forming a C3 — whose three pairwise intersections are the bowties of
// a B-triangle.

struct TriangleLift {
    enum class Kind { not_a_triangle, in_edge, c3 } kind = Kind::not_a_triangle;
    EdgeId in_edge = -1;
    std::array<EdgeId, 3> c3{-1, -1, -1};  // Q = uv-edge, S = uw-edge, T = vw-edge
    std::array<std::pair<EdgeId, EdgeId>, 3> b_triangle{};  // {Q,S}, {Q,T}, {S,T}
};

inline TriangleLift triangle_to_c3(const ClassView& view, VertexId u, VertexId v,
                                   VertexId w) {
    TriangleLift out;
    if (u == v || u == w || v == w) return out;
    auto q = view.pair_edge(u, v);
    auto s = view.pair_edge(u, w);
    auto t = view.pair_edge(v, w);
    if (!q || !s || !t) return out;
    if (*q == *s && *s == *t) {
        out.kind = TriangleLift::Kind::in_edge;
        out.in_edge = *q;
        return out;
    }
    // Two coinciding would force the third to coincide as well (that edge
    // would contain all three vertices), so the three are pairwise distinct
    // and pairwise intersecting: a C3.
    out.kind = TriangleLift::Kind::c3;
    out.c3 = {*q, *s, *t};
    auto pair_of = [](EdgeId a, EdgeId b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    out.b_triangle = {pair_of(*q, *s), pair_of(*q, *t), pair_of(*s, *t)};
    return out;
}

// ---------------------------------------------------------------------------
// Triangles of B itself.  Each one is supported by either 3 hyperedges (the
// three bowties of a C3) or 4 hyperedges (three bowties through one common
// edge).  The 4-edge kind is what a Pasch-style sub-configuration produces.

struct BTriangleReport {
    long long c3_count = 0;      // support = 3 edges (necessarily a C3)
    long long non_c3_count = 0;  // support = 4 edges
    std::vector<std::array<EdgeId, 4>> witnesses;  // supports of the 4-edge kind
};

inline BTriangleReport classify_b_triangles(const BowtieGraph& bg,
                                            bool collect_witnesses = true) {
    BTriangleReport rep;
    for (int a = 0; a < bg.size(); ++a) {
        const auto& na = bg.adj[static_cast<std::size_t>(a)];
        for (int b : na) {
            if (b <= a) continue;
            const auto& nb = bg.adj[static_cast<std::size_t>(b)];
            std::size_t i = 0, j = 0;
            while (i < na.size() && j < nb.size()) {
                if (na[i] < nb[j]) {
                    ++i;
                } else if (na[i] > nb[j]) {
                    ++j;
                } else {
                    const int c = na[i];
                    if (c > b) {
                        std::vector<EdgeId> support;
                        for (int v : {a, b, c}) {
                            support.push_back(bg.bowties[static_cast<std::size_t>(v)].e1);
                            support.push_back(bg.bowties[static_cast<std::size_t>(v)].e2);
                        }
                        std::sort(support.begin(), support.end());
                        support.erase(std::unique(support.begin(), support.end()),
                                      support.end());
                        if (support.size() == 3) {
                            ++rep.c3_count;
                        } else {
                            ++rep.non_c3_count;
                            if (collect_witnesses && support.size() == 4)
                                rep.witnesses.push_back(
                                    {support[0], support[1], support[2], support[3]});
                        }
                    }
                    ++i;
                    ++j;
                }
            }
        }
    }
    return rep;
}

}  // namespace bowtie
