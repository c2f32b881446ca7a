#pragma once

// Hypergraph core: linear r-uniform hypergraphs and the small value types
// everything else is built from.
//
// A linear r-graph is an r-uniform hypergraph in which any two hyperedges
// share at most one vertex.  Consequently every vertex pair lies in at most
// one hyperedge, which gives O(1) pair lookup — the workhorse of the whole
// library.  A complete linear r-graph covers every pair exactly once (an
// r-Steiner system).

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bowtie {

using VertexId = int;
using EdgeId = int;

// ---------------------------------------------------------------------------
// Errors.  Input/contract violations throw; algorithmic outcomes elsewhere in
// the library are status structs, never exceptions.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An edge whose vertex list is not r distinct in-range vertices.
struct NonUniformEdgeError : Error {
    EdgeId edge;
    explicit NonUniformEdgeError(EdgeId e, const std::string& what)
        : Error(what), edge(e) {}
};

// Two edges sharing two or more vertices.
struct LinearityViolationError : Error {
    VertexId u, v;
    EdgeId first_edge, second_edge;
    LinearityViolationError(VertexId uu, VertexId vv, EdgeId e1, EdgeId e2,
                            const std::string& what)
        : Error(what), u(uu), v(vv), first_edge(e1), second_edge(e2) {}
};

// Malformed text input; `line` is 1-based.
struct ParseError : Error {
    long line;
    ParseError(long ln, const std::string& what)
        : Error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

// Generator asked for an order outside its arithmetic progression / primality
// constraint.
struct UnsupportedOrderError : Error {
    using Error::Error;
};

// Colour assignment whose length or value range does not fit the graph.
struct BadColourFileError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------

inline long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

inline long long binom3(long long x) {
    return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6;
}

// Linear r-uniform hypergraph on vertices 0..n-1.  Edges are sorted vertex
// vectors; edge ids index into `edges` in input order.
class LinearRGraph {
  public:
    LinearRGraph() = default;

    int r() const { return r_; }
    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::vector<VertexId>>& edges() const { return edges_; }
    const std::vector<VertexId>& edge(EdgeId e) const {
        return edges_[static_cast<std::size_t>(e)];
    }

    // Hyperedges through u, ascending by edge id.
    const std::vector<EdgeId>& edges_through(VertexId u) const {
        return incidence_[static_cast<std::size_t>(u)];
    }

    // Hyperedge degree of u.
    int degree(VertexId u) const {
        return static_cast<int>(incidence_[static_cast<std::size_t>(u)].size());
    }

    // The unique hyperedge containing both u and v, if any.
    std::optional<EdgeId> pair_edge(VertexId u, VertexId v) const {
        auto it = pair_index_.find(pair_key(u, v));
        if (it == pair_index_.end()) return std::nullopt;
        return it->second;
    }

    bool edge_contains(EdgeId e, VertexId u) const {
        const auto& vs = edge(e);
        return std::binary_search(vs.begin(), vs.end(), u);
    }

    // Number of vertex pairs covered by some hyperedge (= m * C(r,2) by
    // linearity).
    long long covered_pairs() const {
        return static_cast<long long>(pair_index_.size());
    }

    friend LinearRGraph build_linear_rgraph(int r, int n,
                                            std::vector<std::vector<VertexId>> edges);

  private:
    static std::uint64_t pair_key(VertexId u, VertexId v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }

    int r_ = 0;
    int n_ = 0;
    std::vector<std::vector<VertexId>> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::unordered_map<std::uint64_t, EdgeId> pair_index_;
};

// Validates r-uniformity (r distinct in-range vertices per edge) and
// linearity (no pair covered twice); sorts each edge's vertex list.
inline LinearRGraph build_linear_rgraph(int r, int n,
                                        std::vector<std::vector<VertexId>> edges) {
    if (r < 2) throw Error("edge size r must be at least 2, got " + std::to_string(r));
    if (n < 0) throw Error("vertex count must be nonnegative");
    LinearRGraph g;
    g.r_ = r;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.incidence_.assign(static_cast<std::size_t>(n), {});
    g.pair_index_.reserve(g.edges_.size() * static_cast<std::size_t>(r) *
                          static_cast<std::size_t>(r - 1) / 2);
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto& vs = g.edges_[static_cast<std::size_t>(e)];
        if (static_cast<int>(vs.size()) != r)
            throw NonUniformEdgeError(
                e, "edge " + std::to_string(e) + " has " + std::to_string(vs.size()) +
                       " vertices, expected " + std::to_string(r));
        std::sort(vs.begin(), vs.end());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i] < 0 || vs[i] >= n)
                throw NonUniformEdgeError(
                    e, "edge " + std::to_string(e) + " has out-of-range vertex " +
                           std::to_string(vs[i]));
            if (i > 0 && vs[i] == vs[i - 1])
                throw NonUniformEdgeError(
                    e, "edge " + std::to_string(e) + " repeats vertex " +
                           std::to_string(vs[i]));
        }
        for (std::size_t i = 0; i < vs.size(); ++i) {
            g.incidence_[static_cast<std::size_t>(vs[i])].push_back(e);
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                auto key = LinearRGraph::pair_key(vs[i], vs[j]);
                auto [it, inserted] = g.pair_index_.emplace(key, e);
                if (!inserted)
                    throw LinearityViolationError(
                        vs[i], vs[j], it->second, e,
                        "edges " + std::to_string(it->second) + " and " +
                            std::to_string(e) + " share vertices " +
                            std::to_string(vs[i]) + " and " + std::to_string(vs[j]));
            }
        }
    }
    return g;
}

// True iff every vertex pair lies in exactly one hyperedge (r-Steiner
// system).  With linearity already enforced, coverage count == C(n,2) is
// equivalent.
inline bool is_complete(const LinearRGraph& g) {
    return g.covered_pairs() == binom2(g.n());
}

// Number of distinct vertices touched by the given hyperedges.
inline int span_of(const LinearRGraph& g, const std::vector<EdgeId>& edge_ids) {
    std::vector<VertexId> vs;
    vs.reserve(edge_ids.size() * static_cast<std::size_t>(g.r()));
    for (EdgeId e : edge_ids)
        for (VertexId u : g.edge(e)) vs.push_back(u);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return static_cast<int>(vs.size());
}

// The union of the given hyperedges' vertex sets, ascending.
inline std::vector<VertexId> vertex_union(const LinearRGraph& g,
                                          const std::vector<EdgeId>& edge_ids) {
    std::vector<VertexId> vs;
    vs.reserve(edge_ids.size() * static_cast<std::size_t>(g.r()));
    for (EdgeId e : edge_ids)
        for (VertexId u : g.edge(e)) vs.push_back(u);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// Vertices common to two hyperedges (at most one in a linear graph).
inline std::vector<VertexId> edge_intersection(const LinearRGraph& g, EdgeId a,
                                               EdgeId b) {
    std::vector<VertexId> out;
    const auto& va = g.edge(a);
    const auto& vb = g.edge(b);
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                          std::back_inserter(out));
    return out;
}

// Classification of an edge triple.  The triple is a C3 iff the three edges
// pairwise intersect in three distinct vertices; by linearity this is
// equivalent to spanning exactly 3r-3 vertices.
struct TripleClass {
    bool is_c3 = false;
    // Pairwise meets when is_c3: meet[0] = e1&e2, meet[1] = e1&e3,
    // meet[2] = e2&e3.
    std::array<VertexId, 3> meet{-1, -1, -1};
};

inline TripleClass classify_triple(const LinearRGraph& g, EdgeId e1, EdgeId e2,
                                   EdgeId e3) {
    TripleClass out;
    if (e1 == e2 || e1 == e3 || e2 == e3) return out;
    auto m12 = edge_intersection(g, e1, e2);
    auto m13 = edge_intersection(g, e1, e3);
    auto m23 = edge_intersection(g, e2, e3);
    if (m12.size() != 1 || m13.size() != 1 || m23.size() != 1) return out;
    VertexId a = m12[0], b = m13[0], c = m23[0];
    if (a == b || a == c || b == c) return out;
    out.is_c3 = true;
    out.meet = {a, b, c};
    return out;
}

// A set of hyperedges recorded with its span.  A Configuration with k edges
// and span <= v is a (v,k)-configuration.
struct Configuration {
    std::vector<EdgeId> edge_ids;  // ascending
    int span = 0;

    int k() const { return static_cast<int>(edge_ids.size()); }
    bool fits(int v) const { return span <= v; }
};

inline Configuration make_configuration(const LinearRGraph& g,
                                        std::vector<EdgeId> edge_ids) {
    std::sort(edge_ids.begin(), edge_ids.end());
    Configuration c;
    c.span = span_of(g, edge_ids);
    c.edge_ids = std::move(edge_ids);
    return c;
}

// ---------------------------------------------------------------------------
// Underlying (2-section) graph: vertex pairs covered by the hyperedges of
// some edge set.  In a linear graph no pair is covered twice, so the pair
// multiset is already a simple graph.

class UnderlyingGraph {
  public:
    UnderlyingGraph() = default;
    explicit UnderlyingGraph(int n) : adj_(static_cast<std::size_t>(n)) {}

    int n() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }

    const std::vector<VertexId>& neighbours(VertexId u) const {
        return adj_[static_cast<std::size_t>(u)];
    }
    int degree(VertexId u) const {
        return static_cast<int>(adj_[static_cast<std::size_t>(u)].size());
    }
    bool has_edge(VertexId u, VertexId v) const {
        const auto& nu = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    // Pairs are expected unique (guaranteed when they come from a linear
    // graph's edges).
    void add_pair(VertexId u, VertexId v) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++edge_count_;
    }

    void finalize() {
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

  private:
    std::vector<std::vector<VertexId>> adj_;
    long long edge_count_ = 0;
};

inline UnderlyingGraph underlying_graph(const LinearRGraph& g) {
    UnderlyingGraph ug(g.n());
    for (EdgeId e = 0; e < g.m(); ++e) {
        const auto& vs = g.edge(e);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) ug.add_pair(vs[i], vs[j]);
    }
    ug.finalize();
    return ug;
}

// Triangles of an UnderlyingGraph, total and per vertex.
struct TriangleCounts {
    long long total = 0;
    std::vector<long long> per_vertex;
};

inline TriangleCounts count_triangles(const UnderlyingGraph& ug) {
    TriangleCounts tc;
    tc.per_vertex.assign(static_cast<std::size_t>(ug.n()), 0);
    for (VertexId u = 0; u < ug.n(); ++u) {
        for (VertexId v : ug.neighbours(u)) {
            if (v <= u) continue;
            const auto& nu = ug.neighbours(u);
            const auto& nv = ug.neighbours(v);
            std::size_t i = 0, j = 0;
            while (i < nu.size() && j < nv.size()) {
                if (nu[i] < nv[j]) {
                    ++i;
                } else if (nu[i] > nv[j]) {
                    ++j;
                } else {
                    if (nu[i] > v) {
                        ++tc.total;
                        ++tc.per_vertex[static_cast<std::size_t>(u)];
                        ++tc.per_vertex[static_cast<std::size_t>(v)];
                        ++tc.per_vertex[static_cast<std::size_t>(nu[i])];
                    }
                    ++i;
                    ++j;
                }
            }
        }
    }
    return tc;
}

}  // namespace bowtie
