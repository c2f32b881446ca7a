#pragma once

// Instance generators.
//
// The complete generators produce r-Steiner systems (every vertex pair in
// exactly one hyperedge):
//   fano                 the 7-point 3-uniform system
//   bose_sts(n)          Steiner triple system, n = 3 (mod 6), via the
//                        idempotent quasigroup on Z_{2t+1}
//   skolem_sts(n)        Steiner triple system, n = 1 (mod 6), via the
//                        half-idempotent quasigroup on Z_{2t} plus one
//                        infinity point
//   affine_plane(q)      AG(2,q), q prime: n = q^2, r = q
//   projective_plane(q)  PG(2,q), q prime: n = q^2+q+1, r = q+1
// random_partial(r,n,target,seed) grows a linear r-graph by seeded rejection
// sampling; a stall (50*target consecutive rejections) is reported, not
// fatal.

#include <string>
#include <utility>
#include <vector>

#include "bowtie/core.hpp"
#include "bowtie/rng.hpp"

namespace bowtie {

enum class GeneratorKind {
    fano,
    bose_sts,
    skolem_sts,
    affine_plane,
    projective_plane,
    random_partial,
};

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::fano;
    int n = 0;                   // bose/skolem order
    int q = 0;                   // affine/projective field order (prime)
    int r = 0;                   // random_partial edge size
    long long target_edges = 0;  // random_partial goal
    std::uint64_t seed = 0;      // random_partial stream
};

struct Generated {
    LinearRGraph graph;
    bool stalled = false;  // random_partial gave up before target_edges
};

inline LinearRGraph make_fano() {
    return build_linear_rgraph(3, 7,
                               {{0, 1, 2},
                                {0, 3, 4},
                                {0, 5, 6},
                                {1, 3, 5},
                                {1, 4, 6},
                                {2, 3, 6},
                                {2, 4, 5}});
}

// Bose construction.  Points are Z_{2t+1} x {0,1,2} indexed 3i+l.  The
// quasigroup i*j = (i+j)/2 over Z_{2t+1} (division by 2 = multiplication by
// t+1) is idempotent and commutative, which is exactly what makes the triple
// family below partition the pairs.
inline LinearRGraph make_bose_sts(int n) {
    if (n < 3 || n % 6 != 3)
        throw UnsupportedOrderError("bose order must be 3 (mod 6), got " +
                                    std::to_string(n));
    const int t = (n - 3) / 6;
    const int q = 2 * t + 1;  // odd group order
    const int half = t + 1;   // inverse of 2 mod q
    auto idx = [&](int i, int l) { return 3 * i + l; };
    auto qmul = [&](int i, int j) { return static_cast<int>((static_cast<long long>(i) + j) * half % q); };
    std::vector<std::vector<VertexId>> triples;
    triples.reserve(static_cast<std::size_t>(n) * (n - 1) / 6);
    for (int i = 0; i < q; ++i)
        triples.push_back({idx(i, 0), idx(i, 1), idx(i, 2)});
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            for (int l = 0; l < 3; ++l)
                triples.push_back({idx(i, l), idx(j, l), idx(qmul(i, j), (l + 1) % 3)});
    return build_linear_rgraph(3, n, std::move(triples));
}

// Skolem construction.  Points are Z_{2t} x {0,1,2} indexed 3i+l plus an
// infinity point 6t.  The half-idempotent quasigroup on Z_{2t}:
// i*j = s/2 when s = i+j is even, t + (s-1)/2 when odd.
inline LinearRGraph make_skolem_sts(int n) {
    if (n < 7 || n % 6 != 1)
        throw UnsupportedOrderError("skolem order must be 1 (mod 6) and >= 7, got " +
                                    std::to_string(n));
    const int t = (n - 1) / 6;
    const int q = 2 * t;
    const int infinity = 6 * t;
    auto idx = [&](int i, int l) { return 3 * i + l; };
    auto qmul = [&](int i, int j) {
        int s = (i + j) % q;
        return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
    };
    std::vector<std::vector<VertexId>> triples;
    triples.reserve(static_cast<std::size_t>(n) * (n - 1) / 6);
    for (int i = 0; i < t; ++i)
        triples.push_back({idx(i, 0), idx(i, 1), idx(i, 2)});
    for (int i = 0; i < t; ++i)
        for (int l = 0; l < 3; ++l)
            triples.push_back({infinity, idx(t + i, l), idx(i, (l + 1) % 3)});
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            for (int l = 0; l < 3; ++l)
                triples.push_back({idx(i, l), idx(j, l), idx(qmul(i, j), (l + 1) % 3)});
    return build_linear_rgraph(3, n, std::move(triples));
}

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// AG(2,q): q^2 points (x,y) indexed x*q+y; lines are the q^2 graphs of
// y = ax+b plus the q verticals x = c.
inline LinearRGraph make_affine_plane(int q) {
    if (!is_prime(q))
        throw UnsupportedOrderError("affine plane order must be prime, got " +
                                    std::to_string(q));
    auto idx = [&](int x, int y) { return x * q + y; };
    std::vector<std::vector<VertexId>> lines;
    lines.reserve(static_cast<std::size_t>(q) * (q + 1));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::vector<VertexId> line;
            line.reserve(static_cast<std::size_t>(q));
            for (int x = 0; x < q; ++x)
                line.push_back(idx(x, (a * x + b) % q));
            lines.push_back(std::move(line));
        }
    for (int c = 0; c < q; ++c) {
        std::vector<VertexId> line;
        line.reserve(static_cast<std::size_t>(q));
        for (int y = 0; y < q; ++y) line.push_back(idx(c, y));
        lines.push_back(std::move(line));
    }
    return build_linear_rgraph(q, q * q, std::move(lines));
}

// PG(2,q): points are the normalized homogeneous triples
//   (x,y,1) -> x*q+y,   (1,x,0) -> q^2+x,   (0,1,0) -> q^2+q;
// lines are the normalized coefficient triples [a:b:c] with incidence
// ax+by+cz = 0.  Normalized enumeration makes deduplication unnecessary.
inline LinearRGraph make_projective_plane(int q) {
    if (!is_prime(q))
        throw UnsupportedOrderError("projective plane order must be prime, got " +
                                    std::to_string(q));
    struct P3 {
        int x, y, z;
    };
    std::vector<P3> points;
    points.reserve(static_cast<std::size_t>(q) * q + q + 1);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) points.push_back({x, y, 1});
    for (int x = 0; x < q; ++x) points.push_back({1, x, 0});
    points.push_back({0, 1, 0});

    std::vector<P3> coeffs = points;  // self-dual normalization
    std::vector<std::vector<VertexId>> lines;
    lines.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        std::vector<VertexId> line;
        line.reserve(static_cast<std::size_t>(q) + 1);
        for (int p = 0; p < static_cast<int>(points.size()); ++p) {
            const auto& pt = points[static_cast<std::size_t>(p)];
            if ((c.x * pt.x + c.y * pt.y + c.z * pt.z) % q == 0) line.push_back(p);
        }
        lines.push_back(std::move(line));
    }
    return build_linear_rgraph(q + 1, q * q + q + 1, std::move(lines));
}

// Seeded rejection growth of a (generally incomplete) linear r-graph: sample
// an r-subset, accept iff it covers no already-covered pair.  Gives up after
// 50*target_edges consecutive rejections and reports the stall in the result
// rather than failing.
inline Generated make_random_partial(int r, int n, long long target_edges,
                                     std::uint64_t seed) {
    if (r < 2) throw UnsupportedOrderError("random partial needs r >= 2");
    if (n < r)
        throw UnsupportedOrderError("random partial needs n >= r, got n = " +
                                    std::to_string(n) + ", r = " + std::to_string(r));
    if (target_edges < 0) throw UnsupportedOrderError("negative target_edges");

    Generated out;
    std::vector<std::vector<VertexId>> edges;
    if (target_edges > 0) {
        auto rng = make_rng(seed);
        std::vector<char> covered(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        auto pair_slot = [&](int u, int v) -> char& {
            if (u > v) std::swap(u, v);
            return covered[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + v];
        };
        const long long stall_limit = 50 * target_edges;
        long long consecutive_rejects = 0;
        while (static_cast<long long>(edges.size()) < target_edges) {
            std::vector<int> vs = sample_distinct(rng, n, r);
            bool ok = true;
            for (std::size_t i = 0; ok && i < vs.size(); ++i)
                for (std::size_t j = i + 1; ok && j < vs.size(); ++j)
                    if (pair_slot(vs[i], vs[j])) ok = false;
            if (!ok) {
                if (++consecutive_rejects >= stall_limit) {
                    out.stalled = true;
                    break;
                }
                continue;
            }
            consecutive_rejects = 0;
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) pair_slot(vs[i], vs[j]) = 1;
            edges.push_back(std::move(vs));
        }
    }
    out.graph = build_linear_rgraph(r, n, std::move(edges));
    return out;
}

inline Generated generate(const GeneratorSpec& spec) {
    Generated out;
    switch (spec.kind) {
        case GeneratorKind::fano:
            out.graph = make_fano();
            return out;
        case GeneratorKind::bose_sts:
            out.graph = make_bose_sts(spec.n);
            return out;
        case GeneratorKind::skolem_sts:
            out.graph = make_skolem_sts(spec.n);
            return out;
        case GeneratorKind::affine_plane:
            out.graph = make_affine_plane(spec.q);
            return out;
        case GeneratorKind::projective_plane:
            out.graph = make_projective_plane(spec.q);
            return out;
        case GeneratorKind::random_partial:
            return make_random_partial(spec.r, spec.n, spec.target_edges, spec.seed);
    }
    throw Error("unknown generator kind");
}

struct CompletenessReport {
    bool complete = false;
    bool edge_count_formula_ok = false;  // m == n(n-1)/(r(r-1)) when complete
    long long expected_m = 0;
    std::vector<std::pair<VertexId, VertexId>> uncovered;
};

inline CompletenessReport validate_complete(const LinearRGraph& g) {
    CompletenessReport rep;
    rep.complete = is_complete(g);
    const long long rr = static_cast<long long>(g.r()) * (g.r() - 1);
    const long long nn = static_cast<long long>(g.n()) * (g.n() - 1);
    rep.expected_m = nn % rr == 0 ? nn / rr : -1;
    rep.edge_count_formula_ok = rep.complete && g.m() == rep.expected_m;
    if (!rep.complete) {
        for (VertexId u = 0; u < g.n(); ++u)
            for (VertexId v = u + 1; v < g.n(); ++v)
                if (!g.pair_edge(u, v)) rep.uncovered.emplace_back(u, v);
    }
    return rep;
}

inline const char* generator_kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::fano: return "fano";
        case GeneratorKind::bose_sts: return "bose";
        case GeneratorKind::skolem_sts: return "skolem";
        case GeneratorKind::affine_plane: return "affine";
        case GeneratorKind::projective_plane: return "projective";
        case GeneratorKind::random_partial: return "random";
    }
    return "?";
}

}  // namespace bowtie
