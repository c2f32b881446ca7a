#pragma once

// Hyperedge colourings and per-class statistics.
//
// A c-colouring assigns each hyperedge a colour in [0, c).  For each class we
// look at the underlying (2-section) graph of that class's hyperedges and
// count
//   T = triangles,
//   S = cherries = sum_u C(d(u), 2)  (paths of length 2).
// Every triangle contains three cherries, so 3T <= S always; the class picked
// for extraction is the one maximizing T/S — a pigeonhole guarantee that the
// chosen class is triangle-rich for its size.  Goodman's identity ties the
// classes of a 2-colouring of a complete underlying graph together:
//   S_red + S_blue = C(n,3) + 2*T_red + 2*T_blue.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bowtie/core.hpp"
#include "bowtie/rng.hpp"

namespace bowtie {

struct Colouring {
    int c = 1;
    std::vector<int> assignment;  // per edge id

    int colour_of(EdgeId e) const { return assignment[static_cast<std::size_t>(e)]; }
};

enum class ColourStrategy {
    uniform_random,  // each edge independently uniform over [0, c)
    round_robin,     // edge e gets colour e mod c
    by_file,         // caller-provided values, validated here
};

inline const char* colour_strategy_name(ColourStrategy s) {
    switch (s) {
        case ColourStrategy::uniform_random: return "uniform";
        case ColourStrategy::round_robin: return "roundrobin";
        case ColourStrategy::by_file: return "file";
    }
    return "?";
}

// Validates and wraps an explicit assignment (the by_file path).
inline Colouring make_colouring(const LinearRGraph& g, int c, std::vector<int> values) {
    if (c < 1) throw BadColourFileError("colour count must be >= 1");
    if (static_cast<int>(values.size()) != g.m())
        throw BadColourFileError("colour file has " + std::to_string(values.size()) +
                                 " entries for " + std::to_string(g.m()) + " edges");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] < 0 || values[i] >= c)
            throw BadColourFileError("entry " + std::to_string(i) + " has colour " +
                                     std::to_string(values[i]) + " outside [0, " +
                                     std::to_string(c) + ")");
    return Colouring{c, std::move(values)};
}

inline Colouring colour_edges(const LinearRGraph& g, int c, ColourStrategy strategy,
                              std::uint64_t seed,
                              const std::vector<int>* file_values = nullptr) {
    if (c < 1) throw BadColourFileError("colour count must be >= 1");
    switch (strategy) {
        case ColourStrategy::by_file: {
            if (!file_values)
                throw BadColourFileError("file strategy requires colour values");
            return make_colouring(g, c, *file_values);
        }
        case ColourStrategy::round_robin: {
            std::vector<int> values(static_cast<std::size_t>(g.m()));
            for (EdgeId e = 0; e < g.m(); ++e)
                values[static_cast<std::size_t>(e)] = e % c;
            return Colouring{c, std::move(values)};
        }
        case ColourStrategy::uniform_random: {
            auto rng = make_rng(seed);
            std::vector<int> values(static_cast<std::size_t>(g.m()));
            for (EdgeId e = 0; e < g.m(); ++e)
                values[static_cast<std::size_t>(e)] =
                    static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(c)));
            return Colouring{c, std::move(values)};
        }
    }
    throw Error("unknown colour strategy");
}

// A colour class seen as a sub-hypergraph without materializing it: edge ids
// stay in the host graph's id space (extraction outputs must be verifiable
// against the original instance).  colouring == nullptr means the whole
// graph (the 1-colouring).
class ClassView {
  public:
    ClassView(const LinearRGraph& g, const Colouring* colouring, int colour)
        : g_(&g), colouring_(colouring), colour_(colour) {}

    static ClassView whole(const LinearRGraph& g) { return ClassView(g, nullptr, 0); }

    const LinearRGraph& graph() const { return *g_; }
    int colour() const { return colour_; }
    int r() const { return g_->r(); }
    int n() const { return g_->n(); }

    bool contains(EdgeId e) const {
        return colouring_ == nullptr || colouring_->colour_of(e) == colour_;
    }

    // The unique class edge through u and v, if any.  In a linear graph the
    // host's pair edge is the only candidate, so one lookup plus a colour
    // test suffices.
    std::optional<EdgeId> pair_edge(VertexId u, VertexId v) const {
        auto e = g_->pair_edge(u, v);
        if (!e || !contains(*e)) return std::nullopt;
        return e;
    }

    std::vector<EdgeId> edge_ids() const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < g_->m(); ++e)
            if (contains(e)) out.push_back(e);
        return out;
    }

    // Class edges through u, ascending.
    std::vector<EdgeId> edges_through(VertexId u) const {
        std::vector<EdgeId> out;
        for (EdgeId e : g_->edges_through(u))
            if (contains(e)) out.push_back(e);
        return out;
    }

    int class_degree(VertexId u) const {
        int d = 0;
        for (EdgeId e : g_->edges_through(u))
            if (contains(e)) ++d;
        return d;
    }

  private:
    const LinearRGraph* g_;
    const Colouring* colouring_;
    int colour_;
};

inline UnderlyingGraph underlying_graph(const ClassView& view) {
    UnderlyingGraph ug(view.n());
    const auto& g = view.graph();
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (!view.contains(e)) continue;
        const auto& vs = g.edge(e);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) ug.add_pair(vs[i], vs[j]);
    }
    ug.finalize();
    return ug;
}

struct ColourClassStats {
    int colour = 0;
    long long edge_count = 0;  // hyperedges in the class
    long long t = 0;           // triangles of the class underlying graph
    long long s = 0;           // cherries: sum_u C(d(u),2)
    double ratio = 0.0;        // T/S, 0 when S == 0
};

inline ColourClassStats class_stats(const LinearRGraph& g, const Colouring& colouring,
                                    int colour) {
    ColourClassStats st;
    st.colour = colour;
    ClassView view(g, &colouring, colour);
    for (EdgeId e = 0; e < g.m(); ++e)
        if (view.contains(e)) ++st.edge_count;
    UnderlyingGraph ug = underlying_graph(view);
    st.t = count_triangles(ug).total;
    for (VertexId u = 0; u < ug.n(); ++u) st.s += binom2(ug.degree(u));
    st.ratio = st.s == 0 ? 0.0 : static_cast<double>(st.t) / static_cast<double>(st.s);
    return st;
}

struct SelectionReport {
    int selected = 0;
    std::vector<ColourClassStats> classes;
};

// Exact comparison of T_a/S_a vs T_b/S_b by cross multiplication; a class
// with S = 0 has ratio 0 (written 0/1).  Ties prefer larger S, then the lower
// colour index.
inline bool class_beats(const ColourClassStats& a, const ColourClassStats& b) {
    const long long an = a.s == 0 ? 0 : a.t, ad = a.s == 0 ? 1 : a.s;
    const long long bn = b.s == 0 ? 0 : b.t, bd = b.s == 0 ? 1 : b.s;
    const __int128 lhs = static_cast<__int128>(an) * bd;
    const __int128 rhs = static_cast<__int128>(bn) * ad;
    if (lhs != rhs) return lhs > rhs;
    if (a.s != b.s) return a.s > b.s;
    return a.colour < b.colour;
}

inline SelectionReport select_class(const LinearRGraph& g, const Colouring& colouring) {
    SelectionReport rep;
    rep.classes.reserve(static_cast<std::size_t>(colouring.c));
    for (int colour = 0; colour < colouring.c; ++colour)
        rep.classes.push_back(class_stats(g, colouring, colour));
    rep.selected = 0;
    for (int colour = 1; colour < colouring.c; ++colour)
        if (class_beats(rep.classes[static_cast<std::size_t>(colour)],
                        rep.classes[static_cast<std::size_t>(rep.selected)]))
            rep.selected = colour;
    return rep;
}

// Exact Goodman identity for a 2-colouring of a complete instance, where
// every vertex pair inherits the colour of its unique covering hyperedge:
//
//     S_a + S_b = C(n,3) + 2 T_a + 2 T_b.
//
// (Each vertex triple contributes its same-coloured cherries: 3 when the
// triple is monochromatic, exactly 1 otherwise.)
inline bool goodman_identity(int n, const ColourClassStats& a,
                             const ColourClassStats& b) {
    return a.s + b.s == binom3(n) + 2 * (a.t + b.t);
}

// Goodman-style lower bound check for a 2-colouring: the two classes'
// triangle total must reach (1/4 - eps) * C(n,3).
inline bool goodman_check(int n, const ColourClassStats& a, const ColourClassStats& b,
                          double eps) {
    const double bound = (0.25 - eps) * static_cast<double>(binom3(n));
    return static_cast<double>(a.t + b.t) >= bound;
}

}  // namespace bowtie
