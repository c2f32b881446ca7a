#pragma once

// Text formats.
//
// .lhg ("linear hypergraph"):
//   line 1:        r n m
//   lines 2..m+1:  r space-separated vertex ids (0-based)
// Anything after the m-th edge line other than whitespace is rejected, as are
// extra tokens on a line, non-numeric tokens, and out-of-range ids.  Errors
// carry 1-based line numbers.
//
// colour file: m lines, one integer colour per hyperedge, same order as the
// .lhg edge list.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bowtie/core.hpp"

namespace bowtie {

namespace detail {

// Whole-token integer parse; anything else (including "3x" or empty) fails.
inline bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

inline long long want_int(std::istringstream& line, long ln, const char* what) {
    std::string tok;
    if (!(line >> tok)) throw ParseError(ln, std::string("missing ") + what);
    long long v = 0;
    if (!parse_int(tok, v))
        throw ParseError(ln, std::string("bad ") + what + ": '" + tok + "'");
    return v;
}

inline void want_line_end(std::istringstream& line, long ln) {
    std::string extra;
    if (line >> extra)
        throw ParseError(ln, "trailing garbage: '" + extra + "'");
}

}  // namespace detail

inline LinearRGraph read_lhg(std::istream& in) {
    std::string text;
    long ln = 0;
    if (!std::getline(in, text)) throw ParseError(1, "missing header 'r n m'");
    ++ln;
    std::istringstream header(text);
    long long r = detail::want_int(header, ln, "edge size r");
    long long n = detail::want_int(header, ln, "vertex count n");
    long long m = detail::want_int(header, ln, "edge count m");
    detail::want_line_end(header, ln);
    if (r < 2 || r > 1'000'000) throw ParseError(ln, "edge size r out of range");
    if (n < 0 || n > 100'000'000) throw ParseError(ln, "vertex count n out of range");
    if (m < 0 || m > 100'000'000) throw ParseError(ln, "edge count m out of range");

    std::vector<std::vector<VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        if (!std::getline(in, text))
            throw ParseError(ln + 1, "unexpected end of file: expected edge " +
                                         std::to_string(e) + " of " + std::to_string(m));
        ++ln;
        std::istringstream row(text);
        std::vector<VertexId> vs;
        vs.reserve(static_cast<std::size_t>(r));
        for (long long i = 0; i < r; ++i) {
            long long v = detail::want_int(row, ln, "vertex id");
            if (v < 0 || v >= n)
                throw ParseError(ln, "vertex id " + std::to_string(v) +
                                         " out of range [0, " + std::to_string(n) + ")");
            vs.push_back(static_cast<VertexId>(v));
        }
        detail::want_line_end(row, ln);
        edges.push_back(std::move(vs));
    }
    while (std::getline(in, text)) {
        ++ln;
        std::istringstream rest(text);
        std::string extra;
        if (rest >> extra)
            throw ParseError(ln, "trailing garbage after " + std::to_string(m) +
                                     " edges: '" + extra + "'");
    }

    try {
        return build_linear_rgraph(static_cast<int>(r), static_cast<int>(n),
                                   std::move(edges));
    } catch (const NonUniformEdgeError& err) {
        throw ParseError(2 + err.edge, err.what());
    } catch (const LinearityViolationError& err) {
        throw ParseError(2 + err.second_edge, err.what());
    }
}

inline LinearRGraph read_lhg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return read_lhg(in);
}

inline void write_lhg(std::ostream& out, const LinearRGraph& g) {
    out << g.r() << ' ' << g.n() << ' ' << g.m() << '\n';
    for (EdgeId e = 0; e < g.m(); ++e) {
        const auto& vs = g.edge(e);
        for (std::size_t i = 0; i < vs.size(); ++i)
            out << vs[i] << (i + 1 < vs.size() ? ' ' : '\n');
    }
}

inline void write_lhg_file(const std::string& path, const LinearRGraph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_lhg(out, g);
}

// Raw colour values, one line per hyperedge.  Range/length validation happens
// in make_colouring (needs the graph and c).
inline std::vector<int> read_colour_values(std::istream& in) {
    std::vector<int> values;
    std::string text;
    long ln = 0;
    while (std::getline(in, text)) {
        ++ln;
        std::istringstream row(text);
        std::string tok;
        if (!(row >> tok)) continue;  // blank line
        long long v = 0;
        if (!detail::parse_int(tok, v) || v < 0)
            throw ParseError(ln, "bad colour value: '" + tok + "'");
        detail::want_line_end(row, ln);
        values.push_back(static_cast<int>(v));
    }
    return values;
}

inline std::vector<int> read_colour_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return read_colour_values(in);
}

inline void write_colour_values(std::ostream& out, const std::vector<int>& values) {
    for (int v : values) out << v << '\n';
}

inline void write_colour_file(const std::string& path, const std::vector<int>& values) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_colour_values(out, values);
}

}  // namespace bowtie
