#pragma once

// Extraction: turning structure in B into monochromatic ((r-2)k+3, k)-
// configurations.  Three procedures, all emitting checkable artefacts:
//
// 1. Path walk.  Walking a path b_1 b_2 ... in B and collecting hyperedges
//    grows a configuration whose edge count m rises by at most 1 per path
//    vertex while the span stays under (r-2)m + 3: every new edge already
//    meets the collection in its bowtie centre and in the C3 vertex its
//    B-edge guarantees.  A path with k^2 vertices forces m >= k (at most
//    C(m,2) >= p bowties fit in an m-edge collection), so the walk stops at
//    the first prefix with exactly k edges.  The path comes from a seeded
//    randomized DFS with restarts.
//
// 2. Inductive configurations.  A configuration is inductive w.r.t. its root
//    edge T0 when it can be peeled, one edge at a time, down to a bowtie
//    containing T0, each peeled edge lying in a C3 of the current level and
//    carrying exactly r-2 private (degree-1) vertices.  Checked greedily;
//    the peel order is a replayable certificate.
//
// 3. The induction engine.  Grows an inductive configuration F inside dense
//    components, alternating two state shapes:
//      Type 1: F spans at most (r-2)|F| + 2 (one vertex of slack in hand);
//      Type 2: F carries a distinguished inductive subset E with
//        (P1) E inductive w.r.t. T0,
//        (P2) V(E) and V(F \ E) meet only inside T0,
//        (P3) A = bowties of the working component with both edges in E is
//             nonempty and sparse: 2 e(B[A]) < 3(r-1) |A|.
//    Case 1 (from Type 1): adopt a fresh anchor partner meeting F only in
//    u0.  Case 2 (from Type 2): sparsity of A inside a dense component
//    yields a boundary B-edge {b', b} with b' in A, b outside; its new edge
//    T either meets V(F) in >= 3 vertices (Case 2.1 -> Type 1) or in exactly
//    the two C3 vertices w1, w2 (Case 2.2 -> Type 2, E grows by T).  The
//    Case 2.2 bookkeeping has an exact certificate (the "nice count"): the
//    three cross edge counts between A, A'_1 = {{S,T} : S in E, w1 in S} and
//    A'_2 (same with w2) all equal the number of nice C3s {T,S1,S2} and the
//    overlap |V(M1) & V(M2)| of the trimmed edge families, and those 3|N|
//    cross edges decompose into |N| edge-disjoint triangles, one per nice
//    C3.  All of it is recomputed from scratch here after every step.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bowtie/bowtie_graph.hpp"
#include "bowtie/components.hpp"
#include "bowtie/core.hpp"
#include "bowtie/rng.hpp"

namespace bowtie {

namespace detail {

inline bool sorted_contains(const std::vector<int>& xs, int x) {
    return std::binary_search(xs.begin(), xs.end(), x);
}

inline std::vector<int> sorted_intersection(const std::vector<int>& a,
                                            const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

inline void sorted_insert(std::vector<int>& xs, int x) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), x), x);
}

// Edges of B inside the sorted id set xs.
inline long long edges_within(const BowtieGraph& bg, const std::vector<int>& xs) {
    long long twice = 0;
    for (int a : xs)
        for (int b : bg.adj[static_cast<std::size_t>(a)])
            if (sorted_contains(xs, b)) ++twice;
    return twice / 2;
}

// Edges of B between disjoint sorted id sets.
inline long long edges_between(const BowtieGraph& bg, const std::vector<int>& xs,
                               const std::vector<int>& ys) {
    long long total = 0;
    for (int a : xs)
        for (int b : bg.adj[static_cast<std::size_t>(a)])
            if (sorted_contains(ys, b)) ++total;
    return total;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Path walk.

struct PathWalkStep {
    int bowtie = -1;  // path vertex consumed
    int m = 0;        // edges collected after consuming it
    int span = 0;
};

struct PathWalkResult {
    enum class Status { success, no_long_path };
    Status status = Status::no_long_path;
    Configuration config;            // on success
    int longest_found = 0;           // best path length seen (vertices)
    std::vector<int> path;           // consumed path prefix
    std::vector<PathWalkStep> trace;
};

// Seeded longest-path heuristic: randomized depth-first searches with full
// backtracking, restarting from random vertices until the target length is
// reached or the expansion budget runs out.  Returns the best simple path
// found (vertex ids in order).
inline std::vector<int> find_long_path(const BowtieGraph& bg, int target_len,
                                       std::uint64_t seed,
                                       long long node_budget = 200'000) {
    std::vector<int> best;
    if (bg.size() == 0 || target_len <= 0) return best;
    auto rng = make_rng(seed);
    long long budget = node_budget;

    std::vector<char> on_path(static_cast<std::size_t>(bg.size()), 0);
    while (budget > 0 && static_cast<int>(best.size()) < target_len) {
        const int start = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(bg.size())));

        struct Frame {
            int vertex;
            std::vector<int> order;  // shuffled neighbours
            std::size_t next = 0;
        };
        std::fill(on_path.begin(), on_path.end(), 0);
        std::vector<Frame> stack;
        std::vector<int> path;

        auto enter = [&](int v) {
            on_path[static_cast<std::size_t>(v)] = 1;
            path.push_back(v);
            Frame f;
            f.vertex = v;
            f.order = bg.adj[static_cast<std::size_t>(v)];
            shuffle_in_place(rng, f.order);
            stack.push_back(std::move(f));
            if (path.size() > best.size()) best = path;
            --budget;
        };

        enter(start);
        while (!stack.empty() && budget > 0 &&
               static_cast<int>(best.size()) < target_len) {
            Frame& top = stack.back();
            bool advanced = false;
            while (top.next < top.order.size()) {
                int nb = top.order[top.next++];
                if (!on_path[static_cast<std::size_t>(nb)]) {
                    enter(nb);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                on_path[static_cast<std::size_t>(top.vertex)] = 0;
                path.pop_back();
                stack.pop_back();
            }
        }
    }
    return best;
}

// Walks the best path found and stops at the first prefix collecting exactly
// k hyperedges.  Failure (m never reaches k) reports the best path length.
inline PathWalkResult pathwalk_extract(const ClassView& view, const BowtieGraph& bg,
                                       int k, std::uint64_t seed,
                                       long long node_budget = 200'000) {
    if (k < 2) throw Error("path walk needs k >= 2");
    const LinearRGraph& g = view.graph();
    PathWalkResult out;

    const int target = k * k;
    std::vector<int> path = find_long_path(bg, target, seed, node_budget);
    out.longest_found = static_cast<int>(path.size());
    if (path.empty()) return out;

    std::vector<EdgeId> f;  // sorted
    auto add_edge = [&](EdgeId e) {
        if (!detail::sorted_contains(f, e)) detail::sorted_insert(f, e);
    };

    for (std::size_t idx = 0; idx < path.size(); ++idx) {
        const Bowtie& bt = bg.bowties[static_cast<std::size_t>(path[idx])];
        add_edge(bt.e1);
        add_edge(bt.e2);
        const int m = static_cast<int>(f.size());
        const int span = span_of(g, f);
        if (span > (g.r() - 2) * m + 3)
            throw Error("path walk span invariant broken");  // provably unreachable
        out.path.push_back(path[idx]);
        out.trace.push_back({path[idx], m, span});
        if (m == k) {
            out.status = PathWalkResult::Status::success;
            out.config = make_configuration(g, f);
            return out;
        }
        if (m > k) throw Error("path walk overshot k");  // m rises by <= 1
    }
    return out;  // no prefix reached k edges
}

// ---------------------------------------------------------------------------
// 2. Inductive configurations.

struct InductiveCheckResult {
    bool inductive = false;
    std::vector<EdgeId> peel_order;  // outermost first; replayable certificate
    std::string reason;              // when not inductive
};

namespace detail {

// Degree-1 vertices of edge `t` within the edge set `current`.
inline int private_vertex_count(const LinearRGraph& g, const std::vector<EdgeId>& current,
                                EdgeId t) {
    int count = 0;
    for (VertexId u : g.edge(t)) {
        int degree = 0;
        for (EdgeId e : current)
            if (g.edge_contains(e, u)) ++degree;
        if (degree == 1) ++count;
    }
    return count;
}

inline bool in_some_c3(const LinearRGraph& g, const std::vector<EdgeId>& current,
                       EdgeId t) {
    for (std::size_t i = 0; i < current.size(); ++i) {
        if (current[i] == t) continue;
        for (std::size_t j = i + 1; j < current.size(); ++j) {
            if (current[j] == t) continue;
            if (classify_triple(g, t, current[i], current[j]).is_c3) return true;
        }
    }
    return false;
}

}  // namespace detail

// Greedy peel: while more than two edges remain, remove the smallest-id edge
// other than t0 that lies in a C3 of the current level and has exactly r-2
// degree-1 vertices; succeed if the remainder is a bowtie containing t0.
// Level spans are checked against (r-2)i + 3 throughout.
inline InductiveCheckResult inductive_check(const ClassView& view,
                                            const std::vector<EdgeId>& edge_ids,
                                            EdgeId t0) {
    const LinearRGraph& g = view.graph();
    InductiveCheckResult out;

    std::vector<EdgeId> current = edge_ids;
    std::sort(current.begin(), current.end());
    if (std::adjacent_find(current.begin(), current.end()) != current.end()) {
        out.reason = "repeated edge id";
        return out;
    }
    if (!std::binary_search(current.begin(), current.end(), t0)) {
        out.reason = "root edge not in the set";
        return out;
    }
    for (EdgeId e : current)
        if (!view.contains(e)) {
            out.reason = "edge " + std::to_string(e) + " not in the class";
            return out;
        }
    if (current.size() < 2) {
        out.reason = "fewer than two edges";
        return out;
    }

    while (true) {
        const int i = static_cast<int>(current.size());
        const int span = span_of(g, current);
        if (span > (g.r() - 2) * i + 3) {
            out.reason = "level " + std::to_string(i) + " spans " + std::to_string(span) +
                         " > " + std::to_string((g.r() - 2) * i + 3);
            return out;
        }
        if (i == 2) break;
        EdgeId peeled = -1;
        for (EdgeId t : current) {
            if (t == t0) continue;
            if (detail::private_vertex_count(g, current, t) != g.r() - 2) continue;
            if (!detail::in_some_c3(g, current, t)) continue;
            peeled = t;
            break;
        }
        if (peeled < 0) {
            out.reason = "no peelable edge among " + std::to_string(i);
            return out;
        }
        out.peel_order.push_back(peeled);
        current.erase(std::find(current.begin(), current.end(), peeled));
    }

    auto meet = edge_intersection(g, current[0], current[1]);
    if (meet.size() != 1) {
        out.reason = "final pair is not a bowtie";
        return out;
    }
    out.inductive = true;
    return out;
}

// Replays a peel certificate non-greedily: each listed edge must be peelable
// at its level, and the remainder must be a bowtie containing t0.
inline bool replay_peel_certificate(const ClassView& view,
                                    const std::vector<EdgeId>& edge_ids, EdgeId t0,
                                    const std::vector<EdgeId>& peel_order) {
    const LinearRGraph& g = view.graph();
    std::vector<EdgeId> current = edge_ids;
    std::sort(current.begin(), current.end());
    for (EdgeId t : peel_order) {
        if (t == t0) return false;
        auto it = std::find(current.begin(), current.end(), t);
        if (it == current.end()) return false;
        if (detail::private_vertex_count(g, current, t) != g.r() - 2) return false;
        if (!detail::in_some_c3(g, current, t)) return false;
        current.erase(it);
    }
    if (current.size() != 2) return false;
    if (current[0] != t0 && current[1] != t0) return false;
    return edge_intersection(g, current[0], current[1]).size() == 1;
}

// ---------------------------------------------------------------------------
// 3. The induction engine.

struct ExtractionState {
    enum class Type { one, two };
    Type type = Type::one;
    int i = 0;                    // |F|
    std::vector<EdgeId> f_edges;  // F, ascending

    // Type 2 fields:
    std::vector<EdgeId> e_sub;      // E, ascending (subset of F)
    int j = 0;                      // |E|
    int comp_id = -1;               // working component C
    std::vector<int> comp_bowties;  // V(C), ascending
    std::vector<int> a_set;         // A, ascending bowtie ids
};

struct StepRecord {
    int case_tag = 0;  // 1, 21, 22
    EdgeId t = -1;     // edge added to F
    // Case 2 details: b = {t, q1} outside A, b' = {q1, q2} inside A.
    int b = -1, b_prime = -1;
    EdgeId q1 = -1, q2 = -1;
    VertexId w1 = -1, w2 = -1;
    std::vector<int> a1_added, a2_added;  // Case 2.2: A'_1 and A'_2, ascending
};

struct StepOutcome {
    enum class Status { ok, stuck_no_partner, stuck_no_boundary, invariant_broken };
    Status status = Status::ok;
    ExtractionState next;
    StepRecord record;
    std::string detail;
};

// One step of the induction.  Deterministic: every scan is ascending and the
// first admissible object is taken.
inline StepOutcome induction_step(const ClassView& view, const BowtieGraph& bg,
                                  const ComponentReport& rep, const Anchor& anchor,
                                  const ExtractionState& state) {
    const LinearRGraph& g = view.graph();
    StepOutcome out;

    if (state.type == ExtractionState::Type::one) {
        // Case 1: adopt a partner edge meeting V(F) exactly in u0.
        const std::vector<VertexId> vf = vertex_union(g, state.f_edges);
        for (std::size_t l = 0; l < anchor.partners.size(); ++l) {
            const EdgeId t = anchor.partners[l];
            if (detail::sorted_contains(state.f_edges, t)) continue;
            std::vector<VertexId> meet;
            for (VertexId u : g.edge(t))
                if (std::binary_search(vf.begin(), vf.end(), u)) meet.push_back(u);
            if (meet.size() != 1 || meet[0] != anchor.u0) continue;

            out.record.case_tag = 1;
            out.record.t = t;
            out.next = ExtractionState{};
            out.next.type = ExtractionState::Type::two;
            out.next.f_edges = state.f_edges;
            detail::sorted_insert(out.next.f_edges, t);
            out.next.i = state.i + 1;
            out.next.e_sub = {std::min(anchor.t0, t), std::max(anchor.t0, t)};
            out.next.j = 2;
            out.next.comp_id = anchor.partner_comps[l];
            out.next.comp_bowties =
                rep.components[static_cast<std::size_t>(out.next.comp_id)].bowtie_ids;
            out.next.a_set = {anchor.partner_bowties[l]};
            return out;
        }
        out.status = StepOutcome::Status::stuck_no_partner;
        out.detail = "no partner meets F in exactly {u0}";
        return out;
    }

    // Case 2: take the smallest boundary bowtie of A in its component.
    int b = -1, b_prime = -1;
    for (int candidate : state.comp_bowties) {
        if (detail::sorted_contains(state.a_set, candidate)) continue;
        for (int nb : bg.adj[static_cast<std::size_t>(candidate)]) {
            if (detail::sorted_contains(state.a_set, nb)) {
                b = candidate;
                b_prime = nb;  // adjacency lists are ascending: smallest in A
                break;
            }
        }
        if (b >= 0) break;
    }
    if (b < 0) {
        out.status = StepOutcome::Status::stuck_no_boundary;
        out.detail = "A swallowed its whole component (|A| = " +
                     std::to_string(state.a_set.size()) + ")";
        return out;
    }

    auto shared = bg.shared_edge(b, b_prime);
    if (!shared) {
        out.status = StepOutcome::Status::invariant_broken;
        out.detail = "adjacent bowties share no unique edge";
        return out;
    }
    const Bowtie& bb = bg.bowties[static_cast<std::size_t>(b)];
    const Bowtie& bp = bg.bowties[static_cast<std::size_t>(b_prime)];
    const EdgeId q1 = *shared;
    const EdgeId t = bb.e1 == q1 ? bb.e2 : bb.e1;
    const EdgeId q2 = bp.e1 == q1 ? bp.e2 : bp.e1;

    if (!detail::sorted_contains(state.e_sub, q1) ||
        !detail::sorted_contains(state.e_sub, q2)) {
        out.status = StepOutcome::Status::invariant_broken;
        out.detail = "boundary bowtie's A-side edges are not both in E";
        return out;
    }
    if (detail::sorted_contains(state.e_sub, t)) {
        out.status = StepOutcome::Status::invariant_broken;
        out.detail = "boundary bowtie lies in A after all";
        return out;
    }
    if (detail::sorted_contains(state.f_edges, t)) {
        out.status = StepOutcome::Status::invariant_broken;
        out.detail = "new edge already lies in F \\ E";
        return out;
    }
    auto c3 = classify_triple(g, t, q1, q2);
    if (!c3.is_c3) {
        out.status = StepOutcome::Status::invariant_broken;
        out.detail = "boundary edge does not close a C3";
        return out;
    }
    const VertexId w1 = edge_intersection(g, t, q1).front();
    const VertexId w2 = edge_intersection(g, t, q2).front();

    out.record.t = t;
    out.record.b = b;
    out.record.b_prime = b_prime;
    out.record.q1 = q1;
    out.record.q2 = q2;
    out.record.w1 = w1;
    out.record.w2 = w2;

    const std::vector<VertexId> vf = vertex_union(g, state.f_edges);
    std::vector<VertexId> t_cap;
    for (VertexId u : g.edge(t))
        if (std::binary_search(vf.begin(), vf.end(), u)) t_cap.push_back(u);
    if (!std::binary_search(t_cap.begin(), t_cap.end(), w1) ||
        !std::binary_search(t_cap.begin(), t_cap.end(), w2)) {
        out.status = StepOutcome::Status::invariant_broken;
        out.detail = "w1/w2 escaped V(F)";
        return out;
    }

    if (t_cap.size() >= 3) {
        // Case 2.1: T leans on F in three or more vertices; adding it keeps
        // a vertex of slack, so the state relaxes to Type 1.
        out.record.case_tag = 21;
        out.next = ExtractionState{};
        out.next.type = ExtractionState::Type::one;
        out.next.f_edges = state.f_edges;
        detail::sorted_insert(out.next.f_edges, t);
        out.next.i = state.i + 1;
        return out;
    }

    // Case 2.2: T touches F exactly in {w1, w2}; E grows by T and A absorbs
    // the bowties {S,T} with S in E through w1 or w2 that lie in C.
    out.record.case_tag = 22;
    out.next = state;
    detail::sorted_insert(out.next.f_edges, t);
    detail::sorted_insert(out.next.e_sub, t);
    out.next.i = state.i + 1;
    out.next.j = state.j + 1;
    for (EdgeId s : state.e_sub) {
        const bool via_w1 = g.edge_contains(s, w1);
        const bool via_w2 = g.edge_contains(s, w2);
        if (!via_w1 && !via_w2) continue;
        auto id = bg.id_of(std::min(s, t), std::max(s, t));
        if (!id || !detail::sorted_contains(state.comp_bowties, *id)) continue;
        (via_w1 ? out.record.a1_added : out.record.a2_added).push_back(*id);
        detail::sorted_insert(out.next.a_set, *id);
    }
    std::sort(out.record.a1_added.begin(), out.record.a1_added.end());
    std::sort(out.record.a2_added.begin(), out.record.a2_added.end());
    return out;
}

// ---------------------------------------------------------------------------
// Full-recompute validation of an engine state (no incremental shortcuts).

struct StateCheck {
    bool ok = true;
    std::string detail;
};

inline StateCheck validate_state(const ClassView& view, const BowtieGraph& bg,
                                 const Anchor& anchor, const ExtractionState& state) {
    const LinearRGraph& g = view.graph();
    auto fail = [](std::string why) {
        return StateCheck{false, std::move(why)};
    };

    if (static_cast<int>(state.f_edges.size()) != state.i)
        return fail("|F| != i");
    if (!std::is_sorted(state.f_edges.begin(), state.f_edges.end()))
        return fail("F not sorted");
    for (EdgeId e : state.f_edges)
        if (!view.contains(e)) return fail("F leaves the colour class");
    if (!detail::sorted_contains(state.f_edges, anchor.t0))
        return fail("root edge left F");

    const int span = span_of(g, state.f_edges);
    if (state.type == ExtractionState::Type::one) {
        if (span > (g.r() - 2) * state.i + 2)
            return fail("Type 1 span " + std::to_string(span) + " > (r-2)i+2");
        return {};
    }

    if (span > (g.r() - 2) * state.i + 3)
        return fail("Type 2 span " + std::to_string(span) + " > (r-2)i+3");
    if (static_cast<int>(state.e_sub.size()) != state.j) return fail("|E| != j");
    for (EdgeId e : state.e_sub)
        if (!detail::sorted_contains(state.f_edges, e)) return fail("E not inside F");

    // (P1) E is inductive with respect to the root edge.
    auto peel = inductive_check(view, state.e_sub, anchor.t0);
    if (!peel.inductive) return fail("(P1) failed: " + peel.reason);

    // (P2) V(E) meets V(F \ E) only inside T0.
    std::vector<EdgeId> rest;
    for (EdgeId e : state.f_edges)
        if (!detail::sorted_contains(state.e_sub, e)) rest.push_back(e);
    const std::vector<VertexId> ve = vertex_union(g, state.e_sub);
    const std::vector<VertexId> vr = vertex_union(g, rest);
    for (VertexId u : ve)
        if (std::binary_search(vr.begin(), vr.end(), u) &&
            !g.edge_contains(anchor.t0, u))
            return fail("(P2) failed: contact vertex " + std::to_string(u) +
                        " outside T0");

    // (P3) A recomputed from scratch, nonempty, sparse.
    std::vector<int> a_recomputed;
    for (int bid : state.comp_bowties) {
        const Bowtie& bt = bg.bowties[static_cast<std::size_t>(bid)];
        if (detail::sorted_contains(state.e_sub, bt.e1) &&
            detail::sorted_contains(state.e_sub, bt.e2))
            a_recomputed.push_back(bid);
    }
    if (a_recomputed != state.a_set) return fail("(P3) failed: A != recomputed A");
    if (state.a_set.empty()) return fail("(P3) failed: A empty");
    const long long inside = detail::edges_within(bg, state.a_set);
    if (2 * inside >= 3LL * (g.r() - 1) * static_cast<long long>(state.a_set.size()))
        return fail("(P3) failed: A not sparse (2e = " + std::to_string(2 * inside) +
                    ", 3(r-1)|A| = " +
                    std::to_string(3LL * (g.r() - 1) * static_cast<long long>(state.a_set.size())) + ")");
    return {};
}

// ---------------------------------------------------------------------------
// The Case 2.2 exact certificate.

struct NiceCountReport {
    bool ok = false;
    long long e_old_a1 = 0;   // e(B[A, A'_1])
    long long e_old_a2 = 0;   // e(B[A, A'_2])
    long long e_a1_a2 = 0;    // e(B[A'_1, A'_2])
    long long vm_overlap = 0; // |V(M1) & V(M2)|
    long long nice_count = 0; // |N|
    bool a1_independent = false;
    bool a2_independent = false;
    bool decomposition_ok = false;
    std::string violation;
};

inline NiceCountReport nice_count_check(const ClassView& view, const BowtieGraph& bg,
                                        const ExtractionState& before,
                                        const StepRecord& record) {
    const LinearRGraph& g = view.graph();
    NiceCountReport rep;
    if (record.case_tag != 22) {
        rep.violation = "not a Case 2.2 record";
        return rep;
    }
    const EdgeId t = record.t;
    const std::vector<int>& a_old = before.a_set;
    const std::vector<int>& a1 = record.a1_added;
    const std::vector<int>& a2 = record.a2_added;

    rep.e_old_a1 = detail::edges_between(bg, a_old, a1);
    rep.e_old_a2 = detail::edges_between(bg, a_old, a2);
    rep.e_a1_a2 = detail::edges_between(bg, a1, a2);
    rep.a1_independent = detail::edges_within(bg, a1) == 0;
    rep.a2_independent = detail::edges_within(bg, a2) == 0;

    // Trimmed edge families M1 = {S \ {w1}} and M2 = {S \ {w2}}.
    auto trimmed_vertices = [&](const std::vector<int>& ids, VertexId w) {
        std::vector<VertexId> out;
        for (int bid : ids) {
            const Bowtie& bt = bg.bowties[static_cast<std::size_t>(bid)];
            const EdgeId s = bt.e1 == t ? bt.e2 : bt.e1;
            for (VertexId u : g.edge(s))
                if (u != w) out.push_back(u);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    const std::vector<VertexId> vm1 = trimmed_vertices(a1, record.w1);
    const std::vector<VertexId> vm2 = trimmed_vertices(a2, record.w2);
    for (VertexId u : vm1)
        if (std::binary_search(vm2.begin(), vm2.end(), u)) ++rep.vm_overlap;

    // Nice C3s {t, s1, s2} with s1 through w1, s2 through w2, all three
    // bowties inside the working component (membership in A / A'_1 / A'_2 is
    // then automatic).  Collect their B-triangles for the decomposition.
    std::vector<std::array<int, 2>> tripartite_edges;  // sorted pairs
    for (int b1 : a1) {
        const Bowtie& x = bg.bowties[static_cast<std::size_t>(b1)];
        const EdgeId s1 = x.e1 == t ? x.e2 : x.e1;
        for (int b2 : a2) {
            const Bowtie& y = bg.bowties[static_cast<std::size_t>(b2)];
            const EdgeId s2 = y.e1 == t ? y.e2 : y.e1;
            if (!classify_triple(g, t, s1, s2).is_c3) continue;
            auto base = bg.id_of(std::min(s1, s2), std::max(s1, s2));
            if (!base || !detail::sorted_contains(a_old, *base)) continue;
            ++rep.nice_count;
            auto add = [&](int p, int q) {
                tripartite_edges.push_back({std::min(p, q), std::max(p, q)});
            };
            add(*base, b1);
            add(*base, b2);
            add(b1, b2);
        }
    }

    // The three cross counts, the family overlap, and |N| must agree; the 3|N|
    // nice-triangle edges must be distinct, real, and cover every cross edge.
    bool counts_ok = rep.e_old_a1 == rep.nice_count && rep.e_old_a2 == rep.nice_count &&
                     rep.e_a1_a2 == rep.nice_count && rep.vm_overlap == rep.nice_count;

    std::sort(tripartite_edges.begin(), tripartite_edges.end());
    const bool distinct =
        std::adjacent_find(tripartite_edges.begin(), tripartite_edges.end()) ==
        tripartite_edges.end();
    bool all_real = true;
    for (const auto& [p, q] : tripartite_edges)
        if (!bg.adjacent(p, q)) all_real = false;
    rep.decomposition_ok =
        distinct && all_real &&
        static_cast<long long>(tripartite_edges.size()) == 3 * rep.nice_count &&
        rep.e_old_a1 + rep.e_old_a2 + rep.e_a1_a2 ==
            static_cast<long long>(tripartite_edges.size());

    rep.ok = counts_ok && rep.a1_independent && rep.a2_independent && rep.decomposition_ok;
    if (!rep.ok && rep.violation.empty()) {
        rep.violation = "counts: e(A,A1') = " + std::to_string(rep.e_old_a1) +
                        ", e(A,A2') = " + std::to_string(rep.e_old_a2) +
                        ", e(A1',A2') = " + std::to_string(rep.e_a1_a2) +
                        ", |V(M1) & V(M2)| = " + std::to_string(rep.vm_overlap) +
                        ", |N| = " + std::to_string(rep.nice_count);
    }
    return rep;
}

// ---------------------------------------------------------------------------

struct InductionOptions {
    bool checked = true;        // full-recompute validation after every step
    bool record_states = false; // keep the whole state trace
};

struct InductionResult {
    enum class Status {
        success,
        stuck_no_partner,
        stuck_no_boundary,
        invariant_broken,
        crucial_violation,
    };
    Status status = Status::success;
    Configuration config;  // on success
    ExtractionState final_state;
    std::vector<StepRecord> records;
    std::vector<ExtractionState> states;  // when requested
    std::vector<NiceCountReport> nice_checks;
    std::string detail;
};

inline const char* induction_status_name(InductionResult::Status s) {
    switch (s) {
        case InductionResult::Status::success: return "success";
        case InductionResult::Status::stuck_no_partner: return "stuck_no_partner";
        case InductionResult::Status::stuck_no_boundary: return "stuck_no_boundary";
        case InductionResult::Status::invariant_broken: return "invariant_broken";
        case InductionResult::Status::crucial_violation: return "crucial_violation";
    }
    return "?";
}

// Runs the induction from F = {T0} up to k edges.  Every step is validated
// by full recompute when opts.checked (the default), and every Case 2.2
// transition must pass the exact nice-count certificate.
inline InductionResult run_induction(const ClassView& view, const BowtieGraph& bg,
                                     const ComponentReport& rep, const Anchor& anchor,
                                     int k, InductionOptions opts = {}) {
    const LinearRGraph& g = view.graph();
    if (k < 2) throw Error("induction needs k >= 2");
    if (anchor.t0 < 0) throw Error("induction needs an anchor with a root edge");

    InductionResult out;
    ExtractionState state;
    state.type = ExtractionState::Type::one;
    state.i = 1;
    state.f_edges = {anchor.t0};
    if (opts.record_states) out.states.push_back(state);

    while (state.i < k) {
        StepOutcome step = induction_step(view, bg, rep, anchor, state);
        switch (step.status) {
            case StepOutcome::Status::ok:
                break;
            case StepOutcome::Status::stuck_no_partner:
                out.status = InductionResult::Status::stuck_no_partner;
                out.final_state = state;
                out.detail = step.detail;
                return out;
            case StepOutcome::Status::stuck_no_boundary:
                out.status = InductionResult::Status::stuck_no_boundary;
                out.final_state = state;
                out.detail = step.detail;
                return out;
            case StepOutcome::Status::invariant_broken:
                out.status = InductionResult::Status::invariant_broken;
                out.final_state = state;
                out.detail = step.detail;
                return out;
        }

        if (opts.checked) {
            StateCheck check = validate_state(view, bg, anchor, step.next);
            if (!check.ok) {
                out.status = InductionResult::Status::invariant_broken;
                out.final_state = step.next;
                out.records.push_back(step.record);
                out.detail = check.detail;
                return out;
            }
            if (step.record.case_tag == 22) {
                NiceCountReport nice = nice_count_check(view, bg, state, step.record);
                out.nice_checks.push_back(nice);
                if (!nice.ok) {
                    out.status = InductionResult::Status::crucial_violation;
                    out.final_state = step.next;
                    out.records.push_back(step.record);
                    out.detail = nice.violation;
                    return out;
                }
            }
        }

        state = std::move(step.next);
        out.records.push_back(step.record);
        if (opts.record_states) out.states.push_back(state);
    }

    out.status = InductionResult::Status::success;
    out.final_state = state;
    out.config = make_configuration(g, state.f_edges);
    if (out.config.span > (g.r() - 2) * k + 3)
        throw Error("induction output span exceeds (r-2)k+3");  // unreachable
    return out;
}

// Seeded anchor sampling (for randomized robustness runs): a uniformly random
// eligible bowtie picks u0 and T0, partners then follow the deterministic
// rule.  Returns found = 0 when no dense component exists.
inline AnchorResult random_anchor(const BowtieGraph& bg, const ComponentReport& rep,
                                  std::uint64_t seed, int required = 1,
                                  int size_cap = -1) {
    AnchorResult out;
    std::vector<int> eligible;
    for (int b = 0; b < bg.size(); ++b) {
        const Component& c =
            rep.components[static_cast<std::size_t>(rep.component_of[static_cast<std::size_t>(b)])];
        if (c.dense && (size_cap < 0 || c.size() <= size_cap)) eligible.push_back(b);
    }
    if (eligible.empty()) return out;

    auto rng = make_rng(seed);
    const int pick =
        eligible[static_cast<std::size_t>(uniform_below(rng, eligible.size()))];
    const Bowtie& bt = bg.bowties[static_cast<std::size_t>(pick)];
    out.anchor.u0 = bt.centre;
    out.anchor.t0 = uniform_below(rng, 2) == 0 ? bt.e1 : bt.e2;

    for (int b : bg.centre_groups[static_cast<std::size_t>(out.anchor.u0)]) {
        const int comp = rep.component_of[static_cast<std::size_t>(b)];
        const Component& c = rep.components[static_cast<std::size_t>(comp)];
        if (!c.dense || (size_cap >= 0 && c.size() > size_cap)) continue;
        const Bowtie& cand = bg.bowties[static_cast<std::size_t>(b)];
        if (cand.e1 != out.anchor.t0 && cand.e2 != out.anchor.t0) continue;
        if (std::find(out.anchor.partner_comps.begin(), out.anchor.partner_comps.end(),
                      comp) != out.anchor.partner_comps.end())
            continue;
        out.anchor.partners.push_back(cand.e1 == out.anchor.t0 ? cand.e2 : cand.e1);
        out.anchor.partner_comps.push_back(comp);
        out.anchor.partner_bowties.push_back(b);
    }
    out.found = static_cast<int>(out.anchor.partners.size());
    out.ok = out.found >= required;
    return out;
}

}  // namespace bowtie
