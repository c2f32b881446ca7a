#pragma once

// Brute-force oracle: exhaustive (v,k)-configuration search, used to
// cross-check every fast path and every extraction output.
//
// The search walks k-subsets of the candidate edge list in increasing
// edge-id order (so enumeration order — and the find_one witness — is the
// lexicographic order on id tuples), tracks the span incrementally, and
// prunes any partial subset already spanning more than v vertices.  Work is
// metered in "partial subsets examined" (one per extension step); crossing
// the budget aborts the search and flags the result.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bowtie/colouring.hpp"
#include "bowtie/core.hpp"

namespace bowtie {

enum class OracleMode { count, find_one, enumerate_all };

inline const char* oracle_mode_name(OracleMode m) {
    switch (m) {
        case OracleMode::count: return "count";
        case OracleMode::find_one: return "find_one";
        case OracleMode::enumerate_all: return "enumerate_all";
    }
    return "?";
}

struct OracleQuery {
    int v = 0;
    int k = 0;
    std::optional<int> colour;  // restrict candidates to one class
    OracleMode mode = OracleMode::count;
    long long budget = 100'000'000;  // partial subsets examined
};

struct OracleResult {
    bool budget_exceeded = false;
    long long examined = 0;
    long long count = 0;                            // count mode (and others)
    std::optional<std::vector<EdgeId>> witness;     // find_one: lex-least
    std::vector<std::vector<EdgeId>> witnesses;     // enumerate_all: lex order
};

namespace detail {

struct OracleShared {
    std::atomic<long long> examined{0};
    std::atomic<bool> exceeded{false};
    std::atomic<int> best_first{static_cast<int>(1e9)};  // find_one early cut
};

class OracleWorker {
  public:
    OracleWorker(const LinearRGraph& g, const std::vector<EdgeId>& candidates,
                 const OracleQuery& q, OracleShared& shared)
        : g_(g),
          candidates_(candidates),
          q_(q),
          shared_(shared),
          vertex_uses_(static_cast<std::size_t>(g.n()), 0) {}

    long long count = 0;
    // Per first-edge-index results, merged by the caller in index order.
    std::vector<std::pair<std::size_t, std::vector<std::vector<EdgeId>>>> found;

    void run_subtree(std::size_t first_index) {
        if (q_.mode == OracleMode::find_one &&
            static_cast<long long>(first_index) >
                static_cast<long long>(shared_.best_first.load(std::memory_order_relaxed)))
            return;
        chosen_.clear();
        span_ = 0;
        first_index_ = first_index;
        subtree_witnesses_.clear();
        extend(first_index);
        if (!subtree_witnesses_.empty())
            found.emplace_back(first_index, std::move(subtree_witnesses_));
    }

  private:
    bool budget_step() {
        const long long seen = shared_.examined.fetch_add(1, std::memory_order_relaxed) + 1;
        if (seen > q_.budget) {
            shared_.exceeded.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    void push_edge(EdgeId e) {
        for (VertexId u : g_.edge(e))
            if (vertex_uses_[static_cast<std::size_t>(u)]++ == 0) ++span_;
        chosen_.push_back(e);
    }

    void pop_edge() {
        EdgeId e = chosen_.back();
        chosen_.pop_back();
        for (VertexId u : g_.edge(e))
            if (--vertex_uses_[static_cast<std::size_t>(u)] == 0) --span_;
    }

    // Extends the current partial subset with candidates_[index], then
    // recurses over later candidates.  Aborts on budget exhaustion or, in
    // find_one mode, once this subtree has a witness.
    bool extend(std::size_t index) {
        if (shared_.exceeded.load(std::memory_order_relaxed)) return false;
        if (!budget_step()) return false;
        push_edge(candidates_[index]);
        bool keep_going = true;
        if (span_ <= q_.v) {
            if (static_cast<int>(chosen_.size()) == q_.k) {
                ++count;
                if (q_.mode != OracleMode::count) {
                    subtree_witnesses_.push_back(chosen_);
                    if (q_.mode == OracleMode::find_one) {
                        // The ordered DFS makes this the subtree's lex-least
                        // witness; publish the subtree index so later
                        // subtrees can be skipped.
                        int first = static_cast<int>(first_index_);
                        int prev = shared_.best_first.load(std::memory_order_relaxed);
                        while (first < prev &&
                               !shared_.best_first.compare_exchange_weak(prev, first)) {
                        }
                        keep_going = false;
                    }
                }
            } else {
                const std::size_t remaining_needed =
                    static_cast<std::size_t>(q_.k) - chosen_.size();
                for (std::size_t next = index + 1;
                     next + remaining_needed - 1 < candidates_.size(); ++next) {
                    if (!extend(next)) {
                        keep_going = false;
                        break;
                    }
                }
            }
        }
        pop_edge();
        return keep_going;
    }

    const LinearRGraph& g_;
    const std::vector<EdgeId>& candidates_;
    const OracleQuery& q_;
    OracleShared& shared_;

    std::vector<int> vertex_uses_;
    std::vector<EdgeId> chosen_;
    int span_ = 0;
    std::size_t first_index_ = 0;
    std::vector<std::vector<EdgeId>> subtree_witnesses_;
};

}  // namespace detail

inline OracleResult oracle_search(const LinearRGraph& g, const Colouring* colouring,
                                  const OracleQuery& q, int threads = 1) {
    if (q.k < 0) throw Error("oracle k must be nonnegative");
    std::vector<EdgeId> candidates;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!q.colour || !colouring || colouring->colour_of(e) == *q.colour)
            candidates.push_back(e);

    OracleResult out;
    if (q.k == 0) {
        out.count = 1;  // the empty subset spans 0 <= v vertices
        if (q.mode != OracleMode::count) out.witnesses.push_back({});
        if (q.mode == OracleMode::find_one) out.witness = std::vector<EdgeId>{};
        return out;
    }
    if (static_cast<std::size_t>(q.k) > candidates.size()) return out;

    detail::OracleShared shared;
    threads = std::max(1, threads);
    const std::size_t first_limit = candidates.size() - static_cast<std::size_t>(q.k) + 1;
    std::vector<detail::OracleWorker> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        workers.emplace_back(g, candidates, q, shared);

    if (threads == 1) {
        for (std::size_t i = 0; i < first_limit; ++i) workers[0].run_subtree(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = static_cast<std::size_t>(t); i < first_limit;
                     i += static_cast<std::size_t>(threads))
                    workers[static_cast<std::size_t>(t)].run_subtree(i);
            });
        for (auto& th : pool) th.join();
    }

    out.budget_exceeded = shared.exceeded.load();
    out.examined = std::min(shared.examined.load(), q.budget);
    for (auto& w : workers) out.count += w.count;

    if (q.mode != OracleMode::count) {
        std::vector<std::pair<std::size_t, std::vector<std::vector<EdgeId>>>> merged;
        for (auto& w : workers)
            for (auto& entry : w.found) merged.push_back(std::move(entry));
        std::sort(merged.begin(), merged.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [index, lists] : merged)
            for (auto& witness : lists) out.witnesses.push_back(std::move(witness));
        if (q.mode == OracleMode::find_one) {
            if (!out.witnesses.empty()) {
                out.witness = *std::min_element(out.witnesses.begin(), out.witnesses.end());
                out.witnesses.clear();
            }
            out.count = out.witness ? 1 : 0;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

struct VerifyReport {
    struct Clause {
        std::string name;
        bool ok;
        std::string detail;
    };
    bool pass = false;
    std::vector<Clause> clauses;
};

// Checks that `edge_ids` is a monochromatic (v,k)-configuration of g: k
// distinct valid edges, span at most v, all in one colour class (when a
// colouring is given).
inline VerifyReport verify_configuration(const LinearRGraph& g, const Colouring* colouring,
                                         const std::vector<EdgeId>& edge_ids, int v, int k) {
    VerifyReport rep;

    const bool count_ok = static_cast<int>(edge_ids.size()) == k;
    rep.clauses.push_back({"edge_count", count_ok,
                           std::to_string(edge_ids.size()) + " of " + std::to_string(k)});

    bool ids_ok = true;
    std::string ids_detail = "all distinct, in range";
    std::vector<EdgeId> sorted = edge_ids;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.m()) {
            ids_ok = false;
            ids_detail = "edge id " + std::to_string(sorted[i]) + " out of range";
            break;
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            ids_ok = false;
            ids_detail = "edge id " + std::to_string(sorted[i]) + " repeated";
            break;
        }
    }
    rep.clauses.push_back({"ids_valid", ids_ok, ids_detail});

    bool span_ok = false;
    int span = 0;
    if (ids_ok) {
        span = span_of(g, edge_ids);
        span_ok = span <= v;
    }
    rep.clauses.push_back(
        {"span", span_ok, "spans " + std::to_string(span) + ", bound " + std::to_string(v)});

    bool mono_ok = true;
    std::string mono_detail = "single class";
    if (colouring && ids_ok && !edge_ids.empty()) {
        const int colour = colouring->colour_of(edge_ids.front());
        for (EdgeId e : edge_ids)
            if (colouring->colour_of(e) != colour) {
                mono_ok = false;
                mono_detail = "edges " + std::to_string(edge_ids.front()) + " and " +
                              std::to_string(e) + " differ in colour";
                break;
            }
        if (mono_ok) mono_detail = "all colour " + std::to_string(colour);
    }
    rep.clauses.push_back({"monochromatic", mono_ok, mono_detail});

    rep.pass = count_ok && ids_ok && span_ok && mono_ok;
    return rep;
}

}  // namespace bowtie
