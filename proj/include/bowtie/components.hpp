#pragma once

// Connected components of B and the anchor for the induction engine.
//
// A component C is dense when its average degree reaches 3(r-1), i.e.
// 2 e(C) >= 3(r-1) |C| — compared exactly in integers.  Dense components are
// where long structure lives; the anchor picks, inside the dense part, a
// centre vertex u0 with the most bowties, a hyperedge T0 through u0 lying in
// the most of them, and partner edges T with {T0,T} centred at u0 — at most
// one partner per distinct dense component, so each partner opens a fresh
// component for the induction to grow into.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bowtie/bowtie_graph.hpp"

namespace bowtie {

namespace detail {

// Union-find over bowtie ids.
class DisjointSets {
  public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)]) ++rank_[static_cast<std::size_t>(a)];
    }

  private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

}  // namespace detail

struct Component {
    std::vector<int> bowtie_ids;  // ascending
    long long edge_count = 0;
    bool dense = false;  // 2 e(C) >= 3(r-1) |C|, exact

    int size() const { return static_cast<int>(bowtie_ids.size()); }
    double avg_degree() const {
        return bowtie_ids.empty()
                   ? 0.0
                   : 2.0 * static_cast<double>(edge_count) / static_cast<double>(bowtie_ids.size());
    }
};

struct ComponentReport {
    std::vector<Component> components;  // ordered by smallest member id
    std::vector<int> component_of;      // bowtie id -> component index
    int dense_count = 0;
    int largest_size = 0;
    double avg_degree_overall = 0.0;
};

inline ComponentReport components(const BowtieGraph& bg) {
    ComponentReport rep;
    rep.component_of.assign(static_cast<std::size_t>(bg.size()), -1);

    detail::DisjointSets ds(bg.size());
    for (int a = 0; a < bg.size(); ++a)
        for (int b : bg.adj[static_cast<std::size_t>(a)])
            if (b > a) ds.unite(a, b);

    // Visiting ids ascending numbers components by smallest member.
    std::vector<int> label(static_cast<std::size_t>(bg.size()), -1);
    for (int b = 0; b < bg.size(); ++b) {
        int root = ds.find(b);
        if (label[static_cast<std::size_t>(root)] == -1) {
            label[static_cast<std::size_t>(root)] = static_cast<int>(rep.components.size());
            rep.components.emplace_back();
        }
        int comp = label[static_cast<std::size_t>(root)];
        rep.component_of[static_cast<std::size_t>(b)] = comp;
        rep.components[static_cast<std::size_t>(comp)].bowtie_ids.push_back(b);
        rep.components[static_cast<std::size_t>(comp)].edge_count += bg.degree(b);
    }

    const long long threshold = 3LL * (bg.r - 1);
    for (auto& comp : rep.components) {
        comp.edge_count /= 2;
        comp.dense = 2 * comp.edge_count >= threshold * comp.size();
        rep.dense_count += comp.dense ? 1 : 0;
        rep.largest_size = std::max(rep.largest_size, comp.size());
    }
    if (bg.size() > 0)
        rep.avg_degree_overall =
            2.0 * static_cast<double>(bg.edge_count()) / static_cast<double>(bg.size());
    return rep;
}

// ---------------------------------------------------------------------------

struct Anchor {
    VertexId u0 = -1;
    EdgeId t0 = -1;
    std::vector<EdgeId> partners;      // edges T with bowtie {T0,T} centred at u0
    std::vector<int> partner_comps;    // component of {T0, partners[i]}, distinct
    std::vector<int> partner_bowties;  // bowtie id of {T0, partners[i]}
};

struct AnchorResult {
    bool ok = false;
    int found = 0;  // partners available (InsufficientAnchors carries this)
    Anchor anchor;
};

// Constructive averaging choice, all ties broken by smallest id:
//   u0 maximizes the number of its bowties inside dense components of size at
//   most size_cap; T0 maximizes, over edges through u0, the number of those
//   bowties containing it; partners keep the first edge per distinct dense
//   component.  ok iff at least `required` partners were found.
inline AnchorResult select_anchor(const BowtieGraph& bg, const ComponentReport& rep,
                                  int required, int size_cap = -1) {
    AnchorResult out;

    auto eligible = [&](int bowtie_id) {
        int comp = rep.component_of[static_cast<std::size_t>(bowtie_id)];
        const Component& c = rep.components[static_cast<std::size_t>(comp)];
        if (!c.dense) return false;
        return size_cap < 0 || c.size() <= size_cap;
    };

    VertexId u0 = -1;
    long long best = 0;
    for (VertexId u = 0; u < bg.n; ++u) {
        long long count = 0;
        for (int b : bg.centre_groups[static_cast<std::size_t>(u)])
            if (eligible(b)) ++count;
        if (count > best) {
            best = count;
            u0 = u;
        }
    }
    if (u0 < 0) {
        out.found = 0;
        return out;  // no bowtie lives in an eligible dense component
    }

    // Count, per hyperedge through u0, the eligible bowties containing it;
    // the ordered map makes the ascending tie-break scan natural.
    std::map<EdgeId, int> edge_hits;
    for (int b : bg.centre_groups[static_cast<std::size_t>(u0)]) {
        if (!eligible(b)) continue;
        const Bowtie& bt = bg.bowties[static_cast<std::size_t>(b)];
        ++edge_hits[bt.e1];
        ++edge_hits[bt.e2];
    }
    EdgeId t0 = -1;
    int best_hits = 0;
    for (const auto& [e, hits] : edge_hits) {
        if (hits > best_hits) {  // ascending scan: ties keep the smaller id
            best_hits = hits;
            t0 = e;
        }
    }

    out.anchor.u0 = u0;
    out.anchor.t0 = t0;
    // Partners ascending by edge id, at most one per distinct component.
    // Centre-group bowties come in lexicographic edge-pair order; restricted
    // to pairs containing t0 that order is ascending in the other edge, so
    // this scan visits partners smallest-first.
    for (int b : bg.centre_groups[static_cast<std::size_t>(u0)]) {
        if (!eligible(b)) continue;
        const Bowtie& bt = bg.bowties[static_cast<std::size_t>(b)];
        if (bt.e1 != t0 && bt.e2 != t0) continue;
        EdgeId partner = bt.e1 == t0 ? bt.e2 : bt.e1;
        int comp = rep.component_of[static_cast<std::size_t>(b)];
        if (std::find(out.anchor.partner_comps.begin(), out.anchor.partner_comps.end(),
                      comp) != out.anchor.partner_comps.end())
            continue;
        out.anchor.partners.push_back(partner);
        out.anchor.partner_comps.push_back(comp);
        out.anchor.partner_bowties.push_back(b);
    }

    out.found = static_cast<int>(out.anchor.partners.size());
    out.ok = out.found >= required;
    return out;
}

}  // namespace bowtie
