#include <catch2/catch_amalgamated.hpp>

#include "bowtie/bowtie.hpp"
#include "test_support.hpp"

using namespace bowtie;

namespace {

BowtieGraph whole_bowtie_graph(const LinearRGraph& g) {
    return build_bowtie_graph(ClassView::whole(g));
}

}  // namespace

TEST_CASE("one dense component on the 7-point instance", "[components]") {
    LinearRGraph g = make_fano();
    BowtieGraph bg = whole_bowtie_graph(g);
    ComponentReport rep = components(bg);

    REQUIRE(rep.components.size() == 1);
    const Component& c = rep.components.front();
    REQUIRE(c.size() == 21);
    REQUIRE(c.edge_count == 84);
    REQUIRE(c.avg_degree() == Catch::Approx(8.0));
    // Density threshold 3(r-1) = 6 <= 8: dense.
    REQUIRE(c.dense);
    REQUIRE(rep.dense_count == 1);
    REQUIRE(rep.largest_size == 21);
    for (int b = 0; b < bg.size(); ++b) REQUIRE(rep.component_of[static_cast<std::size_t>(b)] == 0);
}

TEST_CASE("density is an exact threshold", "[components]") {
    // AG(2,2) is a linear 2-graph (K4 decomposed into 3 perfect matchings...
    // actually its 6 lines of size 2 are exactly the edges of K4).  Each of
    // the 4 points lies on 3 lines: 4 * C(3,2) = 12 bowties.  With r = 2 the
    // density threshold is 3(r-1) = 3.
    LinearRGraph g = make_affine_plane(2);
    REQUIRE(g.r() == 2);
    BowtieGraph bg = whole_bowtie_graph(g);
    REQUIRE(bg.size() == 12);

    ComponentReport rep = components(bg);
    for (const Component& c : rep.components) {
        INFO("component size " << c.size() << " edges " << c.edge_count);
        // Exact comparison: dense iff 2 e(C) >= 3 (r-1) |C|.
        REQUIRE(c.dense == (2 * c.edge_count >= 3LL * (bg.r - 1) * c.size()));
    }
}

TEST_CASE("glued instance: two dense components plus isolated bowties",
          "[components]") {
    LinearRGraph g = testsupport::glued_fanos();
    BowtieGraph bg = whole_bowtie_graph(g);

    // 21 bowties inside each copy, plus cross bowties pairing a private line
    // of one copy with one of the other through a shared vertex.
    REQUIRE(bg.size() == 54);

    ComponentReport rep = components(bg);
    REQUIRE(rep.dense_count == 2);

    int big = 0, isolated = 0;
    for (const Component& c : rep.components) {
        if (c.size() == 21) {
            ++big;
            REQUIRE(c.dense);
        } else {
            REQUIRE(c.size() == 1);
            REQUIRE_FALSE(c.dense);
            ++isolated;
        }
    }
    REQUIRE(big == 2);
    REQUIRE(isolated == 12);

    SECTION("components are ordered by smallest bowtie id") {
        std::vector<int> firsts;
        for (const Component& c : rep.components) firsts.push_back(c.bowtie_ids.front());
        REQUIRE(std::is_sorted(firsts.begin(), firsts.end()));
    }
}

TEST_CASE("anchor selection on the glued instance", "[components]") {
    LinearRGraph g = testsupport::glued_fanos();
    BowtieGraph bg = whole_bowtie_graph(g);
    ComponentReport rep = components(bg);

    SECTION("two partners across distinct dense components") {
        AnchorResult res = select_anchor(bg, rep, 2);
        REQUIRE(res.ok);
        REQUIRE(res.found >= 2);
        // The shared line {0,1,2} is edge 0; its copies' lines through the
        // anchor vertex land in different components.
        REQUIRE(res.anchor.t0 == 0);
        REQUIRE(res.anchor.partners.size() == 2);
        REQUIRE(res.anchor.partner_comps.size() == 2);
        REQUIRE(res.anchor.partner_comps[0] != res.anchor.partner_comps[1]);

        // Each partner pairs with t0 in a real bowtie of the stated component.
        for (std::size_t i = 0; i < res.anchor.partners.size(); ++i) {
            const int b = res.anchor.partner_bowties[i];
            const Bowtie& bt = bg.bowties[static_cast<std::size_t>(b)];
            REQUIRE(((bt.e1 == res.anchor.t0) || (bt.e2 == res.anchor.t0)));
            REQUIRE(rep.component_of[static_cast<std::size_t>(b)] ==
                    res.anchor.partner_comps[i]);
        }
    }

    SECTION("asking for more partners than exist fails with the count") {
        AnchorResult res = select_anchor(bg, rep, 3);
        REQUIRE_FALSE(res.ok);
        REQUIRE(res.found == 2);
    }

    SECTION("size cap can exclude the dense components") {
        AnchorResult res = select_anchor(bg, rep, 1, 5);
        REQUIRE_FALSE(res.ok);  // dense components have 21 > 5 bowties
        REQUIRE(res.found == 0);
    }
}

TEST_CASE("anchor on a single-component instance", "[components]") {
    LinearRGraph g = make_fano();
    BowtieGraph bg = whole_bowtie_graph(g);
    ComponentReport rep = components(bg);

    AnchorResult res = select_anchor(bg, rep, 1);
    REQUIRE(res.ok);
    // Ties everywhere: the smallest vertex and edge win.
    REQUIRE(res.anchor.u0 == 0);
    REQUIRE(res.anchor.t0 == 0);
    REQUIRE(res.anchor.partners.size() == 1);

    // Only one dense component: no second partner possible.
    REQUIRE_FALSE(select_anchor(bg, rep, 2).ok);
}

TEST_CASE("no dense components, no anchor", "[components]") {
    // A single bowtie: B has one vertex, no edges; avg degree 0 < 3(r-1).
    LinearRGraph g = build_linear_rgraph(3, 5, {{0, 1, 2}, {0, 3, 4}});
    BowtieGraph bg = whole_bowtie_graph(g);
    REQUIRE(bg.size() == 1);
    ComponentReport rep = components(bg);
    REQUIRE(rep.dense_count == 0);
    AnchorResult res = select_anchor(bg, rep, 1);
    REQUIRE_FALSE(res.ok);
    REQUIRE(res.found == 0);
}

TEST_CASE("empty bowtie graph", "[components]") {
    // Two disjoint edges: no bowties at all.
    LinearRGraph g = build_linear_rgraph(3, 6, {{0, 1, 2}, {3, 4, 5}});
    BowtieGraph bg = whole_bowtie_graph(g);
    REQUIRE(bg.size() == 0);
    ComponentReport rep = components(bg);
    REQUIRE(rep.components.empty());
    REQUIRE_FALSE(select_anchor(bg, rep, 1).ok);
}
