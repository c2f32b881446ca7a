#include <catch2/catch_amalgamated.hpp>

#include "bowtie/bowtie.hpp"
#include "test_support.hpp"

using namespace bowtie;

TEST_CASE("colouring strategies", "[colouring]") {
    LinearRGraph g = make_fano();

    SECTION("round robin cycles through colours") {
        Colouring c = colour_edges(g, 3, ColourStrategy::round_robin, 0);
        REQUIRE(c.assignment == std::vector<int>{0, 1, 2, 0, 1, 2, 0});
    }

    SECTION("uniform random is seeded and in range") {
        Colouring a = colour_edges(g, 2, ColourStrategy::uniform_random, 11);
        Colouring b = colour_edges(g, 2, ColourStrategy::uniform_random, 11);
        REQUIRE(a.assignment == b.assignment);
        for (int v : a.assignment) REQUIRE((v == 0 || v == 1));
    }

    SECTION("file strategy validates") {
        std::vector<int> values{0, 1, 0, 1, 0, 1, 0};
        Colouring c = colour_edges(g, 2, ColourStrategy::by_file, 0, &values);
        REQUIRE(c.assignment == values);
        REQUIRE_THROWS_AS(colour_edges(g, 2, ColourStrategy::by_file, 0, nullptr),
                          BadColourFileError);
    }

    SECTION("single colour paints everything 0") {
        Colouring c = colour_edges(g, 1, ColourStrategy::uniform_random, 5);
        for (int v : c.assignment) REQUIRE(v == 0);
    }
}

TEST_CASE("class view restricts the host graph", "[colouring]") {
    LinearRGraph g = make_fano();
    Colouring c = colour_edges(g, 2, ColourStrategy::round_robin, 0);
    ClassView view(g, &c, 0);  // edges 0, 2, 4, 6

    REQUIRE(view.edge_ids() == std::vector<EdgeId>{0, 2, 4, 6});
    REQUIRE(view.contains(0));
    REQUIRE_FALSE(view.contains(1));

    // e0={0,1,2}, e2={0,5,6}, e4={1,4,6}, e6={2,4,5}
    REQUIRE(view.class_degree(0) == 2);
    REQUIRE(view.class_degree(3) == 0);
    REQUIRE(view.pair_edge(0, 1).has_value());   // host edge 0 is in class
    REQUIRE_FALSE(view.pair_edge(0, 3).has_value());  // host edge 1 is not

    ClassView whole = ClassView::whole(g);
    REQUIRE(whole.edge_ids().size() == 7);
    REQUIRE(whole.class_degree(0) == 3);
}

TEST_CASE("class statistics on K6", "[colouring]") {
    LinearRGraph g = testsupport::k6();
    Colouring c = testsupport::k6_matching_colouring(g);

    ColourClassStats matching = class_stats(g, c, 0);
    ColourClassStats cocktail = class_stats(g, c, 1);

    // A perfect matching has no cherries and no triangles.
    REQUIRE(matching.edge_count == 3);
    REQUIRE(matching.t == 0);
    REQUIRE(matching.s == 0);

    // K6 minus a perfect matching is K_{2,2,2}: 8 triangles, every vertex of
    // degree 4, S = 6 * C(4,2) = 36.
    REQUIRE(cocktail.edge_count == 12);
    REQUIRE(cocktail.t == 8);
    REQUIRE(cocktail.s == 36);
    REQUIRE(cocktail.ratio == Catch::Approx(8.0 / 36.0));

    SECTION("selection prefers the triangle-rich class") {
        SelectionReport sel = select_class(g, c);
        REQUIRE(sel.selected == 1);
    }

    SECTION("exact Goodman identity holds") {
        REQUIRE(goodman_identity(6, matching, cocktail));
        // 0 + 36 == C(6,3) + 2*(0 + 8) == 20 + 16.
    }
}

TEST_CASE("class comparison is exact", "[colouring]") {
    auto stats = [](long long t, long long s) {
        ColourClassStats st;
        st.t = t;
        st.s = s;
        return st;
    };

    // 1/3 > 333333/1000000 — a double comparison could tie-break wrongly.
    REQUIRE(class_beats(stats(1, 3), stats(333333, 1000000)));
    REQUIRE_FALSE(class_beats(stats(333333, 1000000), stats(1, 3)));

    // Equal ratios: larger S wins.
    REQUIRE(class_beats(stats(2, 6), stats(1, 3)));
    REQUIRE_FALSE(class_beats(stats(1, 3), stats(2, 6)));

    // Fully equal: nothing beats anything (lower colour index stays).
    REQUIRE_FALSE(class_beats(stats(1, 3), stats(1, 3)));

    // S = 0 counts as ratio 0.
    REQUIRE(class_beats(stats(1, 3), stats(0, 0)));
    REQUIRE_FALSE(class_beats(stats(0, 0), stats(1, 3)));
}

TEST_CASE("selection is invariant under class relabelling", "[colouring]") {
    LinearRGraph g = make_fano();
    Colouring c = colour_edges(g, 3, ColourStrategy::uniform_random, 99);
    SelectionReport sel = select_class(g, c);

    // Swap classes 0 and 2; the winner must follow the swap.
    Colouring swapped = c;
    for (auto& v : swapped.assignment) v = v == 0 ? 2 : (v == 2 ? 0 : v);
    SelectionReport sel2 = select_class(g, swapped);
    int expect = sel.selected == 0 ? 2 : (sel.selected == 2 ? 0 : sel.selected);
    REQUIRE(sel2.selected == expect);
}

TEST_CASE("goodman identity across a complete zoo sample", "[colouring]") {
    for (int n : {9, 13, 15}) {
        LinearRGraph g = n % 6 == 3 ? make_bose_sts(n) : make_skolem_sts(n);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Colouring c = colour_edges(g, 2, ColourStrategy::uniform_random, seed);
            ColourClassStats a = class_stats(g, c, 0);
            ColourClassStats b = class_stats(g, c, 1);
            INFO("n=" << n << " seed=" << seed);
            REQUIRE(goodman_identity(g.n(), a, b));
        }
    }
}
