// Walks the whole pipeline on the smallest complete linear 3-graph (7 points,
// 7 lines): builds the bowtie graph of one colour class, checks its structural
// properties, finds dense components, selects an anchor, and extracts a small
// monochromatic configuration two ways, verifying each against the
// brute-force oracle.

#include <iostream>

#include "bowtie/bowtie.hpp"

int main() {
    using namespace bowtie;

    // 1. The host: every pair of the 7 vertices covered by exactly one line.
    LinearRGraph g = make_fano();
    CompletenessReport comp = validate_complete(g);
    std::cout << "host: r=" << g.r() << " n=" << g.n() << " m=" << g.m()
              << " complete=" << (comp.complete ? "yes" : "no") << "\n";

    // 2. One colour class.  A single class containing all lines keeps the
    //    numbers small and the structure rich.
    ClassView view = ClassView::whole(g);

    // 3. The bowtie graph B: vertices are intersecting pairs of lines,
    //    adjacency means the supports form a triangle of lines.
    BowtieGraph bg = build_bowtie_graph(view);
    std::cout << "bowtie graph: " << bg.size() << " vertices, " << bg.edge_count()
              << " edges\n";

    StructureReport structure_report = check_structure(view, bg);
    std::cout << "structure checks: " << (structure_report.ok ? "all pass" : "FAILED")
              << " (max degree " << structure_report.max_degree << ")\n";

    BTriangleReport tri = classify_b_triangles(bg);
    std::cout << "triangles in B: " << tri.c3_count + tri.non_c3_count << " total, "
              << tri.c3_count << " on three lines, " << tri.non_c3_count
              << " on four\n";

    // 4. Components and density 2e(C) >= 3(r-1)|C|.
    ComponentReport comps = components(bg);
    std::cout << "components: " << comps.components.size() << " ("
              << comps.dense_count << " dense)\n";

    // 5. Anchor: the vertex u0 with the most bowties in dense components,
    //    its most frequent line T0, and partner lines, one per component.
    AnchorResult anchor = select_anchor(bg, comps, 1);
    std::cout << "anchor: u0=" << anchor.anchor.u0 << " t0=" << anchor.anchor.t0
              << " partners=" << anchor.anchor.partners.size() << "\n";

    // 6. Extract k=3 lines spanning at most (r-2)k+3 = 6 vertices, by the
    //    checked induction...
    InductionResult ind = run_induction(view, bg, comps, anchor.anchor, 3);
    std::cout << "induction: " << induction_status_name(ind.status);
    if (ind.status == InductionResult::Status::success)
        std::cout << " span=" << ind.config.span << " edges={"
                  << ind.config.edge_ids[0] << "," << ind.config.edge_ids[1] << ","
                  << ind.config.edge_ids[2] << "}";
    std::cout << "\n";

    // ...and by the randomized path walk.
    PathWalkResult walk = pathwalk_extract(view, bg, 3, /*seed=*/7);
    std::cout << "pathwalk: "
              << (walk.status == PathWalkResult::Status::success ? "success" : "no path")
              << " span=" << walk.config.span << "\n";

    // 7. Independent verification: the oracle enumerates k-subsets directly.
    OracleQuery q;
    q.v = 6;
    q.k = 3;
    OracleResult oracle = oracle_search(g, nullptr, q);
    std::cout << "oracle: " << oracle.count << " distinct (6,3)-configurations\n";

    VerifyReport verify = verify_configuration(g, nullptr, ind.config.edge_ids, 6, 3);
    std::cout << "verification: " << (verify.pass ? "pass" : "FAIL") << "\n";

    return verify.pass && structure_report.ok ? 0 : 1;
}
