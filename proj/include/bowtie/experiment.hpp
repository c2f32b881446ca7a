#pragma once

// Seeded end-to-end experiments: generate -> colour -> select class ->
// build B -> components -> extract -> verify, repeated, with one JSON line
// per repetition plus a summary object.
//
// Determinism: every random stage of repetition `rep` draws its seed from
// the experiment root seed via derive_seed(root, stage, rep) with stage in
// {"gen", "colour", "extract"} — nothing reads ambient randomness, so output
// bytes depend only on the spec.  Repetitions may run on several threads;
// results are emitted in repetition order either way.

#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bowtie/bowtie_graph.hpp"
#include "bowtie/colouring.hpp"
#include "bowtie/components.hpp"
#include "bowtie/core.hpp"
#include "bowtie/extraction.hpp"
#include "bowtie/generators.hpp"
#include "bowtie/oracle.hpp"
#include "bowtie/rng.hpp"

namespace bowtie {

using json = nlohmann::ordered_json;

enum class ExtractMethod { pathwalk, induction };

inline const char* extract_method_name(ExtractMethod m) {
    return m == ExtractMethod::pathwalk ? "pathwalk" : "induction";
}

struct ExperimentSpec {
    GeneratorSpec gen;
    int c = 1;
    ColourStrategy strategy = ColourStrategy::uniform_random;
    int k = 3;
    ExtractMethod method = ExtractMethod::pathwalk;
    int repetitions = 1;
    std::uint64_t seed = 0;  // root; per-stage seeds derive from it
    int threads = 1;
    bool trace = false;  // include per-step traces in the report lines
};

struct ExperimentReport {
    std::vector<json> lines;  // one per repetition
    json summary;
    bool all_verified = true;  // every successful extraction verified

    void write(std::ostream& out) const {
        for (const auto& line : lines) out << line.dump() << '\n';
        out << summary.dump() << '\n';
    }
};

namespace detail {

inline json run_one_rep(const ExperimentSpec& spec, int rep, bool& verified_ok) {
    json line;
    line["rep"] = rep;

    GeneratorSpec gen = spec.gen;
    if (gen.kind == GeneratorKind::random_partial)
        gen.seed = derive_seed(spec.seed, "gen", static_cast<std::uint64_t>(rep));
    Generated generated = generate(gen);
    const LinearRGraph& g = generated.graph;
    line["graph"] = {{"kind", generator_kind_name(gen.kind)},
                     {"r", g.r()},
                     {"n", g.n()},
                     {"m", g.m()},
                     {"complete", is_complete(g)},
                     {"stalled", generated.stalled}};

    const std::uint64_t colour_seed =
        derive_seed(spec.seed, "colour", static_cast<std::uint64_t>(rep));
    Colouring colouring = colour_edges(g, spec.c, spec.strategy, colour_seed);
    SelectionReport selection = select_class(g, colouring);
    const ColourClassStats& chosen =
        selection.classes[static_cast<std::size_t>(selection.selected)];
    line["colouring"] = {{"c", spec.c},
                         {"strategy", colour_strategy_name(spec.strategy)},
                         {"seed", colour_seed}};
    line["selected"] = {{"colour", selection.selected},
                        {"edges", chosen.edge_count},
                        {"t", chosen.t},
                        {"s", chosen.s},
                        {"ratio", chosen.ratio}};

    ClassView view(g, &colouring, selection.selected);
    BowtieGraph bg = build_bowtie_graph(view);
    StructureReport prop = check_structure(view, bg);
    ComponentReport comps = components(bg);
    line["bowtie"] = {{"count", bg.size()},
                      {"edges", bg.edge_count()},
                      {"structure_ok", prop.ok}};
    line["components"] = {{"total", static_cast<int>(comps.components.size())},
                          {"dense", comps.dense_count},
                          {"largest", comps.largest_size}};

    const std::uint64_t extract_seed =
        derive_seed(spec.seed, "extract", static_cast<std::uint64_t>(rep));
    const int bound = (g.r() - 2) * spec.k + 3;
    json extraction;
    extraction["method"] = extract_method_name(spec.method);
    extraction["k"] = spec.k;
    extraction["bound"] = bound;

    bool success = false;
    Configuration config;
    if (spec.method == ExtractMethod::pathwalk) {
        PathWalkResult r = pathwalk_extract(view, bg, spec.k, extract_seed);
        if (r.status == PathWalkResult::Status::success) {
            success = true;
            config = r.config;
        } else {
            extraction["status"] = "no_long_path";
            extraction["longest_found"] = r.longest_found;
        }
        if (spec.trace) {
            json steps = json::array();
            for (const auto& s : r.trace)
                steps.push_back({{"bowtie", s.bowtie}, {"m", s.m}, {"span", s.span}});
            extraction["trace"] = steps;
        }
    } else {
        // The full 2rk partner supply is the ideal; desk instances rarely
        // offer more than one dense component, so any anchor at all is
        // accepted and stuck outcomes are reported, not failed.
        AnchorResult anchor = select_anchor(bg, comps, 1);
        extraction["anchor_partners"] = anchor.found;
        if (!anchor.ok) {
            extraction["status"] = "insufficient_anchors";
        } else {
            InductionResult r = run_induction(view, bg, comps, anchor.anchor, spec.k);
            extraction["status"] = induction_status_name(r.status);
            if (r.status == InductionResult::Status::success) {
                success = true;
                config = r.config;
            } else if (r.status == InductionResult::Status::invariant_broken ||
                       r.status == InductionResult::Status::crucial_violation) {
                extraction["detail"] = r.detail;
                verified_ok = false;  // an engine check failed: not acceptable
            }
            if (spec.trace) {
                json steps = json::array();
                for (const auto& rec : r.records)
                    steps.push_back({{"case", rec.case_tag}, {"t", rec.t}});
                extraction["trace"] = steps;
            }
        }
    }

    if (success) {
        extraction["status"] = "success";
        extraction["edge_ids"] = config.edge_ids;
        extraction["span"] = config.span;
        VerifyReport verify =
            verify_configuration(g, &colouring, config.edge_ids, bound, spec.k);
        extraction["verified"] = verify.pass;
        if (!verify.pass) verified_ok = false;
    }
    line["extraction"] = extraction;
    return line;
}

}  // namespace detail

inline ExperimentReport run_experiment(const ExperimentSpec& spec) {
    if (spec.repetitions < 1) throw Error("experiment needs at least one repetition");
    ExperimentReport report;
    report.lines.resize(static_cast<std::size_t>(spec.repetitions));
    std::vector<char> rep_verified(static_cast<std::size_t>(spec.repetitions), 1);

    const int threads = std::max(1, spec.threads);
    if (threads == 1) {
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            bool ok = true;
            report.lines[static_cast<std::size_t>(rep)] = detail::run_one_rep(spec, rep, ok);
            rep_verified[static_cast<std::size_t>(rep)] = ok ? 1 : 0;
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (int rep = t; rep < spec.repetitions; rep += threads) {
                    bool ok = true;
                    report.lines[static_cast<std::size_t>(rep)] =
                        detail::run_one_rep(spec, rep, ok);
                    rep_verified[static_cast<std::size_t>(rep)] = ok ? 1 : 0;
                }
            });
        for (auto& th : pool) th.join();
    }

    int successes = 0, stuck = 0, other = 0;
    for (const auto& line : report.lines) {
        const std::string status = line["extraction"]["status"];
        if (status == "success")
            ++successes;
        else if (status == "stuck_no_partner" || status == "stuck_no_boundary" ||
                 status == "no_long_path" || status == "insufficient_anchors")
            ++stuck;
        else
            ++other;
    }
    for (char ok : rep_verified) report.all_verified = report.all_verified && ok;

    report.summary = {{"summary",
                       {{"repetitions", spec.repetitions},
                        {"successes", successes},
                        {"stuck", stuck},
                        {"errors", other},
                        {"verified_all", report.all_verified}}}};
    return report;
}

}  // namespace bowtie
