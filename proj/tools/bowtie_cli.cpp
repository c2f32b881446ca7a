// Command-line front end for the bowtie library.
//
// Subcommands mirror the pipeline: gen -> colour -> stats -> bowtie ->
// components/anchor -> extract -> verify, plus the brute-force oracle and a
// seeded end-to-end experiment runner.
//
// Global flags (each also readable from the environment with the BOWTIE_
// prefix): --seed / BOWTIE_SEED, --out / BOWTIE_OUT, --trace / BOWTIE_TRACE,
// --threads / BOWTIE_THREADS.
//
// Exit codes: 0 success; 1 failed verification or broken invariant; 2 bad
// input or usage; 3 extraction finished without a configuration (stuck /
// no long path / not enough anchors).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bowtie/bowtie.hpp"

namespace {

using bowtie::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNoResult = 3;

// The pipeline stage a thrown error gets attributed to.
std::string g_stage = "startup";

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string out;
    bool trace = false;
    int threads = 1;
};

std::ostream& open_out(const GlobalOpts& g, std::ofstream& file) {
    if (g.out.empty()) return std::cout;
    file.open(g.out);
    if (!file) throw bowtie::Error("cannot open '" + g.out + "' for writing");
    return file;
}

bowtie::GeneratorKind parse_kind(const std::string& kind) {
    if (kind == "fano") return bowtie::GeneratorKind::fano;
    if (kind == "bose") return bowtie::GeneratorKind::bose_sts;
    if (kind == "skolem") return bowtie::GeneratorKind::skolem_sts;
    if (kind == "affine") return bowtie::GeneratorKind::affine_plane;
    if (kind == "projective") return bowtie::GeneratorKind::projective_plane;
    if (kind == "random") return bowtie::GeneratorKind::random_partial;
    throw bowtie::Error("unknown generator kind '" + kind + "'");
}

bowtie::ColourStrategy parse_strategy(const std::string& s) {
    if (s == "uniform") return bowtie::ColourStrategy::uniform_random;
    if (s == "roundrobin") return bowtie::ColourStrategy::round_robin;
    if (s == "file") return bowtie::ColourStrategy::by_file;
    throw bowtie::Error("unknown colour strategy '" + s + "'");
}

// Loads the graph and (optionally) a colouring; c == 0 infers max value + 1.
struct LoadedInstance {
    bowtie::LinearRGraph graph;
    std::optional<bowtie::Colouring> colouring;
};

LoadedInstance load_instance(const std::string& in_path, const std::string& colour_path,
                             int c) {
    g_stage = "read_graph";
    LoadedInstance inst;
    inst.graph = bowtie::read_lhg_file(in_path);
    if (!colour_path.empty()) {
        g_stage = "read_colours";
        std::vector<int> values = bowtie::read_colour_file(colour_path);
        int colours = c;
        if (colours <= 0) {
            colours = 1;
            for (int v : values) colours = std::max(colours, v + 1);
        }
        inst.colouring = bowtie::make_colouring(inst.graph, colours, std::move(values));
    }
    return inst;
}

// The class the pipeline works on: explicitly requested colour, or the
// ratio-selected class, or the whole graph when uncoloured.
int pick_colour(const LoadedInstance& inst, int requested) {
    if (!inst.colouring) return 0;
    if (requested >= 0) {
        if (requested >= inst.colouring->c)
            throw bowtie::Error("colour " + std::to_string(requested) +
                                " out of range [0, " + std::to_string(inst.colouring->c) + ")");
        return requested;
    }
    g_stage = "select_class";
    return bowtie::select_class(inst.graph, *inst.colouring).selected;
}

json bowtie_graph_to_json(const bowtie::LinearRGraph& g, const bowtie::ClassView& view,
                          const bowtie::BowtieGraph& bg) {
    g_stage = "check_structure";
    bowtie::StructureReport prop = bowtie::check_structure(view, bg);

    std::map<int, long long> histogram;
    for (int b = 0; b < bg.size(); ++b) ++histogram[bg.degree(b)];
    json hist = json::object();
    for (const auto& [degree, count] : histogram)
        hist[std::to_string(degree)] = count;

    json out;
    out["r"] = bg.r;
    out["n"] = bg.n;
    out["host_m"] = g.m();
    out["colour"] = bg.colour;
    out["bowtie_count"] = bg.size();
    out["edge_count"] = bg.edge_count();
    out["degree_histogram"] = hist;
    out["structure"] = {{"pass", prop.ok},
                        {"adjacency_yields_c3", prop.adjacency_yields_c3},
                        {"degrees_even", prop.degrees_even},
                        {"max_degree", prop.max_degree},
                        {"max_degree_ok", prop.max_degree_ok},
                        {"centre_groups_independent", prop.centre_groups_independent},
                        {"degree_sum_identity", prop.degree_sum_identity},
                        {"violations", prop.violations}};
    json bowties = json::array();
    json centres = json::array();
    for (const auto& bt : bg.bowties) {
        bowties.push_back({bt.e1, bt.e2});
        centres.push_back(bt.centre);
    }
    out["bowties"] = bowties;
    out["centres"] = centres;
    out["adjacency"] = bg.adj;
    return out;
}

bowtie::BowtieGraph bowtie_graph_from_json(const json& in) {
    std::vector<bowtie::Bowtie> bowties;
    const auto& pairs = in.at("bowties");
    const auto& centres = in.at("centres");
    if (pairs.size() != centres.size())
        throw bowtie::Error("bowties and centres disagree in length");
    bowties.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        bowties.push_back({pairs[i].at(0).get<int>(), pairs[i].at(1).get<int>(),
                           centres[i].get<int>()});
    return bowtie::bowtie_graph_from_parts(
        in.at("r").get<int>(), in.at("n").get<int>(), in.at("colour").get<int>(),
        in.at("host_m").get<int>(), std::move(bowties),
        in.at("adjacency").get<std::vector<std::vector<int>>>());
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bowtie::Error("cannot open '" + path + "' for reading");
    json out;
    try {
        in >> out;
    } catch (const std::exception& e) {
        throw bowtie::Error("bad JSON in '" + path + "': " + e.what());
    }
    return out;
}

json component_report_to_json(const bowtie::ComponentReport& rep, int size_cap) {
    json comps = json::array();
    for (std::size_t i = 0; i < rep.components.size(); ++i) {
        const auto& c = rep.components[i];
        json entry = {{"id", static_cast<int>(i)},
                      {"size", c.size()},
                      {"edge_count", c.edge_count},
                      {"avg_degree", c.avg_degree()},
                      {"threshold_3r_minus_3_met", c.dense}};
        if (size_cap >= 0) entry["within_size_cap"] = c.size() <= size_cap;
        comps.push_back(entry);
    }
    json out;
    out["component_count"] = static_cast<int>(rep.components.size());
    out["dense_count"] = rep.dense_count;
    out["largest_size"] = rep.largest_size;
    out["avg_degree_overall"] = rep.avg_degree_overall;
    if (size_cap >= 0) out["size_cap"] = size_cap;
    out["components"] = comps;
    return out;
}

json anchor_to_json(const bowtie::AnchorResult& res, int required) {
    json out;
    out["ok"] = res.ok;
    out["required"] = required;
    out["found"] = res.found;
    if (res.found > 0 || res.ok) {
        out["u0"] = res.anchor.u0;
        out["t0"] = res.anchor.t0;
        out["partners"] = res.anchor.partners;
        out["partner_components"] = res.anchor.partner_comps;
        out["partner_bowties"] = res.anchor.partner_bowties;
    }
    return out;
}

json verify_report_to_json(const bowtie::VerifyReport& rep) {
    json clauses = json::array();
    for (const auto& c : rep.clauses)
        clauses.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return {{"pass", rep.pass}, {"clauses", clauses}};
}

// ---------------------------------------------------------------------------

int cmd_gen(const GlobalOpts& g, const std::string& kind, int n, int q, int r,
            long long edges, std::uint64_t seed) {
    g_stage = "gen";
    bowtie::GeneratorSpec spec;
    spec.kind = parse_kind(kind);
    spec.n = n;
    spec.q = q;
    spec.r = r;
    spec.target_edges = edges;
    spec.seed = seed;
    bowtie::Generated generated = bowtie::generate(spec);

    if (g.out.empty()) {
        bowtie::write_lhg(std::cout, generated.graph);
    } else {
        bowtie::write_lhg_file(g.out, generated.graph);
        bowtie::CompletenessReport comp = bowtie::validate_complete(generated.graph);
        json summary = {{"kind", kind},
                        {"r", generated.graph.r()},
                        {"n", generated.graph.n()},
                        {"m", generated.graph.m()},
                        {"complete", comp.complete},
                        {"stalled", generated.stalled},
                        {"out", g.out}};
        std::cout << summary.dump() << '\n';
    }
    return 0;
}

int cmd_colour(const GlobalOpts& g, const std::string& in_path, int c,
               const std::string& strategy, const std::string& colour_in,
               std::uint64_t seed) {
    g_stage = "read_graph";
    bowtie::LinearRGraph graph = bowtie::read_lhg_file(in_path);
    g_stage = "colour";
    bowtie::ColourStrategy strat = parse_strategy(strategy);
    std::optional<std::vector<int>> file_values;
    if (strat == bowtie::ColourStrategy::by_file) {
        if (colour_in.empty())
            throw bowtie::Error("strategy 'file' needs --colour-file");
        file_values = bowtie::read_colour_file(colour_in);
    }
    bowtie::Colouring colouring = bowtie::colour_edges(
        graph, c, strat, seed, file_values ? &*file_values : nullptr);
    std::ofstream file;
    bowtie::write_colour_values(open_out(g, file), colouring.assignment);
    return 0;
}

int cmd_stats(const GlobalOpts& g, const std::string& in_path,
              const std::string& colour_path, int c) {
    LoadedInstance inst = load_instance(in_path, colour_path, c);
    g_stage = "stats";
    json out;
    out["n"] = inst.graph.n();
    out["m"] = inst.graph.m();
    out["r"] = inst.graph.r();
    if (inst.colouring) {
        bowtie::SelectionReport sel = bowtie::select_class(inst.graph, *inst.colouring);
        out["c"] = inst.colouring->c;
        json classes = json::array();
        for (const auto& st : sel.classes)
            classes.push_back({{"colour", st.colour},
                               {"edges", st.edge_count},
                               {"T", st.t},
                               {"S", st.s},
                               {"ratio", st.ratio}});
        out["classes"] = classes;
        out["selected"] = sel.selected;
    } else {
        bowtie::Colouring whole{1, std::vector<int>(static_cast<std::size_t>(inst.graph.m()), 0)};
        bowtie::ColourClassStats st = bowtie::class_stats(inst.graph, whole, 0);
        out["c"] = 1;
        out["classes"] = json::array({{{"colour", 0},
                                       {"edges", st.edge_count},
                                       {"T", st.t},
                                       {"S", st.s},
                                       {"ratio", st.ratio}}});
        out["selected"] = 0;
    }
    std::ofstream file;
    open_out(g, file) << out.dump(2) << '\n';
    return 0;
}

int cmd_bowtie(const GlobalOpts& g, const std::string& in_path,
               const std::string& colour_path, int c, int colour) {
    LoadedInstance inst = load_instance(in_path, colour_path, c);
    const int use_colour = pick_colour(inst, colour);
    g_stage = "build_bowtie";
    bowtie::ClassView view(inst.graph, inst.colouring ? &*inst.colouring : nullptr,
                           use_colour);
    bowtie::BowtieGraph bg = bowtie::build_bowtie_graph(view);
    json out = bowtie_graph_to_json(inst.graph, view, bg);
    std::ofstream file;
    open_out(g, file) << out.dump() << '\n';
    return out["structure"]["pass"].get<bool>() ? 0 : kExitVerifyFailed;
}

int cmd_components(const GlobalOpts& g, const std::string& in_path, int r_override,
                   int k) {
    g_stage = "read_bowtie";
    json in = load_json_file(in_path);
    bowtie::BowtieGraph bg = bowtie_graph_from_json(in);
    if (r_override > 0) bg.r = r_override;
    g_stage = "components";
    bowtie::ComponentReport rep = bowtie::components(bg);
    const int size_cap = k > 0 ? 2 * bg.r * k : -1;
    std::ofstream file;
    open_out(g, file) << component_report_to_json(rep, size_cap).dump(2) << '\n';
    return 0;
}

int cmd_anchor(const GlobalOpts& g, const std::string& in_path, int required,
               int size_cap) {
    g_stage = "read_bowtie";
    json in = load_json_file(in_path);
    bowtie::BowtieGraph bg = bowtie_graph_from_json(in);
    g_stage = "anchor";
    bowtie::ComponentReport rep = bowtie::components(bg);
    bowtie::AnchorResult res = bowtie::select_anchor(bg, rep, required, size_cap);
    std::ofstream file;
    open_out(g, file) << anchor_to_json(res, required).dump(2) << '\n';
    return res.ok ? 0 : kExitNoResult;
}

int cmd_extract(const GlobalOpts& g, const std::string& in_path,
                const std::string& colour_path, int c, int colour, int k,
                const std::string& method, std::uint64_t seed) {
    LoadedInstance inst = load_instance(in_path, colour_path, c);
    const int use_colour = pick_colour(inst, colour);
    g_stage = "build_bowtie";
    bowtie::ClassView view(inst.graph, inst.colouring ? &*inst.colouring : nullptr,
                           use_colour);
    bowtie::BowtieGraph bg = bowtie::build_bowtie_graph(view);
    g_stage = "extract";

    const int bound = (inst.graph.r() - 2) * k + 3;
    json out;
    out["method"] = method;
    out["k"] = k;
    out["bound"] = bound;
    out["colour"] = use_colour;
    out["seed"] = seed;

    bool success = false;
    bowtie::Configuration config;
    if (method == "pathwalk") {
        bowtie::PathWalkResult res = bowtie::pathwalk_extract(view, bg, k, seed);
        if (res.status == bowtie::PathWalkResult::Status::success) {
            success = true;
            config = res.config;
        } else {
            out["status"] = "no_long_path";
            out["longest_found"] = res.longest_found;
        }
        if (g.trace) {
            json steps = json::array();
            for (const auto& s : res.trace)
                steps.push_back({{"bowtie", s.bowtie}, {"m", s.m}, {"span", s.span}});
            out["trace"] = steps;
        }
    } else if (method == "induction") {
        bowtie::ComponentReport comps = bowtie::components(bg);
        bowtie::AnchorResult anchor = bowtie::select_anchor(bg, comps, 1);
        out["anchor"] = anchor_to_json(anchor, 1);
        if (!anchor.ok) {
            out["status"] = "insufficient_anchors";
        } else {
            bowtie::InductionOptions opts;
            opts.record_states = g.trace;
            bowtie::InductionResult res =
                bowtie::run_induction(view, bg, comps, anchor.anchor, k, opts);
            out["status"] = bowtie::induction_status_name(res.status);
            if (res.status == bowtie::InductionResult::Status::success) {
                success = true;
                config = res.config;
            } else {
                out["detail"] = res.detail;
            }
            if (g.trace) {
                json steps = json::array();
                for (const auto& rec : res.records) {
                    json step = {{"case", rec.case_tag}, {"t", rec.t}};
                    if (rec.case_tag != 1) {
                        step["b"] = rec.b;
                        step["b_prime"] = rec.b_prime;
                        step["q1"] = rec.q1;
                        step["q2"] = rec.q2;
                        step["w1"] = rec.w1;
                        step["w2"] = rec.w2;
                    }
                    steps.push_back(step);
                }
                out["trace"] = steps;
            }
            if (res.status == bowtie::InductionResult::Status::invariant_broken ||
                res.status == bowtie::InductionResult::Status::crucial_violation) {
                std::ofstream file;
                open_out(g, file) << out.dump(2) << '\n';
                return kExitVerifyFailed;
            }
        }
    } else {
        throw bowtie::Error("unknown method '" + method + "' (pathwalk or induction)");
    }

    int exit_code = kExitNoResult;
    if (success) {
        g_stage = "verify";
        bowtie::VerifyReport verify = bowtie::verify_configuration(
            inst.graph, inst.colouring ? &*inst.colouring : nullptr, config.edge_ids,
            bound, k);
        out["status"] = "success";
        out["edge_ids"] = config.edge_ids;
        out["span"] = config.span;
        out["verified"] = verify.pass;
        exit_code = verify.pass ? 0 : kExitVerifyFailed;
    }
    std::ofstream file;
    open_out(g, file) << out.dump(2) << '\n';
    return exit_code;
}

int cmd_oracle(const GlobalOpts& g, const std::string& in_path,
               const std::string& colour_path, int c, int v, int k,
               const std::string& mode, int colour, long long budget) {
    LoadedInstance inst = load_instance(in_path, colour_path, c);
    g_stage = "oracle";
    bowtie::OracleQuery query;
    query.v = v;
    query.k = k;
    query.budget = budget;
    if (colour >= 0) {
        if (!inst.colouring) throw bowtie::Error("--colour needs --colour-file");
        query.colour = colour;
    }
    if (mode == "count")
        query.mode = bowtie::OracleMode::count;
    else if (mode == "find_one")
        query.mode = bowtie::OracleMode::find_one;
    else if (mode == "enumerate_all")
        query.mode = bowtie::OracleMode::enumerate_all;
    else
        throw bowtie::Error("unknown mode '" + mode + "'");

    bowtie::OracleResult res = bowtie::oracle_search(
        inst.graph, inst.colouring ? &*inst.colouring : nullptr, query, g.threads);

    json out;
    out["v"] = v;
    out["k"] = k;
    out["mode"] = mode;
    if (query.colour) out["colour"] = *query.colour;
    out["count"] = res.count;
    out["examined"] = res.examined;
    out["budget_exceeded"] = res.budget_exceeded;
    if (query.mode == bowtie::OracleMode::find_one)
        out["witness"] = res.witness ? json(*res.witness) : json(nullptr);
    if (query.mode == bowtie::OracleMode::enumerate_all) out["witnesses"] = res.witnesses;
    std::ofstream file;
    open_out(g, file) << out.dump() << '\n';
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& in_path,
               const std::string& colour_path, int c, const std::string& config_path) {
    LoadedInstance inst = load_instance(in_path, colour_path, c);
    g_stage = "read_config";
    json config = load_json_file(config_path);
    if (!config.contains("edge_ids"))
        throw bowtie::Error("config file has no edge_ids (was extraction successful?)");
    std::vector<bowtie::EdgeId> edge_ids =
        config["edge_ids"].get<std::vector<bowtie::EdgeId>>();
    const int k = config.contains("k") ? config["k"].get<int>()
                                       : static_cast<int>(edge_ids.size());
    const int bound = config.contains("bound") ? config["bound"].get<int>()
                                               : (inst.graph.r() - 2) * k + 3;
    g_stage = "verify";
    bowtie::VerifyReport rep = bowtie::verify_configuration(
        inst.graph, inst.colouring ? &*inst.colouring : nullptr, edge_ids, bound, k);
    std::ofstream file;
    open_out(g, file) << verify_report_to_json(rep).dump(2) << '\n';
    return rep.pass ? 0 : kExitVerifyFailed;
}

int cmd_experiment(const GlobalOpts& g, const std::string& kind, int n, int q, int r,
                   long long edges, int c, const std::string& strategy, int k,
                   const std::string& method, int reps) {
    g_stage = "experiment";
    bowtie::ExperimentSpec spec;
    spec.gen.kind = parse_kind(kind);
    spec.gen.n = n;
    spec.gen.q = q;
    spec.gen.r = r;
    spec.gen.target_edges = edges;
    spec.c = c;
    spec.strategy = parse_strategy(strategy);
    spec.k = k;
    spec.method =
        method == "pathwalk" ? bowtie::ExtractMethod::pathwalk : bowtie::ExtractMethod::induction;
    if (method != "pathwalk" && method != "induction")
        throw bowtie::Error("unknown method '" + method + "'");
    spec.repetitions = reps;
    spec.seed = g.seed;
    spec.threads = g.threads;
    spec.trace = g.trace;

    bowtie::ExperimentReport report = bowtie::run_experiment(spec);
    if (g.out.empty()) {
        report.write(std::cout);
    } else {
        std::filesystem::create_directories(g.out);
        const std::string path = g.out + "/report.ndjson";
        std::ofstream file(path);
        if (!file) throw bowtie::Error("cannot open '" + path + "' for writing");
        report.write(file);
        std::cout << json({{"out", path},
                           {"repetitions", reps},
                           {"verified_all", report.all_verified}})
                         .dump()
                  << '\n';
    }
    return report.all_verified ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "linear r-graph toolkit: complete linear hypergraphs, colour classes,\n"
        "the bowtie auxiliary graph B, dense components, and extraction of\n"
        "monochromatic ((r-2)k+3, k)-configurations, with a brute-force oracle.\n"
        "Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 no result."};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "root seed (all stage seeds derive from it)")
        ->envname("BOWTIE_SEED");
    app.add_option("--out", g.out, "output file (default stdout)")->envname("BOWTIE_OUT");
    app.add_flag("--trace", g.trace, "include per-step traces in reports")
        ->envname("BOWTIE_TRACE");
    app.add_option("--threads", g.threads, "worker threads where supported")
        ->envname("BOWTIE_THREADS");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance (.lhg)");
    std::string gen_kind = "fano";
    int gen_n = 0, gen_q = 0, gen_r = 3;
    long long gen_edges = 0;
    gen->add_option("--kind", gen_kind, "fano|bose|skolem|affine|projective|random")
        ->required();
    gen->add_option("--n", gen_n, "order for bose/skolem, vertices for random");
    gen->add_option("--q", gen_q, "prime order for affine/projective");
    gen->add_option("--r", gen_r, "edge size for random");
    gen->add_option("--edges", gen_edges, "target edge count for random");

    // colour
    auto* colour = app.add_subcommand("colour", "colour hyperedges");
    std::string colour_in, colour_strategy = "uniform", colour_file_in;
    int colour_c = 2;
    colour->add_option("--in", colour_in, ".lhg input")->required();
    colour->add_option("--c", colour_c, "number of colours");
    colour->add_option("--strategy", colour_strategy, "uniform|roundrobin|file");
    colour->add_option("--colour-file", colour_file_in, "input values for strategy=file");

    // stats
    auto* stats = app.add_subcommand("stats", "per-class triangle/cherry statistics");
    std::string stats_in, stats_colours;
    int stats_c = 0;
    stats->add_option("--in", stats_in, ".lhg input")->required();
    stats->add_option("--colour-file", stats_colours, "colour file");
    stats->add_option("--c", stats_c, "colour count (default: infer)");

    // bowtie
    auto* bow = app.add_subcommand("bowtie", "build B of a colour class (JSON)");
    std::string bow_in, bow_colours;
    int bow_c = 0, bow_colour = -1;
    bow->add_option("--in", bow_in, ".lhg input")->required();
    bow->add_option("--colour-file", bow_colours, "colour file");
    bow->add_option("--c", bow_c, "colour count (default: infer)");
    bow->add_option("--colour", bow_colour, "class to build (default: selected)");

    // components
    auto* comp = app.add_subcommand("components", "component/density report of B");
    std::string comp_in;
    int comp_r = 0, comp_k = 0;
    comp->add_option("--in", comp_in, "bowtie JSON input")->required();
    comp->add_option("--r", comp_r, "override r (density threshold 3(r-1))");
    comp->add_option("--k", comp_k, "annotate with the 2rk size cap");

    // anchor
    auto* anc = app.add_subcommand("anchor", "select an induction anchor from B");
    std::string anc_in;
    int anc_required = 1, anc_cap = -1;
    anc->add_option("--in", anc_in, "bowtie JSON input")->required();
    anc->add_option("--required", anc_required, "partners needed");
    anc->add_option("--size-cap", anc_cap, "only components up to this size");

    // extract
    auto* ext = app.add_subcommand("extract", "extract a ((r-2)k+3, k)-configuration");
    std::string ext_in, ext_colours, ext_method = "pathwalk";
    int ext_c = 0, ext_colour = -1, ext_k = 3;
    ext->add_option("--in", ext_in, ".lhg input")->required();
    ext->add_option("--colour-file", ext_colours, "colour file");
    ext->add_option("--c", ext_c, "colour count (default: infer)");
    ext->add_option("--colour", ext_colour, "class to use (default: selected)");
    ext->add_option("--k", ext_k, "configuration size")->required();
    ext->add_option("--method", ext_method, "pathwalk|induction");

    // oracle
    auto* ora = app.add_subcommand("oracle", "brute-force (v,k)-configuration search");
    std::string ora_in, ora_colours, ora_mode = "count";
    int ora_c = 0, ora_v = 0, ora_k = 0, ora_colour = -1;
    long long ora_budget = 100'000'000;
    ora->add_option("--in", ora_in, ".lhg input")->required();
    ora->add_option("--v", ora_v, "span bound")->required();
    ora->add_option("--k", ora_k, "edge count")->required();
    ora->add_option("--mode", ora_mode, "count|find_one|enumerate_all");
    ora->add_option("--colour", ora_colour, "restrict to one class");
    ora->add_option("--colour-file", ora_colours, "colour file");
    ora->add_option("--c", ora_c, "colour count (default: infer)");
    ora->add_option("--budget", ora_budget, "partial subsets examined");

    // verify
    auto* ver = app.add_subcommand("verify", "verify an extraction output");
    std::string ver_in, ver_colours, ver_config;
    int ver_c = 0;
    ver->add_option("--in", ver_in, ".lhg input")->required();
    ver->add_option("--config", ver_config, "config JSON from extract")->required();
    ver->add_option("--colour-file", ver_colours, "colour file");
    ver->add_option("--c", ver_c, "colour count (default: infer)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "seeded end-to-end pipeline runs");
    std::string exp_kind = "fano", exp_strategy = "uniform", exp_method = "pathwalk";
    int exp_n = 0, exp_q = 0, exp_r = 3, exp_c = 2, exp_k = 3, exp_reps = 5;
    long long exp_edges = 0;
    exp->add_option("--kind", exp_kind, "generator kind")->required();
    exp->add_option("--n", exp_n, "order for bose/skolem, vertices for random");
    exp->add_option("--q", exp_q, "prime order for affine/projective");
    exp->add_option("--r", exp_r, "edge size for random");
    exp->add_option("--edges", exp_edges, "target edge count for random");
    exp->add_option("--c", exp_c, "number of colours");
    exp->add_option("--strategy", exp_strategy, "uniform|roundrobin");
    exp->add_option("--k", exp_k, "configuration size");
    exp->add_option("--method", exp_method, "pathwalk|induction");
    exp->add_option("--reps", exp_reps, "repetitions");

    // Let the global flags (--seed/--out/--trace/--threads) appear after the
    // subcommand name as well as before it.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(g, gen_kind, gen_n, gen_q, gen_r, gen_edges, g.seed);
        if (colour->parsed())
            return cmd_colour(g, colour_in, colour_c, colour_strategy, colour_file_in,
                              g.seed);
        if (stats->parsed()) return cmd_stats(g, stats_in, stats_colours, stats_c);
        if (bow->parsed()) return cmd_bowtie(g, bow_in, bow_colours, bow_c, bow_colour);
        if (comp->parsed()) return cmd_components(g, comp_in, comp_r, comp_k);
        if (anc->parsed()) return cmd_anchor(g, anc_in, anc_required, anc_cap);
        if (ext->parsed())
            return cmd_extract(g, ext_in, ext_colours, ext_c, ext_colour, ext_k,
                               ext_method, g.seed);
        if (ora->parsed())
            return cmd_oracle(g, ora_in, ora_colours, ora_c, ora_v, ora_k, ora_mode,
                              ora_colour, ora_budget);
        if (ver->parsed()) return cmd_verify(g, ver_in, ver_colours, ver_c, ver_config);
        if (exp->parsed())
            return cmd_experiment(g, exp_kind, exp_n, exp_q, exp_r, exp_edges, exp_c,
                                  exp_strategy, exp_k, exp_method, exp_reps);
    } catch (const bowtie::ParseError& e) {
        std::cerr << json({{"stage", g_stage}, {"error", e.what()}}).dump() << '\n';
        return kExitBadInput;
    } catch (const bowtie::Error& e) {
        std::cerr << json({{"stage", g_stage}, {"error", e.what()}}).dump() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << json({{"stage", g_stage}, {"error", e.what()}}).dump() << '\n';
        return kExitBadInput;
    }
    return 0;
}
