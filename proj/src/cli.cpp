#include "subtile/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "subtile/bounds.hpp"
#include "subtile/constructive.hpp"
#include "subtile/json_io.hpp"
#include "subtile/reduction.hpp"
#include "subtile/render.hpp"

namespace subtile {
namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json load_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(path + ": malformed JSON: " + e.what());
    }
}

Library load_library(const std::string& path) { return library_from_json(load_json(path)); }

Instance load_instance(const std::string& path, bool paper_encoding) {
    if (paper_encoding) return instance_from_paper_encoding(read_file(path));
    return instance_from_json(load_json(path));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

RearrangeMode parse_mode(const std::string& s) {
    if (s == "trans") return RearrangeMode::translations;
    if (s == "gen") return RearrangeMode::rotations;
    throw std::invalid_argument("--mode must be trans or gen");
}

const char* mode_name(RearrangeMode m) { return m == RearrangeMode::translations ? "trans" : "gen"; }

Json to_json(const SubtilingWitness& w) {
    return Json{{"split_width", w.split_width}, {"classes", to_json(w.classes)},
                {"left", to_json(w.left)},      {"right", to_json(w.right)},
                {"left_multiset", to_json(w.left_multiset)}, {"right_multiset", to_json(w.right_multiset)}};
}

Json to_json(const BetaReport& r) {
    Json j{{"n", r.n},
           {"mode", mode_name(r.mode)},
           {"m_max", r.m_max},
           {"largest_counterexample_m", r.largest_counterexample_m},
           {"counterexample_widths", r.counterexample_widths},
           {"budget_exceeded_widths", r.budget_exceeded_widths},
           {"exhaustive", r.exhaustive},
           {"semantics", "lower bound: the largest counterexample width found up to m_max"}};
    if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
    return j;
}

Json to_json(const Rational& r) {
    return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}, {"ceil", rational_ceil(r).str()}};
}

struct BudgetOpt {
    std::uint64_t nodes = kDefaultSearchNodes;
    void attach(CLI::App* cmd) { cmd->add_option("--budget", nodes, "search node budget"); }
    SearchBudget make() const { return SearchBudget(nodes); }
};

int status_exit(SearchStatus s) {
    switch (s) {
        case SearchStatus::yes: return kExitYes;
        case SearchStatus::no: return kExitNo;
        case SearchStatus::budget_exceeded: return kExitBudget;
    }
    return kExitError;
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact subtiling decisions, beta thresholds, and bounds for polyomino libraries"};
    app.require_subcommand(1);
    int exit_code = kExitYes;

    // --- tile ---------------------------------------------------------------
    auto* tile = app.add_subcommand("tile", "find a tiling of R_{n x m} by the library");
    std::string tile_lib;
    int tile_n = 1, tile_m = 1;
    BudgetOpt tile_budget;
    tile->add_option("--library", tile_lib, "library JSON file")->required();
    tile->add_option("--n", tile_n, "board height")->required();
    tile->add_option("--m", tile_m, "board width")->required();
    tile_budget.attach(tile);
    tile->callback([&] {
        const Library lib = load_library(tile_lib);
        SearchBudget budget = tile_budget.make();
        TilingResult r = find_tiling(lib, tile_n, tile_m, budget);
        Json j{{"tilable", r.status == SearchStatus::yes}};
        if (r.tiling) j["tiling"] = to_json(*r.tiling);
        if (r.status == SearchStatus::budget_exceeded) j["error"] = "budget exceeded";
        emit(out, j);
        err << "tile " << tile_n << "x" << tile_m << ": "
            << (r.status == SearchStatus::yes ? "tilable" : r.status == SearchStatus::no ? "not tilable" : "budget exceeded")
            << "\n";
        exit_code = status_exit(r.status);
    });

    // --- count --------------------------------------------------------------
    auto* count = app.add_subcommand("count", "count the tilings of R_{n x m}");
    std::string count_lib;
    int count_n = 1, count_m = 1;
    BudgetOpt count_budget;
    count->add_option("--library", count_lib, "library JSON file")->required();
    count->add_option("--n", count_n, "board height")->required();
    count->add_option("--m", count_m, "board width")->required();
    count_budget.attach(count);
    count->callback([&] {
        const Library lib = load_library(count_lib);
        SearchBudget budget = count_budget.make();
        CountResult r = count_tilings(lib, count_n, count_m, budget);
        if (r.status == SearchStatus::budget_exceeded) {
            emit(out, Json{{"error", "budget exceeded"}});
            err << "count: budget exceeded\n";
            exit_code = kExitBudget;
            return;
        }
        emit(out, Json{{"count", r.count.str()}});
        err << "count " << count_n << "x" << count_m << ": " << r.count.str() << "\n";
        exit_code = r.count > 0 ? kExitYes : kExitNo;
    });

    // --- decide -------------------------------------------------------------
    auto* decide = app.add_subcommand("decide", "decide whether the instance admits a subtiling");
    std::string decide_inst;
    std::string decide_mode = "trans";
    bool decide_reflections = false, decide_paper = false;
    BudgetOpt decide_budget;
    decide->add_option("--instance", decide_inst, "instance JSON file (library + tiling or multiset)")->required();
    decide->add_option("--mode", decide_mode, "trans (TRANS-ST) or gen (GEN-ST)");
    decide->add_flag("--reflections", decide_reflections, "also allow reflections in rearrangements");
    decide->add_flag("--paper-encoding", decide_paper, "read the instance as h/w/x/y placement rows");
    decide_budget.attach(decide);
    decide->callback([&] {
        const Instance inst = load_instance(decide_inst, decide_paper);
        const RearrangeMode mode = parse_mode(decide_mode);
        SearchBudget budget = decide_budget.make();
        PieceMultiset ms;
        if (inst.tiling)
            ms = multiset_of(inst.lib, *inst.tiling);
        else if (inst.multiset)
            ms = coarsen(*inst.multiset, mode_symmetry(inst.lib.mode));
        else
            throw std::invalid_argument("decide: instance needs a tiling or a multiset");
        const Symmetry sym = effective_symmetry(inst.lib.mode, mode, decide_reflections);
        SubtilingOutcome r = has_subtiling(ms, inst.n, inst.m, sym, budget);
        Json j{{"mode", decide_mode}, {"subtiling", r.status == SearchStatus::yes}};
        if (r.witness) j["witness"] = to_json(*r.witness);
        if (r.status == SearchStatus::budget_exceeded) j["error"] = "budget exceeded";
        emit(out, j);
        err << "decide (" << decide_mode << "): "
            << (r.status == SearchStatus::yes   ? "subtiling found"
                : r.status == SearchStatus::no  ? "no subtiling (exhaustive)"
                                                : "budget exceeded")
            << "\n";
        exit_code = status_exit(r.status);
    });

    // --- beta ---------------------------------------------------------------
    auto* beta = app.add_subcommand("beta", "empirical beta search (largest no-subtiling width)");
    std::string beta_lib, beta_rect;
    int beta_n = 1, beta_mmax = 0;
    std::string beta_mode = "trans";
    bool beta_reflections = false;
    BudgetOpt beta_budget;
    beta->add_option("--library", beta_lib, "library JSON file");
    beta->add_option("--rect", beta_rect, "single rectangle HxW (reports the paper-vs-empirical comparison)");
    beta->add_option("--n", beta_n, "board height")->required();
    beta->add_option("--mmax", beta_mmax, "largest width to search");
    beta->add_option("--mode", beta_mode, "trans or gen");
    beta->add_flag("--reflections", beta_reflections, "also allow reflections in rearrangements");
    beta_budget.attach(beta);
    beta->callback([&] {
        SearchBudget budget = beta_budget.make();
        if (!beta_rect.empty()) {
            const size_t sep = beta_rect.find('x');
            if (sep == std::string::npos) throw std::invalid_argument("--rect expects HxW, e.g. 2x3");
            const int a = std::stoi(beta_rect.substr(0, sep));
            const int b = std::stoi(beta_rect.substr(sep + 1));
            SingleRectBetaReport r = single_rect_beta(a, b, beta_n, budget, beta_mmax);
            const char* case_name = r.kase == SingleRectCase::divides_neither      ? "divisible by neither"
                                    : r.kase == SingleRectCase::divides_exactly_one ? "divisible by exactly one"
                                    : r.kase == SingleRectCase::ab_divides_n        ? "ab divides n"
                                                                                    : "both divide, ab does not";
            Json j{{"a", r.a},
                   {"b", r.b},
                   {"n", r.n},
                   {"case", case_name},
                   {"m_max", r.m_max},
                   {"empirical_value", r.empirical_value},
                   {"exhaustive", r.exhaustive}};
            j["paper_value"] = r.paper_value ? Json(*r.paper_value) : Json(nullptr);
            if (r.paper_value)
                j["agreement"] = r.agreement;
            else
                j["agreement"] = nullptr;
            emit(out, j);
            err << "single-rectangle beta, case \"" << case_name << "\": paper value "
                << (r.paper_value ? std::to_string(*r.paper_value) : std::string("not stated")) << ", empirical "
                << r.empirical_value << " (searched to m_max=" << r.m_max << ")";
            if (r.paper_value) err << (r.agreement ? " -- AGREE" : " -- DISAGREE (both reported, neither asserted)");
            err << "\n";
            exit_code = r.exhaustive ? kExitYes : kExitBudget;
            return;
        }
        if (beta_lib.empty()) throw std::invalid_argument("beta: need --library or --rect");
        if (beta_mmax < 1) throw std::invalid_argument("beta: need --mmax >= 1");
        const Library lib = load_library(beta_lib);
        BetaReport r = beta_empirical(lib, beta_n, beta_mmax, parse_mode(beta_mode), budget, beta_reflections);
        emit(out, to_json(r));
        err << "empirical beta (" << beta_mode << ", n=" << r.n << "): largest counterexample width "
            << r.largest_counterexample_m << " of m_max=" << r.m_max
            << ". Lower bound only: a finite search cannot certify that beta is finite.\n";
        exit_code = r.exhaustive ? kExitYes : kExitBudget;
    });

    // --- represent ----------------------------------------------------------
    auto* represent = app.add_subcommand("represent", "n-representability: sufficient conditions and counterexample search");
    std::string rep_lib;
    int rep_n = 1, rep_mmax = 4;
    long long rep_cmax = 10;
    bool rep_search = false;
    BudgetOpt rep_budget;
    represent->add_option("--library", rep_lib, "library JSON file")->required();
    represent->add_option("--n", rep_n, "number of rows")->required();
    represent->add_flag("--search", rep_search, "search for an equation-satisfying assignment with no tiling");
    represent->add_option("--mmax", rep_mmax, "largest width for the counterexample search");
    represent->add_option("--cmax", rep_cmax, "largest piece count for the counterexample search");
    rep_budget.attach(represent);
    represent->callback([&] {
        const Library lib = load_library(rep_lib);
        if (!rep_search) {
            std::optional<RepJustification> just = rep_sufficient(lib, rep_n);
            Json j{{"n", rep_n}, {"sufficient", just.has_value()}};
            if (just) {
                const char* rule = just->rule == RepRule::n_at_most_3               ? "n-at-most-3"
                                   : just->rule == RepRule::heights_unit_or_near_n ? "heights-unit-or-near-n"
                                                                                   : "n4-equal-width-height2";
                j["rule"] = rule;
                j["detail"] = just->detail;
            }
            emit(out, j);
            err << "representability: " << (just ? "sufficient condition applies: " + just->detail
                                                 : std::string("inconclusive (not a refutation)"))
                << "\n";
            exit_code = just ? kExitYes : kExitNo;
            return;
        }
        SearchBudget budget = rep_budget.make();
        RepCounterexampleResult r = find_rep_counterexample(lib, rep_n, rep_mmax, rep_cmax, budget);
        Json j{{"n", rep_n}, {"counterexample_found", r.status == SearchStatus::yes}};
        if (r.found) j["counterexample"] = Json{{"pieces", to_json(r.found->pieces)}, {"m", r.found->m}};
        if (r.status == SearchStatus::budget_exceeded) j["error"] = "budget exceeded";
        emit(out, j);
        err << "counterexample search: "
            << (r.status == SearchStatus::yes   ? "found an assignment with no row-respecting tiling"
                : r.status == SearchStatus::no  ? "none within the caps"
                                                : "budget exceeded")
            << "\n";
        exit_code = status_exit(r.status);
    });

    // --- rectpack -----------------------------------------------------------
    auto* rectpack = app.add_subcommand("rectpack", "Klarner-de Bruijn test: does an a x b rectangle tile R_{n x m}?");
    int rp_a = 1, rp_b = 1, rp_n = 1, rp_m = 1;
    rectpack->add_option("a", rp_a, "piece height")->required();
    rectpack->add_option("b", rp_b, "piece width")->required();
    rectpack->add_option("n", rp_n, "board height")->required();
    rectpack->add_option("m", rp_m, "board width")->required();
    rectpack->callback([&] {
        RectPackVerdict v = rect_tiles(rp_a, rp_b, rp_n, rp_m);
        Json j{{"tiles", v.tiles},
               {"condition_a", v.divisibility_ok},
               {"condition_b",
                Json{{"n", v.n_combo ? Json{v.n_combo->first, v.n_combo->second} : Json(nullptr)},
                     {"m", v.m_combo ? Json{v.m_combo->first, v.m_combo->second} : Json(nullptr)}}}};
        if (std::optional<Tiling> w = rect_tiling_witness(rp_a, rp_b, rp_n, rp_m)) j["witness"] = to_json(*w);
        emit(out, j);
        err << rp_a << "x" << rp_b << " piece " << (v.tiles ? "tiles" : "does not tile") << " R_" << rp_n << "x"
            << rp_m << "\n";
        exit_code = v.tiles ? kExitYes : kExitNo;
    });

    // --- tall ---------------------------------------------------------------
    auto* tall = app.add_subcommand("tall", "tall-rectangle hypotheses, beta, and staircase rearrangement");
    std::string tall_lib, tall_rearrange_inst;
    int tall_n = 1;
    tall->add_option("--library", tall_lib, "library JSON file")->required();
    tall->add_option("--n", tall_n, "board height")->required();
    tall->add_option("--rearrange", tall_rearrange_inst, "instance JSON with a multiset to rearrange into the staircase");
    tall->callback([&] {
        const Library lib = load_library(tall_lib);
        std::optional<TallProfile> profile = tall_precondition(lib, tall_n);
        Json j{{"n", tall_n}, {"satisfied", profile.has_value()}};
        if (profile) {
            j["beta"] = profile->max_tall_width;
            j["widths_gcd"] = profile->widths_gcd;
            j["unit_piece"] = profile->unit_piece ? to_json(*profile->unit_piece) : Json(nullptr);
        }
        if (profile && !tall_rearrange_inst.empty()) {
            const Instance inst = load_instance(tall_rearrange_inst, false);
            if (!inst.multiset) throw std::invalid_argument("tall --rearrange: instance needs a multiset");
            Tiling staircase = tall_rearrange(*inst.multiset, lib, tall_n, inst.m);
            j["rearranged"] = to_json(staircase);
        }
        emit(out, j);
        err << "tall hypotheses " << (profile ? "satisfied; beta = " + std::to_string(profile->max_tall_width)
                                              : std::string("not satisfied"))
            << "\n";
        exit_code = profile ? kExitYes : kExitNo;
    });

    // --- reduce -------------------------------------------------------------
    auto* reduce = app.add_subcommand("reduce", "PARTITION -> subtiling reduction instance");
    std::string reduce_partition_csv, reduce_emit;
    bool reduce_solve = false;
    BudgetOpt reduce_budget;
    reduce->add_option("--partition", reduce_partition_csv, "comma-separated positive integers")->required();
    reduce->add_option("--emit", reduce_emit, "write the instance JSON to this file");
    reduce->add_flag("--solve", reduce_solve, "run the GEN-ST search and answer the partition question");
    reduce_budget.attach(reduce);
    reduce->callback([&] {
        PartitionInstance inst;
        std::stringstream ss(reduce_partition_csv);
        for (std::string item; std::getline(ss, item, ',');) inst.values.push_back(std::stoll(item));
        std::optional<ReductionInstance> red = reduce_partition(inst);
        if (!red) {
            emit(out, Json{{"reducible", false}, {"reason", "odd sum: no partition is possible"}});
            err << "odd sum; no partition possible\n";
            exit_code = kExitNo;
            return;
        }
        Json j{{"reducible", true},
               {"N", red->N},
               {"board", {{"n", red->board_n}, {"m", red->board_m}}},
               {"library", to_json(red->lib)},
               {"canonical_tiling", to_json(red->canonical)},
               {"multiset", to_json(red->multiset)}};
        if (!reduce_emit.empty()) {
            Instance file;
            file.lib = red->lib;
            file.n = red->board_n;
            file.m = red->board_m;
            file.tiling = red->canonical;
            std::ofstream f(reduce_emit, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot write " + reduce_emit);
            f << to_json(file).dump(2) << "\n";
            j["emitted"] = reduce_emit;
        }
        if (reduce_solve) {
            SearchBudget budget = reduce_budget.make();
            PartitionResult r = solve_partition_via_tiling(inst, budget);
            j["partition_exists"] = r.status == SearchStatus::yes;
            if (r.witness) j["partition"] = Json{{"s1", r.witness->s1}, {"s2", r.witness->s2}};
            if (r.status == SearchStatus::budget_exceeded) j["error"] = "budget exceeded";
            emit(out, j);
            err << "partition via tiling: "
                << (r.status == SearchStatus::yes   ? "partition exists"
                    : r.status == SearchStatus::no  ? "no partition"
                                                    : "budget exceeded")
                << "\n";
            exit_code = status_exit(r.status);
            return;
        }
        emit(out, j);
        err << "reduction built: board " << red->board_n << "x" << red->board_m << "\n";
        exit_code = kExitYes;
    });

    // --- bounds -------------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "closed-form upper bounds on beta_n");
    std::string bounds_lib;
    int bounds_n = 1, bounds_mmax = 0;
    bool bounds_check = false;
    BudgetOpt bounds_budget;
    bounds->add_option("--library", bounds_lib, "library JSON file")->required();
    bounds->add_option("--n", bounds_n, "number of rows")->required();
    bounds->add_flag("--check", bounds_check, "also run the beta search and verify empirical <= ceil(bound)");
    bounds->add_option("--mmax", bounds_mmax, "beta search width for --check");
    bounds_budget.attach(bounds);
    bounds->callback([&] {
        const Library lib = load_library(bounds_lib);
        if (!bounds_check) {
            const Library closed = close_library(lib);
            Json j{{"n", bounds_n}, {"general", to_json(bound_general(closed, bounds_n))}};
            const BoundInputs in = bound_inputs(closed, bounds_n);
            j["unit_height"] = in.all_unit_height && !closed.pieces.empty()
                                   ? to_json(bound_unit_height(closed, bounds_n))
                                   : Json(nullptr);
            j["width_lcm_lower_bound"] = width_lcm(closed);
            std::optional<RepJustification> just = rep_sufficient(closed, bounds_n);
            j["representability_advice"] = just ? Json(just->detail) : Json(nullptr);
            emit(out, j);
            err << "bound_general = " << bound_general(closed, bounds_n) << "\n";
            exit_code = kExitYes;
            return;
        }
        if (bounds_mmax < 1) throw std::invalid_argument("bounds --check: need --mmax >= 1");
        SearchBudget budget = bounds_budget.make();
        BoundVsEmpirical r = bound_vs_empirical(lib, bounds_n, bounds_mmax, budget);
        Json j{{"n", r.n},
               {"m_max", r.m_max},
               {"general", to_json(r.general.bound)},
               {"unit_height", r.unit_height.applicable ? to_json(r.unit_height.bound) : Json(nullptr)},
               {"representability_advice", r.representability ? Json(r.representability->detail) : Json(nullptr)},
               {"beta", to_json(r.beta)},
               {"sound", r.sound}};
        emit(out, j);
        if (!r.sound) {
            err << "FATAL: empirical beta exceeds an applicable bound\n";
            exit_code = kExitError;
            return;
        }
        err << "bounds check: empirical beta " << r.beta.largest_counterexample_m << " within all applicable bounds\n";
        exit_code = r.beta.exhaustive ? kExitYes : kExitBudget;
    });

    // --- render -------------------------------------------------------------
    auto* render_cmd = app.add_subcommand("render", "render an instance's tiling as SVG or ASCII");
    std::string render_inst, render_format = "svg";
    int render_cell = 24;
    std::uint64_t render_seed = 0;
    bool render_paper = false;
    render_cmd->add_option("--instance", render_inst, "instance JSON file with a tiling")->required();
    render_cmd->add_option("--format", render_format, "svg or ascii");
    render_cmd->add_option("--cell-size", render_cell, "pixels per cell");
    render_cmd->add_option("--seed", render_seed, "palette seed");
    render_cmd->add_flag("--paper-encoding", render_paper, "read the instance as h/w/x/y placement rows");
    render_cmd->callback([&] {
        const Instance inst = load_instance(render_inst, render_paper);
        if (!inst.tiling) throw std::invalid_argument("render: instance carries no tiling");
        RenderSpec spec;
        spec.cell_size = render_cell;
        spec.palette_seed = render_seed;
        if (render_format == "svg")
            spec.format = RenderFormat::svg;
        else if (render_format == "ascii")
            spec.format = RenderFormat::ascii;
        else
            throw std::invalid_argument("--format must be svg or ascii");
        out << render(inst.lib, *inst.tiling, spec);
        err << "rendered " << inst.n << "x" << inst.m << " tiling (" << render_format << ")\n";
        exit_code = kExitYes;
    });

    std::vector<const char*> argv;
    argv.push_back("subtile");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        int code = app.exit(e, usage, usage);
        if (code == 0) {  // --help and friends
            err << usage.str();
            return kExitYes;
        }
        err << usage.str();
        emit(out, Json{{"error", usage.str()}});
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        emit(out, Json{{"error", e.what()}});
        return kExitError;
    }
    return exit_code;
}

}  // namespace subtile
