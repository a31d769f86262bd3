// Command-line front end: read polytope or family-spec JSON, run the checks,
// emit machine-readable reports (default) or human-readable summaries
// (--pretty).  Exit codes: 0 all verdicts pass, 1 a mathematical check
// failed, 2 malformed input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quadrigen/quadrigen.hpp"

namespace {

using namespace quadrigen;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

LatticePolytope load_polytope(const std::string& path, Int max_coord) {
    json j = parse_json(slurp(path));
    LatticePolytope p = polytope_from_json(j);
    for (const LatticePoint& v : p.vertices())
        for (int i = 0; i < p.dim(); ++i)
            if (v[i] > max_coord || v[i] < -max_coord)
                throw MalformedInput("coordinate " + std::to_string(v[i]) +
                                     " exceeds --max-coord " + std::to_string(max_coord));
    return p;
}

std::size_t oracle_rail_from_env() {
    if (const char* env = std::getenv("QUADRIGEN_MAX_POINTS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kOracleMaxPoints;
}

void emit(const RunResult& run, bool pretty) {
    if (pretty)
        std::cout << pretty_report(run.report);
    else
        std::cout << run.report.dump(2) << "\n";
}

std::optional<LatticePoint> parse_vertex_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::vector<Int> cs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            cs.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw MalformedInput("");
        } catch (const std::exception&) {
            throw MalformedInput("--vertex expects integers like 0,0 — got \"" + s + "\"");
        }
    }
    return LatticePoint::from_coords(cs);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadrigen: quadratic binomial presentations of smooth lattice 3-polytopes"};
    app.require_subcommand(1);

    std::string input = "-";
    bool pretty = false;
    Int max_coord = kMaxInputCoord;
    int oracle_degree = 0;  // 0 = oracle off
    unsigned long long seed = 1;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input)
            sub->add_option("input", input, "input JSON file, or - for stdin")->required();
        sub->add_flag("--pretty", pretty, "human-readable output instead of JSON");
        sub->add_option("--max-coord", max_coord, "reject inputs with larger coordinates")
            ->check(CLI::Range(Int(1), kMaxInputCoord));
    };

    CLI::App* cmd_check = app.add_subcommand("check", "full pipeline on a 3D polytope");
    add_common(cmd_check, true);
    cmd_check->add_option("--oracle", oracle_degree,
                          "also run the fiber-graph oracle up to this degree (e.g. 3)")
        ->check(CLI::Range(1, kOracleMaxDegree));

    CLI::App* cmd_gen = app.add_subcommand("gen", "build a family member from a spec");
    add_common(cmd_gen, true);

    CLI::App* cmd_koelman = app.add_subcommand("koelman", "degree verdict for a polygon");
    add_common(cmd_koelman, true);
    cmd_koelman->add_option("--oracle", oracle_degree,
                            "cross-validate against the fiber-graph oracle")
        ->check(CLI::Range(1, kOracleMaxDegree));

    std::string vertex_flag;
    CLI::App* cmd_diamond = app.add_subcommand("diamond", "basic-diamond search on a polygon");
    add_common(cmd_diamond, true);
    cmd_diamond->add_option("--vertex", vertex_flag, "origin vertex as x,y (default: all)");

    SweepOptions sweep;
    unsigned random_case3 = 0;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "certificates across family ranges");
    add_common(cmd_sweep, false);
    cmd_sweep->add_flag("--case1,!--no-case1", sweep.case1, "include the cut-simplex family");
    cmd_sweep->add_flag("--case2,!--no-case2", sweep.case2, "include the prism family");
    cmd_sweep->add_flag("--case3,!--no-case3", sweep.case3, "include the width-1 bundle family");
    cmd_sweep->add_option("--max-k", sweep.max_k, "case-1 dilation bound")
        ->check(CLI::Range(1, 3));
    cmd_sweep->add_option("--max-len", sweep.max_len, "case-2 edge-length bound")
        ->check(CLI::Range(1, 6));
    cmd_sweep->add_option("--coord-bound", sweep.coord_bound, "case-3 polygon coordinate bound")
        ->check(CLI::Range(1, 6));
    cmd_sweep->add_option("--max-edges", sweep.max_edges, "case-3 polygon edge bound")
        ->check(CLI::Range(3, 8));
    cmd_sweep->add_flag("--minkowski", sweep.minkowski_variants,
                        "add Minkowski sums of same-fan case-3 members");
    cmd_sweep->add_option("--limit", sweep.limit, "cap the number of instances (0 = all)");
    cmd_sweep->add_option("--random", random_case3,
                          "additional random same-fan case-3 pairs (uses --seed)")
        ->check(CLI::Range(0, 10000));
    cmd_sweep->add_option("--seed", seed, "seed for the randomized instances");
    cmd_sweep->add_option("--oracle", oracle_degree,
                          "also run the fiber-graph oracle on small instances")
        ->check(CLI::Range(1, kOracleMaxDegree));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    RunOptions opts;
    opts.oracle_max_points = oracle_rail_from_env();
    if (oracle_degree > 0) opts.oracle_degree = oracle_degree;

    try {
        if (cmd_check->parsed()) {
            RunResult run = run_check(load_polytope(input, max_coord), opts);
            emit(run, pretty);
            return run.exit_code;
        }
        if (cmd_gen->parsed()) {
            FamilySpec spec = family_spec_from_json(parse_json(slurp(input)));
            LatticePolytope q = build_family(spec);
            std::cout << polytope_to_json(q).dump(2) << "\n";
            return kExitPass;
        }
        if (cmd_koelman->parsed()) {
            RunResult run = run_koelman(load_polytope(input, max_coord), opts);
            emit(run, pretty);
            return run.exit_code;
        }
        if (cmd_diamond->parsed()) {
            RunResult run =
                run_diamond(load_polytope(input, max_coord), parse_vertex_flag(vertex_flag));
            emit(run, pretty);
            return run.exit_code;
        }
        if (cmd_sweep->parsed()) {
            sweep.oracle_degree = opts.oracle_degree;
            sweep.oracle_max_points = opts.oracle_max_points;
            RunResult run = run_sweep(sweep);
            if (random_case3 > 0) {
                std::mt19937_64 rng(seed);
                json& rows = run.report["instances"];
                std::size_t failed = run.report["failed"].get<std::size_t>();
                for (unsigned i = 0; i < random_case3; ++i) {
                    LatticePolytope f0 =
                        random_polygon_with_interior(rng, 3, sweep.max_edges, sweep.coord_bound);
                    // a second offset vector over the same fan: dilate keeps the fan
                    LatticePolytope f1 = dilate(f0, 2);
                    LatticePolytope q = build_family(Case3Spec{f0, f1});
                    bool ok = is_smooth(q).all_smooth;
                    if (ok)
                        for (const LatticePoint& v : q.vertices()) {
                            try {
                                decomposition_certificate(q, v);
                            } catch (const PropertyFails&) {
                                ok = false;
                                break;
                            }
                        }
                    rows.push_back(json{{"family", "case3(random)"},
                                        {"parameters",
                                         json{{"f0", polytope_to_json(f0)},
                                              {"f1", polytope_to_json(f1)}}},
                                        {"vertices", q.vertices().size()},
                                        {"lattice_points", lattice_points(q).size()},
                                        {"passed", ok}});
                    if (!ok) ++failed;
                }
                run.report["failed"] = failed;
                run.report["total"] = rows.size();
                run.report["passed"] = failed == 0;
                run.exit_code = failed == 0 ? kExitPass : kExitCheckFailed;
            }
            emit(run, pretty);
            return run.exit_code;
        }
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
