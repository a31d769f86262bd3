#ifndef QUADRIGEN_REPORT_HPP
#define QUADRIGEN_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadrigen/json_io.hpp"

namespace quadrigen {

// Exit-code contract shared by every subcommand: 0 all verdicts pass,
// 1 a mathematical check failed, 2 malformed input or usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunOptions {
    std::optional<int> oracle_degree;  // run the fiber oracle when set
    std::size_t oracle_max_points = kOracleMaxPoints;
};

struct RunResult {
    json report;
    int exit_code = kExitPass;
};

// smoothness -> adjoint -> classification -> per-vertex certificates ->
// quadric assembly, plus the fiber oracle when requested.  Every verdict
// carries the data needed to re-check it by hand.
inline RunResult run_check(const LatticePolytope& p, const RunOptions& opts = {}) {
    if (p.dim() != 3)
        throw MalformedInput("check expects a 3D polytope; use the koelman command for polygons");
    RunResult run;
    json& rep = run.report;
    rep["command"] = "check";
    rep["input_digest"] = input_digest(p);
    rep["options"] =
        json{{"oracle_degree", opts.oracle_degree ? json(*opts.oracle_degree) : json(nullptr)}};
    rep["polytope"] = polytope_to_json(p);
    rep["lattice_point_count"] = lattice_points(p).size();

    SmoothnessReport smooth = is_smooth(p);
    rep["smoothness"] = smoothness_to_json(smooth);
    bool adjoint = adjoint_vanishes(p);
    rep["adjoint_vanishes"] = adjoint;
    rep["classification"] = classification_to_json(classify(p));
    rep["fujita"] = adjoint ? fujita_to_json(fujita_counts(p)) : json(nullptr);

    bool certs_ok = true;
    json certs = json::array();
    for (const LatticePoint& v : p.vertices()) {
        if (!is_smooth_at(p, v)) {
            certs.push_back(json{{"vertex", point_to_json(v)},
                                 {"status", "skipped"},
                                 {"reason", "vertex is not smooth"}});
            continue;
        }
        try {
            certs.push_back(certificate_to_json(decomposition_certificate(p, v)));
        } catch (const PropertyFails& e) {
            certs_ok = false;
            certs.push_back(json{{"vertex", point_to_json(v)},
                                 {"status", "failed"},
                                 {"unwitnessed", points_to_json(e.unwitnessed)}});
        }
    }
    rep["certificates"] = json{{"all_hold", certs_ok && smooth.all_smooth}, {"per_vertex", certs}};

    if (smooth.all_smooth && certs_ok)
        rep["quadratic_presentation"] = presentation_to_json(quadratic_presentation(p));
    else
        rep["quadratic_presentation"] = nullptr;

    bool oracle_ok = true;
    if (opts.oracle_degree) {
        FiberGraphReport orep = fiber_graph_oracle(p, *opts.oracle_degree, opts.oracle_max_points);
        rep["oracle"] = oracle_report_to_json(orep);
        oracle_ok = orep.all_connected;
    } else {
        rep["oracle"] = nullptr;
    }

    bool passed = smooth.all_smooth && certs_ok && oracle_ok;
    rep["passed"] = passed;
    run.exit_code = passed ? kExitPass : kExitCheckFailed;
    return run;
}

// Koelman verdict for a polygon, optionally cross-validated against the
// fiber oracle: quadrics suffice exactly when every fiber through degree 3
// is connected.
inline RunResult run_koelman(const LatticePolytope& f, const RunOptions& opts = {}) {
    if (f.dim() != 2) throw MalformedInput("koelman expects a 2D polytope");
    RunResult run;
    json& rep = run.report;
    rep["command"] = "koelman";
    rep["input_digest"] = input_digest(f);
    rep["polytope"] = polytope_to_json(f);
    KoelmanVerdict verdict = koelman_classify(f);
    rep["verdict"] = koelman_to_json(verdict);

    bool passed = true;
    if (opts.oracle_degree) {
        FiberGraphReport orep = fiber_graph_oracle(f, *opts.oracle_degree, opts.oracle_max_points);
        rep["oracle"] = oracle_report_to_json(orep);
        passed = orep.all_connected == !verdict.needs_cubics;
        rep["oracle_consistent"] = passed;
    } else {
        rep["oracle"] = nullptr;
    }
    rep["passed"] = passed;
    run.exit_code = passed ? kExitPass : kExitCheckFailed;
    return run;
}

// Basic-diamond search at one vertex or at every vertex of a polygon.
inline RunResult run_diamond(const LatticePolytope& f,
                             const std::optional<LatticePoint>& vertex = std::nullopt) {
    if (f.dim() != 2) throw MalformedInput("diamond expects a 2D polytope");
    RunResult run;
    json& rep = run.report;
    rep["command"] = "diamond";
    rep["input_digest"] = input_digest(f);
    rep["polytope"] = polytope_to_json(f);

    std::vector<LatticePoint> targets;
    if (vertex) {
        if (!f.is_vertex(*vertex)) throw MalformedInput(vertex->str() + " is not a vertex");
        targets.push_back(*vertex);
    } else {
        targets = f.vertices();
    }

    bool all_ok = true;
    json results = json::array();
    for (const LatticePoint& v : targets) {
        json item{{"origin_vertex", point_to_json(v)}};
        try {
            DiamondSearchResult r = find_basic_diamond(f, v);
            item["ok"] = true;
            item.update(diamond_to_json(r));
        } catch (const Error& e) {
            all_ok = false;
            item["ok"] = false;
            item["error"] = e.what();
        }
        results.push_back(item);
    }
    rep["results"] = results;
    rep["passed"] = all_ok;
    run.exit_code = all_ok ? kExitPass : kExitCheckFailed;
    return run;
}

// ---------------------------------------------------------------------------
// Sweeps.

struct SweepOptions {
    bool case1 = true;
    bool case2 = true;
    bool case3 = true;
    Int max_k = 3;           // case-1 dilation bound
    Int max_len = 3;         // case-2 edge-length bound
    Int coord_bound = 3;     // case-3 polygon coordinate bound
    std::size_t max_edges = 5;
    bool minkowski_variants = false;  // add pairwise sums of same-fan case-3 members
    std::optional<int> oracle_degree;
    std::size_t oracle_max_points = kOracleMaxPoints;
    std::size_t limit = 0;  // 0 = no cap
};

struct SweepInstance {
    std::string family;
    json parameters;
    LatticePolytope polytope;
};

inline std::vector<SweepInstance> sweep_instances(const SweepOptions& opts) {
    std::vector<SweepInstance> out;
    if (opts.case1)
        for (const Case1Spec& s : all_case1_specs(opts.max_k))
            out.push_back(SweepInstance{"case1", family_spec_to_json(s), build_family(s)});
    if (opts.case2)
        for (const Case2Spec& s : all_case2_specs(opts.max_len))
            out.push_back(SweepInstance{"case2", family_spec_to_json(s), build_family(s)});
    if (opts.case3) {
        GeneratedPolygons gp = enumerate_nonsingular_polygons(3, opts.max_edges,
                                                              opts.coord_bound, opts.coord_bound);
        // All same-fan polygon pairs, with the resulting bundles deduplicated
        // up to unimodular equivalence; this keeps twisted pairs (F, U F)
        // that a polygon-level deduplication would lose.
        std::set<std::vector<std::vector<Int>>> seen;
        auto fresh = [&seen](const LatticePolytope& q) {
            std::vector<std::vector<Int>> key;
            for (const LatticePoint& v : canonical_form(q)) key.push_back(v.coords());
            return seen.insert(key).second;
        };
        std::vector<LatticePolytope> members;
        for (std::size_t fi = 0; fi < gp.fans.size(); ++fi) {
            const auto& polys = gp.by_fan[fi];
            for (std::size_t a = 0; a < polys.size(); ++a)
                for (std::size_t b = a; b < polys.size(); ++b) {
                    Case3Spec s{polys[a], polys[b]};
                    LatticePolytope q = build_family(s);
                    if (!fresh(q)) continue;
                    members.push_back(q);
                    out.push_back(SweepInstance{"case3", family_spec_to_json(s), q});
                }
        }
        if (opts.minkowski_variants) {
            // group members by their vertex-cone multiset (the normal fan);
            // sums within one group stay ample on the same variety
            auto fan_key = [](const LatticePolytope& p) {
                std::vector<std::vector<std::vector<Int>>> cones;
                for (const LatticePoint& v : p.vertices()) {
                    std::vector<std::vector<Int>> gens;
                    for (const LatticePoint& d : detail::edge_directions_at(p, v))
                        gens.push_back(d.coords());
                    std::sort(gens.begin(), gens.end());
                    cones.push_back(std::move(gens));
                }
                std::sort(cones.begin(), cones.end());
                return cones;
            };
            std::map<std::vector<std::vector<std::vector<Int>>>, std::vector<std::size_t>> groups;
            for (std::size_t a = 0; a < members.size(); ++a)
                groups[fan_key(members[a])].push_back(a);
            for (const auto& [key, idxs] : groups)
                for (std::size_t x = 0; x < idxs.size(); ++x)
                    for (std::size_t y = x; y < idxs.size(); ++y) {
                        const LatticePolytope& pa = members[idxs[x]];
                        const LatticePolytope& pb = members[idxs[y]];
                        LatticePolytope sum = minkowski_sum(pa, pb);
                        if (!fresh(sum)) continue;
                        json params{{"sum_of", json::array({polytope_to_json(pa),
                                                            polytope_to_json(pb)})}};
                        out.push_back(SweepInstance{"case3+case3", params, sum});
                    }
        }
    }
    if (opts.limit && out.size() > opts.limit)
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(opts.limit), out.end());
    return out;
}

// Certificates at every vertex of every family member in range; a row per
// instance, nonzero exit iff any instance fails.
inline RunResult run_sweep(const SweepOptions& opts) {
    RunResult run;
    json& rep = run.report;
    rep["command"] = "sweep";
    json rows = json::array();
    std::size_t failed = 0;
    std::vector<SweepInstance> instances = sweep_instances(opts);
    for (const SweepInstance& inst : instances) {
        const LatticePolytope& p = inst.polytope;
        json row{{"family", inst.family},
                 {"parameters", inst.parameters},
                 {"vertices", p.vertices().size()},
                 {"lattice_points", lattice_points(p).size()}};
        bool ok = is_smooth(p).all_smooth;
        std::string failure;
        if (!ok) failure = "not smooth";
        if (ok)
            for (const LatticePoint& v : p.vertices()) {
                try {
                    decomposition_certificate(p, v);
                } catch (const PropertyFails& e) {
                    ok = false;
                    failure = e.what();
                    break;
                }
            }
        if (ok && opts.oracle_degree) {
            if (lattice_points(p).size() <= opts.oracle_max_points) {
                FiberGraphReport orep =
                    fiber_graph_oracle(p, *opts.oracle_degree, opts.oracle_max_points);
                row["oracle_connected"] = orep.all_connected;
                if (!orep.all_connected) {
                    ok = false;
                    failure = "fiber oracle found a disconnected fiber";
                }
            } else {
                row["oracle_connected"] = nullptr;
            }
        }
        row["passed"] = ok;
        if (!ok) {
            row["failure"] = failure;
            ++failed;
        }
        rows.push_back(row);
    }
    rep["instances"] = rows;
    rep["total"] = instances.size();
    rep["failed"] = failed;
    rep["passed"] = failed == 0;
    run.exit_code = failed == 0 ? kExitPass : kExitCheckFailed;
    return run;
}

// ---------------------------------------------------------------------------
// Human-readable rendering.

inline std::string pretty_report(const json& rep) {
    std::ostringstream os;
    const std::string cmd = rep.value("command", "?");
    os << "== " << cmd << " ==\n";
    if (rep.contains("input_digest")) os << "input: " << rep["input_digest"].get<std::string>() << "\n";
    if (cmd == "check") {
        const auto& sm = rep["smoothness"];
        os << "smooth: " << (sm["all_smooth"].get<bool>() ? "yes" : "NO") << " ("
           << sm["vertices"].size() << " vertices)\n";
        for (const auto& v : sm["vertices"])
            if (!v["smooth"].get<bool>())
                os << "  singular at " << v["vertex"].dump() << " (" << v["edge_count"].dump()
                   << " edges, det " << v["cone_determinant"].dump() << ")\n";
        os << "adjoint vanishes: " << (rep["adjoint_vanishes"].get<bool>() ? "yes" : "no") << "\n";
        os << "family: " << rep["classification"]["family"].get<std::string>() << "\n";
        os << "certificates: "
           << (rep["certificates"]["all_hold"].get<bool>() ? "all vertices" : "FAILED") << "\n";
        if (!rep["quadratic_presentation"].is_null())
            os << "quadrics: " << rep["quadratic_presentation"]["binomials"].size() << "\n";
        if (!rep["oracle"].is_null())
            os << "oracle: "
               << (rep["oracle"]["all_connected"].get<bool>() ? "all fibers connected"
                                                              : "DISCONNECTED fiber")
               << "\n";
    } else if (cmd == "koelman") {
        const auto& v = rep["verdict"];
        os << "normally generated: yes\n";
        os << "interior points: " << v["interior_count"].dump()
           << ", boundary points: " << v["boundary_count"].dump() << "\n";
        os << "needs cubics: " << (v["needs_cubics"].get<bool>() ? "yes" : "no") << "\n";
        if (!rep["oracle"].is_null())
            os << "oracle agrees: " << (rep["oracle_consistent"].get<bool>() ? "yes" : "NO") << "\n";
    } else if (cmd == "diamond") {
        for (const auto& r : rep["results"]) {
            os << "vertex " << r["origin_vertex"].dump() << ": ";
            if (r["ok"].get<bool>())
                os << "case " << r["case"].dump() << " diamond at "
                   << r["diamond"]["distinguished_vertex"].dump() << ", opposite "
                   << r["diamond"]["opposite"].dump() << "\n";
            else
                os << "FAILED: " << r["error"].get<std::string>() << "\n";
        }
    } else if (cmd == "sweep") {
        for (const auto& row : rep["instances"]) {
            os << (row["passed"].get<bool>() ? "pass " : "FAIL ") << row["family"].get<std::string>()
               << " " << row["parameters"].dump() << "\n";
        }
        os << rep["total"].dump() << " instance(s), " << rep["failed"].dump() << " failed\n";
    }
    os << "result: " << (rep["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace quadrigen

#endif
