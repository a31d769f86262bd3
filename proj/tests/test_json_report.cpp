#include <doctest.h>

#include "test_support.hpp"

using namespace quadrigen;
using qtest::simplex3;

TEST_CASE("polytope JSON round trip recomputes facets") {
    LatticePolytope p = dilate(simplex3(), 2);
    json j = polytope_to_json(p);
    CHECK(polytope_from_json(j) == p);

    // non-vertex entries in the file are dropped on load
    json padded = json::parse(R"({"dim":2,"vertices":[[0,0],[2,0],[0,2],[1,1]]})");
    LatticePolytope q = polytope_from_json(padded);
    CHECK(q.vertices().size() == 3);

    CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"dim":4,"vertices":[[0,0,0,0]]})")),
                    MalformedInput);
    CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"vertices":[[0,0]]})")), MalformedInput);
    CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"dim":2,"vertices":[[0,0],[1,0]]})")),
                    MalformedInput);
    CHECK_THROWS_AS(
        polytope_from_json(json::parse(R"({"dim":2,"vertices":[[0,0.5],[1,0],[0,1]]})")),
        MalformedInput);
}

TEST_CASE("family spec JSON round trip") {
    FamilySpec c1 = Case1Spec{3, {0, 1, 0, 1}};
    FamilySpec back = family_spec_from_json(family_spec_to_json(c1));
    CHECK(build_family(back) == build_family(c1));

    FamilySpec c2 = Case2Spec{2, {1, 3, 3}, {1, 0}};
    CHECK(build_family(family_spec_from_json(family_spec_to_json(c2))) == build_family(c2));

    FamilySpec c3 = Case3Spec{qtest::unit_square(), dilate(qtest::unit_square(), 2)};
    CHECK(build_family(family_spec_from_json(family_spec_to_json(c3))) == build_family(c3));

    CHECK_THROWS_AS(family_spec_from_json(json::parse(R"({"family":"case9"})")), MalformedInput);
    CHECK_THROWS_AS(family_spec_from_json(json::parse(R"({"k":2})")), MalformedInput);
}

TEST_CASE("check report passes on the simplex and is byte-stable") {
    RunResult a = run_check(simplex3());
    CHECK(a.exit_code == kExitPass);
    CHECK(a.report["passed"].get<bool>());
    CHECK(a.report["smoothness"]["all_smooth"].get<bool>());
    CHECK(a.report["quadratic_presentation"]["binomials"].empty());
    CHECK(a.report["classification"]["family"] == "case1");

    RunResult b = run_check(simplex3());
    CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("check report fails on a singular apex") {
    LatticePolytope spike = convex_hull({LatticePoint(0, 0, 0), LatticePoint(1, 0, 0),
                                         LatticePoint(0, 1, 0), LatticePoint(0, 0, 1),
                                         LatticePoint(1, 1, 1)});
    RunResult r = run_check(spike);
    CHECK(r.exit_code == kExitCheckFailed);
    CHECK(!r.report["passed"].get<bool>());
    CHECK(!r.report["smoothness"]["all_smooth"].get<bool>());
    bool named = false;
    for (const auto& v : r.report["smoothness"]["vertices"])
        if (!v["smooth"].get<bool>() && v["vertex"] == json::array({1, 1, 1})) named = true;
    CHECK(named);
    CHECK(r.report["quadratic_presentation"].is_null());
}

TEST_CASE("check accepts the oracle flag and embeds the verdict") {
    RunOptions opts;
    opts.oracle_degree = 3;
    RunResult r = run_check(dilate(simplex3(), 2), opts);
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["oracle"]["all_connected"].get<bool>());
    CHECK(r.report["oracle"]["per_degree"].size() == 3);
}

TEST_CASE("koelman run cross-validates against the oracle") {
    LatticePolytope tri =
        convex_hull({LatticePoint(0, 0), LatticePoint(2, 1), LatticePoint(1, 2)});
    RunOptions opts;
    opts.oracle_degree = 3;
    RunResult r = run_koelman(tri, opts);
    // the verdict and the oracle agree that a cubic is required, so this
    // counts as a consistent (passing) cross-check of the exception
    CHECK(r.report["verdict"]["needs_cubics"].get<bool>());
    CHECK(!r.report["oracle"]["all_connected"].get<bool>());
    CHECK(r.report["oracle_consistent"].get<bool>());
    CHECK(r.exit_code == kExitPass);

    RunResult r2 = run_koelman(dilate(qtest::simplex2(), 3), opts);
    CHECK(!r2.report["verdict"]["needs_cubics"].get<bool>());
    CHECK(r2.report["oracle"]["all_connected"].get<bool>());
    CHECK(r2.exit_code == kExitPass);

    CHECK_THROWS_AS(run_koelman(simplex3()), MalformedInput);
    CHECK_THROWS_AS(run_check(qtest::unit_square()), MalformedInput);
}

TEST_CASE("diamond run reports constructions and failures") {
    LatticePolytope pent = convex_hull({LatticePoint(0, 0), LatticePoint(3, 0),
                                        LatticePoint(3, 1), LatticePoint(1, 3),
                                        LatticePoint(0, 3)});
    RunResult r = run_diamond(pent);
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["results"].size() == 5);

    RunResult one = run_diamond(pent, LatticePoint(0, 0));
    CHECK(one.report["results"].size() == 1);
    CHECK(one.report["results"][0]["diamond"]["opposite"] == json::array({2, 0}));

    RunResult bad = run_diamond(dilate(qtest::simplex2(), 3));
    CHECK(bad.exit_code == kExitCheckFailed);
    CHECK_THROWS_AS(run_diamond(pent, LatticePoint(9, 9)), MalformedInput);
}

TEST_CASE("sweep runs the small ranges clean") {
    SweepOptions opts;
    opts.max_k = 2;
    opts.max_len = 2;
    opts.coord_bound = 2;
    RunResult r = run_sweep(opts);
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["failed"].get<int>() == 0);
    CHECK(r.report["total"].get<int>() > 10);
    // deterministic output
    CHECK(r.report.dump() == run_sweep(opts).report.dump());
}

TEST_CASE("pretty rendering mentions the verdicts") {
    RunResult r = run_check(simplex3());
    std::string text = pretty_report(r.report);
    CHECK(text.find("smooth: yes") != std::string::npos);
    CHECK(text.find("result: PASS") != std::string::npos);
}

TEST_CASE("certificate JSON carries re-checkable witnesses") {
    LatticePolytope p = dilate(simplex3(), 2);
    json j = certificate_to_json(decomposition_certificate(p, LatticePoint(0, 0, 0)));
    CHECK(j["vertex"] == json::array({0, 0, 0}));
    for (const auto& w : j["witnesses"]) {
        LatticePoint mi = point_from_json(w["point"]);
        LatticePoint mk = point_from_json(w["pair"][0]);
        LatticePoint ml = point_from_json(w["pair"][1]);
        CHECK(mi + LatticePoint(0, 0, 0) == mk + ml);
    }
}

TEST_CASE("input digests distinguish polytopes") {
    CHECK(input_digest(simplex3()) == input_digest(simplex3()));
    CHECK(input_digest(simplex3()) != input_digest(dilate(simplex3(), 2)));
}
