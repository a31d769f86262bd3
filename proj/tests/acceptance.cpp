// Acceptance suite: one line per criterion, nonzero exit iff any fails.
// Each criterion enforces both its mathematical claim and its runtime bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quadrigen/quadrigen.hpp"

using namespace quadrigen;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double time_budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= time_budget_s) {
        ok = false;
        detail += " [over time budget]";
    }
    if (!ok) ++g_failures;
    std::printf("criterion %d: %s (%.2fs) %s%s\n", number, ok ? "PASS" : "FAIL", secs,
                label.c_str(), detail.empty() ? "" : (" -- " + detail).c_str());
    std::fflush(stdout);
}

LatticePolytope simplex3() {
    return convex_hull({LatticePoint(0, 0, 0), LatticePoint(1, 0, 0), LatticePoint(0, 1, 0),
                        LatticePoint(0, 0, 1)});
}

bool all_vertices_certified(const LatticePolytope& p) {
    if (!is_smooth(p).all_smooth) return false;
    for (const LatticePoint& v : p.vertices()) {
        try {
            decomposition_certificate(p, v);
        } catch (const PropertyFails&) {
            return false;
        }
    }
    return true;
}

std::vector<LatticePolytope> case12_instances(Int max_k, Int max_len) {
    std::vector<LatticePolytope> out;
    for (const Case1Spec& s : all_case1_specs(max_k)) out.push_back(build_family(s));
    for (const Case2Spec& s : all_case2_specs(max_len)) out.push_back(build_family(s));
    return out;
}

std::vector<LatticePolytope> case3_instances(std::string& detail) {
    SweepOptions opts;
    opts.case1 = false;
    opts.case2 = false;
    opts.case3 = true;
    opts.max_edges = 5;
    opts.coord_bound = 4;
    opts.minkowski_variants = true;
    std::vector<LatticePolytope> out;
    std::size_t bundles = 0, sums = 0;
    for (SweepInstance& inst : sweep_instances(opts)) {
        (inst.family == "case3" ? bundles : sums) += 1;
        out.push_back(std::move(inst.polytope));
    }
    detail = std::to_string(bundles) + " bundles, " + std::to_string(sums) +
             " Minkowski variants, deduplicated up to equivalence";
    return out;
}

}  // namespace

int main() {
    criterion(1, "lattice point counts of k*Delta3", 1.0, [](std::string& detail) {
        LatticePolytope d3 = simplex3();
        for (Int k = 1; k <= 6; ++k) {
            Int expect = (k + 1) * (k + 2) * (k + 3) / 6;
            if (static_cast<Int>(lattice_points(dilate(d3, k)).size()) != expect) return false;
        }
        for (Int k = 1; k <= 3; ++k)
            if (!interior_lattice_points(dilate(d3, k)).empty()) return false;
        auto i4 = interior_lattice_points(dilate(d3, 4));
        if (i4.size() != 1 || !(i4[0] == LatticePoint(1, 1, 1))) return false;
        detail = "counts 4,10,20,35,56,84; interiors 0,0,0,1";
        return true;
    });

    criterion(2, "certificates across the cut-simplex and prism families", 30.0,
              [](std::string& detail) {
                  auto instances = case12_instances(3, 3);
                  if (instances.size() < 50) {
                      detail = "only " + std::to_string(instances.size()) + " instances";
                      return false;
                  }
                  for (const LatticePolytope& p : instances)
                      if (!all_vertices_certified(p)) {
                          detail = "failure at a family member";
                          return false;
                      }
                  detail = std::to_string(instances.size()) + " instances, every vertex";
                  return true;
              });

    criterion(3, "certificates across width-1 bundles and their sums", 120.0,
              [](std::string& detail) {
                  std::string mix;
                  auto instances = case3_instances(mix);
                  if (instances.empty()) return false;
                  for (const LatticePolytope& p : instances)
                      if (!all_vertices_certified(p)) {
                          detail = "failure at a bundle instance";
                          return false;
                      }
                  detail = std::to_string(instances.size()) + " instances (" + mix + ")";
                  return true;
              });

    criterion(4, "fiber-graph oracle confirms degree-2 generation", 300.0,
              [](std::string& detail) {
                  std::string mix;
                  auto prisms = case12_instances(3, 3);
                  auto bundles = case3_instances(mix);
                  int run = 0, from_prisms = 0, from_bundles = 0;
                  auto drive = [&](const std::vector<LatticePolytope>& list, int quota,
                                   int& counter) {
                      for (std::size_t i = 0; i < list.size() && counter < quota; i += 3) {
                          if (lattice_points(list[i]).size() > 25) continue;
                          if (!fiber_graph_oracle(list[i], 3).all_connected) return false;
                          ++counter;
                          ++run;
                      }
                      return true;
                  };
                  if (!drive(prisms, 12, from_prisms) || !drive(bundles, 12, from_bundles)) {
                      detail = "disconnected fiber on a certified instance";
                      return false;
                  }
                  detail = std::to_string(run) + " instances (" + std::to_string(from_prisms) +
                           " simplex/prism, " + std::to_string(from_bundles) +
                           " bundle), all fibers connected to degree 3";
                  return run >= 20;
              });

    criterion(5, "the 3-point-boundary triangle needs a cubic, 3*Delta2 does not", 10.0,
              [](std::string& detail) {
                  LatticePolytope tri = convex_hull(
                      {LatticePoint(0, 0), LatticePoint(2, 1), LatticePoint(1, 2)});
                  KoelmanVerdict kv = koelman_classify(tri);
                  FiberGraphReport rep = fiber_graph_oracle(tri, 3);
                  if (!kv.needs_cubics || rep.all_connected || !rep.first_failure) return false;
                  if (rep.first_failure->degree != 3) return false;

                  LatticePolytope big = dilate(
                      convex_hull({LatticePoint(0, 0), LatticePoint(1, 0), LatticePoint(0, 1)}),
                      3);
                  KoelmanVerdict kv2 = koelman_classify(big);
                  FiberGraphReport rep2 = fiber_graph_oracle(big, 3);
                  if (kv2.needs_cubics || !rep2.all_connected) return false;
                  detail = "disconnected fiber exemplar at degree 3, sum " +
                           rep.first_failure->fiber_sum.str();
                  return true;
              });

    criterion(6, "basic diamonds on sampled nonsingular polygons (4..8 edges)", 60.0,
              [](std::string& detail) {
                  std::mt19937_64 rng(20240817);
                  int samples = 0, vertices = 0;
                  for (int trial = 0; trial < 100; ++trial) {
                      LatticePolytope f = random_polygon_with_interior(rng, 4, 8, 8);
                      AffineUnimodularMap t = random_unimodular_map(rng, 2, 3, 2);
                      f = apply_map(t, f);
                      ++samples;
                      for (const LatticePoint& v : f.vertices()) {
                          DiamondSearchResult r = find_basic_diamond(f, v);
                          std::vector<LatticePoint> corners(r.diamond.corners.begin(),
                                                            r.diamond.corners.end());
                          LatticePolytope s = convex_hull(corners);
                          if (lattice_points(s).size() != 4) return false;
                          for (const LatticePoint& q : lattice_points(s)) {
                              if (!r.normalized.contains(q)) return false;
                              if (!r.normalized.contains(q - r.diamond.opposite)) return false;
                          }
                          ++vertices;
                      }
                  }
                  detail = std::to_string(samples) + " polygons, " + std::to_string(vertices) +
                           " vertex constructions, both containments exhaustively";
                  return samples >= 100;
              });

    criterion(7, "curve-section counts give the quadric bound", 30.0, [](std::string& detail) {
        auto instances = case12_instances(3, 3);
        for (const LatticePolytope& p : instances) {
            FujitaCounts fc = fujita_counts(p);
            if (fc.chi < fc.genus + 3) {
                detail = "chi < genus + 3 at a family member";
                return false;
            }
        }
        detail = std::to_string(instances.size()) + " instances, chi >= genus + 3";
        return true;
    });

    criterion(8, "randomized property suite, 1000 trials each", 120.0, [](std::string& detail) {
        std::mt19937_64 rng(97);
        auto random_point = [&](int dim, Int bound) {
            std::uniform_int_distribution<Int> d(-bound, bound);
            return dim == 2 ? LatticePoint(d(rng), d(rng))
                            : LatticePoint(d(rng), d(rng), d(rng));
        };
        auto random_poly = [&](int dim, Int bound, int n) {
            while (true) {
                std::vector<LatticePoint> pts;
                for (int i = 0; i < n; ++i) pts.push_back(random_point(dim, bound));
                try {
                    return convex_hull(std::move(pts));
                } catch (const DegenerateInput&) {
                }
            }
        };

        for (int t = 0; t < 1000; ++t) {  // unimodular invariance
            int dim = t % 2 ? 2 : 3;
            LatticePolytope p = random_poly(dim, 3, dim + 2 + t % 3);
            LatticePolytope q = apply_map(random_unimodular_map(rng, dim), p);
            if (lattice_points(p).size() != lattice_points(q).size()) return false;
            if (interior_lattice_points(p).size() != interior_lattice_points(q).size())
                return false;
            if (is_smooth(p).all_smooth != is_smooth(q).all_smooth) return false;
        }

        for (int t = 0; t < 1000; ++t) {  // Pick's theorem
            LatticePolytope f = random_poly(2, 5, 4 + t % 5);
            Int i = static_cast<Int>(interior_lattice_points(f).size());
            Int b = boundary_lattice_count(f);
            if (twice_area(f) != 2 * i + b - 2) return false;
        }

        for (int t = 0; t < 1000; ++t) {  // hull idempotence
            int dim = t % 2 ? 2 : 3;
            LatticePolytope p = random_poly(dim, 3, dim + 2 + t % 3);
            if (!(convex_hull(lattice_points(p)) == p)) return false;
        }

        auto members = case12_instances(2, 2);
        for (int t = 0; t < 1000; ++t) {  // certificate soundness
            const LatticePolytope& p = members[static_cast<std::size_t>(t) % members.size()];
            std::uniform_int_distribution<std::size_t> pick(0, p.vertices().size() - 1);
            LatticePoint v = p.vertices()[pick(rng)];
            DecompositionCertificate cert = decomposition_certificate(p, v);
            auto pts = lattice_points(p);
            auto member = [&](const LatticePoint& q) {
                return std::binary_search(pts.begin(), pts.end(), q, graded_lex_less);
            };
            for (const Witness& w : cert.witnesses) {
                if (!(w.point + v == w.first + w.second)) return false;
                if (!member(w.first) || !member(w.second)) return false;
                if (w.first == v || w.second == v) return false;
            }
        }

        for (int t = 0; t < 1000; ++t) {  // exponent identity of emitted quadrics
            const LatticePolytope& p = members[static_cast<std::size_t>(t) % members.size()];
            QuadraticPresentation pres = quadratic_presentation(p);
            for (const QuadraticBinomial& b : pres.binomials) {
                const auto& pt = pres.point_order;
                if (!(pt[static_cast<std::size_t>(b.chart)] + pt[static_cast<std::size_t>(b.i)] ==
                      pt[static_cast<std::size_t>(b.k)] + pt[static_cast<std::size_t>(b.l)]))
                    return false;
            }
        }
        detail = "5 properties x 1000 trials";
        return true;
    });

    std::printf("%s\n", g_failures == 0 ? "acceptance: ALL PASS" : "acceptance: FAILURES");
    return g_failures;
}
