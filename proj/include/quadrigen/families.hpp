#ifndef QUADRIGEN_FAMILIES_HPP
#define QUADRIGEN_FAMILIES_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quadrigen/polygon.hpp"
#include "quadrigen/polytope.hpp"

namespace quadrigen {

// ---------------------------------------------------------------------------
// The three families of smooth 3-polytopes without interior lattice points.
//
// Case 1: k*Delta3 with unit-simplex cuts at up to four corners.
// Case 2: a prism over Delta2 or 2*Delta2 with a tilted roof, optionally cut
//         once at the base edge and once at the roof edge (2*Delta2 only).
// Case 3: Conv{F0 x 0, F1 x 1} for nonsingular polygons F0, F1 with a common
//         normal fan.

struct Case1Spec {
    Int k = 1;
    // Cut sizes at the corners (0,0,0), (k,0,0), (0,k,0), (0,0,k).
    std::array<Int, 4> cuts{0, 0, 0, 0};
};

struct Case2Spec {
    Int base_scale = 1;               // 1 or 2
    std::array<Int, 3> lengths{1, 1, 1};  // edge lengths d, e, f over (k,0), (0,k), (0,0)
    std::array<Int, 2> cuts{0, 0};        // base cut, roof cut (base 2*Delta2 only)
};

struct Case3Spec {
    LatticePolytope f0;
    LatticePolytope f1;
};

using FamilySpec = std::variant<Case1Spec, Case2Spec, Case3Spec>;

namespace detail {

inline LatticePolytope hull_of_filtered_simplex_points(
    Int k, const std::vector<Facet>& extra, const LatticePoint& lo, const LatticePoint& hi) {
    std::vector<LatticePoint> pts;
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y)
            for (Int z = lo[2]; z <= hi[2]; ++z) {
                LatticePoint q(x, y, z);
                if (x < 0 || y < 0 || z < 0) continue;
                if (x + y + z > k && k > 0) continue;
                bool ok = true;
                for (const Facet& f : extra) ok &= f.eval(q) >= 0;
                if (ok) pts.push_back(q);
            }
    return convex_hull(std::move(pts));
}

inline void require_family_output(const LatticePolytope& q, const char* family) {
    if (!is_smooth(q).all_smooth)
        throw InvalidParameters(std::string(family) + " parameters produced a singular polytope");
    if (!interior_lattice_points(q).empty())
        throw InvalidParameters(std::string(family) +
                                " parameters produced interior lattice points");
}

// Same primitive edge-normal set; for polygons that is exactly equality of
// the normal fans, the cyclic order being forced by the angles.
inline bool same_polygon_fan(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.facets().size() != b.facets().size()) return false;
    std::vector<LatticePoint> na, nb;
    for (const Facet& f : a.facets()) na.push_back(f.normal);
    for (const Facet& f : b.facets()) nb.push_back(f.normal);
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    return na == nb;
}

}  // namespace detail

inline LatticePolytope build_family(const Case1Spec& spec) {
    if (spec.k < 1 || spec.k > 3)
        throw InvalidParameters("case 1 requires 1 <= k <= 3, got k=" + std::to_string(spec.k));
    for (Int l : spec.cuts)
        if (l < 0) throw InvalidParameters("case 1 cut sizes must be >= 0");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && spec.cuts[static_cast<std::size_t>(i)] + spec.cuts[static_cast<std::size_t>(j)] >= spec.k)
                throw InvalidParameters(
                    "case 1 cuts violate l_i + l_j < k: " +
                    std::to_string(spec.cuts[static_cast<std::size_t>(i)]) + " + " +
                    std::to_string(spec.cuts[static_cast<std::size_t>(j)]) +
                    " >= " + std::to_string(spec.k));

    std::vector<Facet> cuts;
    if (spec.cuts[0] > 0)
        cuts.push_back(Facet{LatticePoint(1, 1, 1), -spec.cuts[0]});  // x+y+z >= l0
    if (spec.cuts[1] > 0)
        cuts.push_back(Facet{LatticePoint(-1, 0, 0), spec.k - spec.cuts[1]});  // x <= k-l1
    if (spec.cuts[2] > 0)
        cuts.push_back(Facet{LatticePoint(0, -1, 0), spec.k - spec.cuts[2]});
    if (spec.cuts[3] > 0)
        cuts.push_back(Facet{LatticePoint(0, 0, -1), spec.k - spec.cuts[3]});
    LatticePolytope q = detail::hull_of_filtered_simplex_points(
        spec.k, cuts, LatticePoint(0, 0, 0), LatticePoint(spec.k, spec.k, spec.k));
    detail::require_family_output(q, "case 1");
    return q;
}

inline LatticePolytope build_family(const Case2Spec& spec) {
    const Int k = spec.base_scale;
    const Int d = spec.lengths[0], e = spec.lengths[1], f = spec.lengths[2];
    const Int l0 = spec.cuts[0], l1 = spec.cuts[1];
    if (k != 1 && k != 2) throw InvalidParameters("case 2 base scale must be 1 or 2");
    if (d < 1 || e < 1 || f < 1) throw InvalidParameters("case 2 edge lengths must be >= 1");
    if ((e - f) % k != 0 || (e - d) % k != 0)
        throw InvalidParameters("case 2 requires e-f and e-d divisible by the base scale");
    if (l0 < 0 || l1 < 0 || l0 >= k || l1 >= k)
        throw InvalidParameters("case 2 cuts must satisfy 0 <= l < base scale");
    if (f <= l0 + l1)
        throw InvalidParameters("case 2 requires f > l0 + l1 so the short column survives");

    // Heights of the uncut prism over (k,0), (0,k), (0,0); the cut edge
    // lengths then come out as d, e and the untouched column as f - l0 - l1.
    const Int h1 = d + l0 + l1, h2 = e + l0 + l1, h0 = f - l0 - l1;
    const Int alpha = (h1 - h0) / k, beta = (h2 - h0) / k;

    std::vector<Facet> facets;
    facets.push_back(Facet{LatticePoint(1, 0, 0), 0});
    facets.push_back(Facet{LatticePoint(0, 1, 0), 0});
    facets.push_back(Facet{LatticePoint(-1, -1, 0), k});
    facets.push_back(Facet{LatticePoint(0, 0, 1), 0});
    facets.push_back(Facet{primitive(LatticePoint(alpha, beta, -1)),
                           0});  // roof plane through (0,0,h0); offset fixed below
    facets.back().offset = -dot(facets.back().normal, LatticePoint(0, 0, h0));
    if (l0 > 0) facets.push_back(Facet{LatticePoint(-1, -1, 1), k - l0});
    if (l1 > 0)
        facets.push_back(
            Facet{primitive(LatticePoint(alpha - 1, beta - 1, -1)), h0 + k - l1});

    const Int zmax = std::max({h0, h1, h2});
    std::vector<LatticePoint> pts;
    for (Int x = 0; x <= k; ++x)
        for (Int y = 0; y <= k; ++y)
            for (Int z = 0; z <= zmax; ++z) {
                LatticePoint q(x, y, z);
                bool ok = true;
                for (const Facet& fc : facets) ok &= fc.eval(q) >= 0;
                if (ok) pts.push_back(q);
            }
    LatticePolytope q = convex_hull(std::move(pts));
    detail::require_family_output(q, "case 2");
    return q;
}

inline LatticePolytope build_family(const Case3Spec& spec) {
    if (spec.f0.dim() != 2 || spec.f1.dim() != 2)
        throw InvalidParameters("case 3 slices must be 2D polygons");
    if (!is_nonsingular_polygon(spec.f0) || !is_nonsingular_polygon(spec.f1))
        throw InvalidParameters("case 3 slices must be nonsingular polygons");
    if (!detail::same_polygon_fan(spec.f0, spec.f1))
        throw InvalidParameters("case 3 slices must share a normal fan");
    std::vector<LatticePoint> pts;
    for (const LatticePoint& v : spec.f0.vertices()) pts.emplace_back(v[0], v[1], 0);
    for (const LatticePoint& v : spec.f1.vertices()) pts.emplace_back(v[0], v[1], 1);
    LatticePolytope q = convex_hull(std::move(pts));
    detail::require_family_output(q, "case 3");
    return q;
}

inline LatticePolytope build_family(const FamilySpec& spec) {
    return std::visit([](const auto& s) { return build_family(s); }, spec);
}

inline bool adjoint_vanishes(const LatticePolytope& q) {
    if (q.dim() != 3) throw DimensionMismatch("adjoint_vanishes expects a 3D polytope");
    return interior_lattice_points(q).empty();
}

// ---------------------------------------------------------------------------
// Canonical forms and equivalence of smooth polytopes.

namespace detail {

inline std::vector<std::vector<LatticePoint>> generator_orderings(
    const std::vector<LatticePoint>& dirs) {
    std::vector<LatticePoint> sorted = dirs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<LatticePoint>> perms;
    do {
        perms.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return perms;
}

inline bool point_list_less(const std::vector<LatticePoint>& a,
                            const std::vector<LatticePoint>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        graded_lex_less);
}

}  // namespace detail

// Smallest sorted vertex list over all normalizations (vertex to origin,
// edge directions to the standard basis in every order).  Two smooth
// polytopes are affinely unimodularly equivalent iff their canonical forms
// agree.
inline std::vector<LatticePoint> canonical_form(const LatticePolytope& p) {
    std::optional<std::vector<LatticePoint>> best;
    for (const LatticePoint& v : p.vertices()) {
        auto dirs = detail::edge_directions_at(p, v);
        if (static_cast<int>(dirs.size()) != p.dim()) continue;
        for (const auto& order : detail::generator_orderings(dirs)) {
            IntMatrix m = IntMatrix::from_columns(order);
            Int det = m.determinant();
            if (det != 1 && det != -1) continue;
            IntMatrix a = m.inverse_unimodular();
            AffineUnimodularMap t(a, -a.apply(v));
            std::vector<LatticePoint> img;
            img.reserve(p.vertices().size());
            for (const LatticePoint& w : p.vertices()) img.push_back(t.apply(w));
            std::sort(img.begin(), img.end());
            if (!best || detail::point_list_less(img, *best)) best = std::move(img);
        }
    }
    if (!best) throw NotSmoothVertex("polytope has no smooth vertex to normalize at");
    return *best;
}

inline bool unimodularly_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.dim() != q.dim() || p.vertices().size() != q.vertices().size()) return false;
    return canonical_form(p) == canonical_form(q);
}

// ---------------------------------------------------------------------------
// Cayley slices.

namespace detail {

struct ParallelPair {
    LatticePoint normal;  // primitive; levels run from base_level to base_level + width
    Int base_level = 0;
    Int width = 0;
};

inline std::vector<ParallelPair> parallel_facet_pairs(const LatticePolytope& q) {
    std::vector<ParallelPair> out;
    const auto& fs = q.facets();
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            if (!(fs[i].normal == -fs[j].normal)) continue;
            Int width = checked_add(fs[i].offset, fs[j].offset);
            if (width < 1) continue;
            // Orient along the canonically larger of the two normals, so a
            // bundle built over the xy-plane slices in its own coordinates.
            const Facet& up = graded_lex_less(fs[i].normal, fs[j].normal) ? fs[j] : fs[i];
            out.push_back(ParallelPair{up.normal, checked_neg(up.offset), width});
        }
    std::sort(out.begin(), out.end(), [](const ParallelPair& a, const ParallelPair& b) {
        if (a.width != b.width) return a.width < b.width;
        return graded_lex_less(a.normal, b.normal);
    });
    return out;
}

// The slice polygon of q at n.x = level, in the 2D coordinates given by the
// unimodular completion of n.  Throws SliceNotLattice when an edge of q
// crosses the plane at a non-integral point; returns nullopt when the slice
// is not full-dimensional.
inline std::optional<LatticePolytope> lattice_slice(const LatticePolytope& q,
                                                    const IntMatrix& frame,
                                                    const LatticePoint& n, Int level) {
    std::vector<LatticePoint> section;
    for (const LatticePoint& v : q.vertices())
        if (dot(n, v) == level) section.push_back(v);
    // Edge crossings.
    const auto& vs = q.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            Int ha = dot(n, vs[a]), hb = dot(n, vs[b]);
            if (!((ha < level && level < hb) || (hb < level && level < ha))) continue;
            // Only true edges of q matter.
            std::vector<LatticePoint> shared;
            for (const Facet& f : q.facets())
                if (f.eval(vs[a]) == 0 && f.eval(vs[b]) == 0) shared.push_back(f.normal);
            if (shared.size() < 2 || rank_of_vectors(shared, 3) != 2) continue;
            LatticePoint dvec = vs[b] - vs[a];
            Int den = hb - ha, num = level - ha;
            LatticePoint x = vs[a];
            bool integral = true;
            for (int c = 0; c < 3; ++c) {
                Int prod = checked_mul(num, dvec[c]);
                if (prod % den != 0) integral = false;
                x[c] = checked_add(vs[a][c], prod / den);
            }
            if (!integral)
                throw SliceNotLattice("edge of the polytope crosses the slice plane at a "
                                      "non-lattice point (level " + std::to_string(level) + ")");
            section.push_back(x);
        }
    std::sort(section.begin(), section.end());
    section.erase(std::unique(section.begin(), section.end()), section.end());
    std::vector<LatticePoint> flat;
    for (const LatticePoint& s : section) {
        LatticePoint y = frame.apply(s);
        flat.emplace_back(y[0], y[1]);
    }
    if (flat.size() < 3) return std::nullopt;
    if (affine_rank(flat, 2) < 2) return std::nullopt;
    return convex_hull(std::move(flat));
}

}  // namespace detail

// Polygon slices between a pair of parallel facets.  Among all antipodal
// facet pairs, the one of least lattice width whose slices are all honest
// lattice polygons wins; its width-many-plus-one slices come back in height
// order, each full-dimensional in its own plane.
inline std::vector<LatticePolytope> cayley_slices(const LatticePolytope& q) {
    if (q.dim() != 3) throw DimensionMismatch("cayley_slices expects a 3D polytope");
    auto pairs = detail::parallel_facet_pairs(q);
    if (pairs.empty()) throw NoParallelFacetPair("polytope has no parallel facet pair");
    std::string last_problem;
    for (const auto& pp : pairs) {
        IntMatrix frame = complete_to_unimodular_row(pp.normal);
        std::vector<LatticePolytope> slices;
        bool ok = true;
        for (Int h = 0; h <= pp.width && ok; ++h) {
            auto s = detail::lattice_slice(q, frame, pp.normal, pp.base_level + h);
            if (!s) {
                ok = false;
                last_problem = "slice at height " + std::to_string(h) + " for normal " +
                               pp.normal.str() + " is not 2-dimensional";
            } else {
                slices.push_back(std::move(*s));
            }
        }
        if (ok) return slices;
    }
    throw NoParallelFacetPair("no parallel facet pair gives full-dimensional slices: " +
                              last_problem);
}

// ---------------------------------------------------------------------------
// Recognition.

enum class Family { case1, case2, case3, unknown };

struct ClassificationResult {
    Family family = Family::unknown;
    std::optional<Case1Spec> case1;
    std::optional<Case2Spec> case2;
    std::optional<Case3Spec> case3;
    bool adjoint_vanishes = false;
};

namespace detail {

inline Int max_edge_lattice_length(const LatticePolytope& q) {
    Int best = 1;
    for (const LatticePoint& v : q.vertices())
        for (const LatticePoint& d : edge_directions_at(q, v)) {
            // walk to the far end of the edge
            LatticePoint w = v + d;
            Int len = 0;
            while (q.contains(w)) {
                ++len;
                w = w + d;
            }
            best = std::max(best, len);
        }
    return best;
}

inline bool quick_match(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices().size() == b.vertices().size() &&
           a.facets().size() == b.facets().size() &&
           lattice_points(a).size() == lattice_points(b).size();
}

}  // namespace detail

// Identify q up to affine unimodular equivalence, trying case 1 before
// case 2 before case 3; degenerate members that sit in several families are
// reported under the earliest one.
inline ClassificationResult classify(const LatticePolytope& q) {
    if (q.dim() != 3) throw DimensionMismatch("classify expects a 3D polytope");
    ClassificationResult res;
    res.adjoint_vanishes = adjoint_vanishes(q);
    if (!is_smooth(q).all_smooth) return res;

    const auto canon = canonical_form(q);
    auto matches = [&](const LatticePolytope& cand) {
        return detail::quick_match(q, cand) && canonical_form(cand) == canon;
    };

    for (Int k = 1; k <= 3; ++k) {
        std::array<Int, 4> cuts{0, 0, 0, 0};
        bool more = true;
        while (more) {
            Case1Spec spec{k, cuts};
            bool valid = true;
            for (int i = 0; i < 4 && valid; ++i)
                for (int j = 0; j < 4 && valid; ++j)
                    if (i != j && cuts[static_cast<std::size_t>(i)] + cuts[static_cast<std::size_t>(j)] >= k) valid = false;
            if (valid && matches(build_family(spec))) {
                res.family = Family::case1;
                res.case1 = spec;
                return res;
            }
            // next cut vector in lexicographic order, entries < k
            int pos = 3;
            while (pos >= 0 && cuts[static_cast<std::size_t>(pos)] == k - 1) {
                cuts[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                more = false;
            else
                ++cuts[static_cast<std::size_t>(pos)];
        }
    }

    const Int len_bound = detail::max_edge_lattice_length(q) + 2;
    for (Int k = 1; k <= 2; ++k)
        for (Int l0 = 0; l0 < k; ++l0)
            for (Int l1 = 0; l1 < k; ++l1)
                for (Int d = 1; d <= len_bound; ++d)
                    for (Int e = 1; e <= len_bound; ++e)
                        for (Int f = l0 + l1 + 1; f <= len_bound; ++f) {
                            if ((e - f) % k != 0 || (e - d) % k != 0) continue;
                            Case2Spec spec{k, {d, e, f}, {l0, l1}};
                            LatticePolytope cand = build_family(spec);
                            if (matches(cand)) {
                                res.family = Family::case2;
                                res.case2 = spec;
                                return res;
                            }
                        }

    try {
        auto slices = cayley_slices(q);
        if (slices.size() == 2 && is_nonsingular_polygon(slices[0]) &&
            is_nonsingular_polygon(slices[1]) &&
            detail::same_polygon_fan(slices[0], slices[1])) {
            Case3Spec spec{slices[0], slices[1]};
            if (matches(build_family(spec))) {
                res.family = Family::case3;
                res.case3 = spec;
                return res;
            }
        }
    } catch (const NoParallelFacetPair&) {
    } catch (const SliceNotLattice&) {
    }
    return res;
}

// ---------------------------------------------------------------------------
// Nonsingular polygon generation from complete nonsingular fans.

// Counter-clockwise primitive rays with consecutive determinants 1; these
// are exactly the normal fans of nonsingular polygons.
struct PolygonFan {
    std::vector<LatticePoint> rays;
};

inline PolygonFan projective_plane_fan() {
    return PolygonFan{{LatticePoint(1, 0), LatticePoint(0, 1), LatticePoint(-1, -1)}};
}

inline PolygonFan hirzebruch_fan(Int a) {
    if (a < 0) throw InvalidParameters("hirzebruch twist must be >= 0");
    return PolygonFan{
        {LatticePoint(1, 0), LatticePoint(0, 1), LatticePoint(-1, a), LatticePoint(0, -1)}};
}

// Insert the sum of rays i and i+1 between them (a blow-up of the surface).
inline PolygonFan stellar_subdivide(const PolygonFan& fan, std::size_t i) {
    PolygonFan out = fan;
    const std::size_t n = fan.rays.size();
    LatticePoint fresh = fan.rays[i % n] + fan.rays[(i + 1) % n];
    out.rays.insert(out.rays.begin() + static_cast<std::ptrdiff_t>(i % n) + 1, fresh);
    return out;
}

// Polygon {x : rays[i].x >= -c_i} when every facet is present with positive
// edge length; nullopt otherwise.  The result is translated so its bounding
// box starts at the origin.
inline std::optional<LatticePolytope> polygon_from_offsets(const PolygonFan& fan,
                                                           const std::vector<Int>& offsets) {
    const std::size_t n = fan.rays.size();
    if (offsets.size() != n) throw InvalidParameters("offset count must match ray count");
    std::vector<LatticePoint> verts;
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint& n0 = fan.rays[i];
        const LatticePoint& n1 = fan.rays[(i + 1) % n];
        IntMatrix m = IntMatrix::from_rows({n0, n1});
        if (m.determinant() != 1) throw InvalidParameters("fan rays are not consecutive-unimodular");
        LatticePoint rhs(checked_neg(offsets[i]), checked_neg(offsets[(i + 1) % n]));
        verts.push_back(m.inverse_unimodular().apply(rhs));
    }
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint prev = verts[(i + n - 1) % n];
        LatticePoint cur = verts[i];
        LatticePoint next = verts[(i + 1) % n];
        if (cur == prev || cur == next) return std::nullopt;
        if (cross2(cur - prev, next - cur) <= 0) return std::nullopt;
    }
    LatticePoint lo = verts[0], hi = verts[0];
    for (const LatticePoint& v : verts)
        for (int c = 0; c < 2; ++c) {
            lo[c] = std::min(lo[c], v[c]);
            hi[c] = std::max(hi[c], v[c]);
        }
    std::vector<LatticePoint> moved;
    for (const LatticePoint& v : verts) moved.push_back(v - lo);
    LatticePolytope p = convex_hull(std::move(moved));
    if (p.vertices().size() != n) return std::nullopt;
    return p;
}

// All complete nonsingular fans with at most max_rays rays, grown from the
// projective-plane and Hirzebruch fans by stellar subdivision; deduplicated
// by ray set.
inline std::vector<PolygonFan> enumerate_fans(std::size_t max_rays, Int max_hirzebruch = 4) {
    std::vector<PolygonFan> fans;
    std::set<std::vector<std::vector<Int>>> seen;
    auto push = [&](const PolygonFan& fan) {
        std::vector<std::vector<Int>> key;
        for (const LatticePoint& r : fan.rays) key.push_back(r.coords());
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) fans.push_back(fan);
    };
    std::vector<PolygonFan> frontier;
    frontier.push_back(projective_plane_fan());
    for (Int a = 0; a <= max_hirzebruch; ++a) frontier.push_back(hirzebruch_fan(a));
    for (auto& fan : frontier)
        if (fan.rays.size() <= max_rays) push(fan);
    std::size_t next = 0;
    std::vector<PolygonFan> all = fans;
    while (next < all.size()) {
        PolygonFan fan = all[next++];
        if (fan.rays.size() >= max_rays) continue;
        for (std::size_t i = 0; i < fan.rays.size(); ++i) {
            PolygonFan sub = stellar_subdivide(fan, i);
            std::vector<std::vector<Int>> key;
            for (const LatticePoint& r : sub.rays) key.push_back(r.coords());
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) {
                fans.push_back(sub);
                all.push_back(sub);
            }
        }
    }
    return fans;
}

// Deterministic enumeration of nonsingular polygons: every fan with the
// given ray range, offset vectors over a small window, normalized placement,
// bounding box within coord_bound.  Within one fan entry the polygons share
// coordinates and are distinct as point sets; different fan entries may
// still contain unimodularly equivalent polygons, so consumers that need
// equivalence classes deduplicate what they build from them.
struct GeneratedPolygons {
    std::vector<PolygonFan> fans;
    std::vector<std::vector<LatticePolytope>> by_fan;  // parallel to fans
};

inline GeneratedPolygons enumerate_nonsingular_polygons(std::size_t min_edges,
                                                        std::size_t max_edges,
                                                        Int coord_bound,
                                                        Int offset_window) {
    GeneratedPolygons out;
    for (const PolygonFan& fan : enumerate_fans(max_edges, std::min<Int>(coord_bound, 4))) {
        if (fan.rays.size() < min_edges || fan.rays.size() > max_edges) continue;
        std::vector<LatticePolytope> found;
        std::set<std::vector<std::vector<Int>>> seen;
        std::vector<Int> offsets(fan.rays.size(), 0);
        bool more = true;
        while (more) {
            auto poly = polygon_from_offsets(fan, offsets);
            if (poly) {
                LatticePoint lo, hi;
                poly->bounding_box(lo, hi);
                if (hi[0] <= coord_bound && hi[1] <= coord_bound) {
                    std::vector<std::vector<Int>> key;
                    for (const LatticePoint& v : poly->vertices()) key.push_back(v.coords());
                    if (seen.insert(key).second) found.push_back(*poly);
                }
            }
            int pos = static_cast<int>(offsets.size()) - 1;
            while (pos >= 0 && offsets[static_cast<std::size_t>(pos)] == offset_window) {
                offsets[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                more = false;
            else
                ++offsets[static_cast<std::size_t>(pos)];
        }
        if (!found.empty()) {
            out.fans.push_back(fan);
            out.by_fan.push_back(std::move(found));
        }
    }
    return out;
}

// Random nonsingular polygon with rays in [min_edges, max_edges], bounding
// box within coord_bound and at least one interior lattice point.  Grown by
// corner cuts: a blow-up inserts the ray n_i + n_{i+1} with support value
// c_i + c_{i+1} - delta, which slices the corner at depth delta and keeps
// every intermediate polygon valid.
inline LatticePolytope random_polygon_with_interior(std::mt19937_64& rng,
                                                    std::size_t min_edges,
                                                    std::size_t max_edges, Int coord_bound) {
    std::uniform_int_distribution<int> base_pick(0, 3);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        PolygonFan fan;
        std::vector<Int> offsets;
        if (base_pick(rng) == 0) {
            fan = projective_plane_fan();
            std::uniform_int_distribution<Int> size(3, coord_bound);
            offsets = {0, 0, size(rng)};
        } else {
            Int a = base_pick(rng);
            fan = hirzebruch_fan(a);
            std::uniform_int_distribution<Int> side(2, std::max<Int>(2, coord_bound - a));
            offsets = {0, 0, side(rng), side(rng)};
        }
        std::uniform_int_distribution<std::size_t> edges(
            std::max(min_edges, fan.rays.size()), max_edges);
        std::size_t target = edges(rng);
        bool stuck = false;
        while (fan.rays.size() < target && !stuck) {
            stuck = true;
            std::uniform_int_distribution<std::size_t> pos(0, fan.rays.size() - 1);
            std::uniform_int_distribution<Int> depth(1, 2);
            for (int tries = 0; tries < 16; ++tries) {
                std::size_t i = pos(rng);
                PolygonFan cut_fan = stellar_subdivide(fan, i);
                std::vector<Int> cut_offsets = offsets;
                Int cnew = checked_sub(checked_add(offsets[i], offsets[(i + 1) % offsets.size()]),
                                       depth(rng));
                cut_offsets.insert(cut_offsets.begin() + static_cast<std::ptrdiff_t>(i) + 1, cnew);
                if (polygon_from_offsets(cut_fan, cut_offsets)) {
                    fan = cut_fan;
                    offsets = cut_offsets;
                    stuck = false;
                    break;
                }
            }
        }
        if (fan.rays.size() < min_edges) continue;
        auto poly = polygon_from_offsets(fan, offsets);
        if (!poly) continue;
        LatticePoint lo, hi;
        poly->bounding_box(lo, hi);
        if (hi[0] > coord_bound || hi[1] > coord_bound) continue;
        if (interior_lattice_points(*poly).empty()) continue;
        return *poly;
    }
    throw Error("random polygon generation did not converge");
}

// Random affine unimodular map with small entries, built from shears, axis
// permutations and sign flips.
inline AffineUnimodularMap random_unimodular_map(std::mt19937_64& rng, int dim,
                                                 int shear_steps = 4, Int max_translate = 5) {
    IntMatrix a = IntMatrix::identity(dim);
    std::uniform_int_distribution<int> idx(0, dim - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int s = 0; s < shear_steps; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        IntMatrix e = IntMatrix::identity(dim);
        e.at(i, j) = coin(rng) ? 1 : -1;
        a = e.times(a);
    }
    // a random transposition keeps |det| = 1
    if (coin(rng)) {
        int i = idx(rng), j = idx(rng);
        if (i != j) {
            IntMatrix e = IntMatrix::identity(dim);
            e.at(i, i) = 0;
            e.at(j, j) = 0;
            e.at(i, j) = 1;
            e.at(j, i) = 1;
            a = e.times(a);
        }
    }
    std::uniform_int_distribution<Int> tr(-max_translate, max_translate);
    LatticePoint t = dim == 2 ? LatticePoint(tr(rng), tr(rng))
                              : LatticePoint(tr(rng), tr(rng), tr(rng));
    return AffineUnimodularMap(a, t);
}

// Every valid case-1 spec with k <= max_k: all cut vectors with pairwise
// sums below k, in lexicographic order.
inline std::vector<Case1Spec> all_case1_specs(Int max_k) {
    std::vector<Case1Spec> specs;
    for (Int k = 1; k <= max_k; ++k) {
        std::array<Int, 4> cuts{0, 0, 0, 0};
        bool more = true;
        while (more) {
            bool valid = true;
            for (int i = 0; i < 4 && valid; ++i)
                for (int j = 0; j < 4 && valid; ++j)
                    if (i != j &&
                        cuts[static_cast<std::size_t>(i)] + cuts[static_cast<std::size_t>(j)] >= k)
                        valid = false;
            if (valid) specs.push_back(Case1Spec{k, cuts});
            int pos = 3;
            while (pos >= 0 && cuts[static_cast<std::size_t>(pos)] == k - 1) {
                cuts[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                more = false;
            else
                ++cuts[static_cast<std::size_t>(pos)];
        }
    }
    return specs;
}

// Every valid case-2 spec with edge lengths <= max_len: base scale 1 and 2,
// the parity constraint, and all cut pairs that leave the short column.
inline std::vector<Case2Spec> all_case2_specs(Int max_len) {
    std::vector<Case2Spec> specs;
    for (Int k = 1; k <= 2; ++k)
        for (Int d = 1; d <= max_len; ++d)
            for (Int e = 1; e <= max_len; ++e)
                for (Int f = 1; f <= max_len; ++f) {
                    if ((e - f) % k != 0 || (e - d) % k != 0) continue;
                    for (Int l0 = 0; l0 < k; ++l0)
                        for (Int l1 = 0; l1 < k; ++l1) {
                            if (f <= l0 + l1) continue;
                            specs.push_back(Case2Spec{k, {d, e, f}, {l0, l1}});
                        }
                }
    return specs;
}

// Same vertex-cone multiset; for simple polytopes this is equality of the
// normal fans, so Minkowski sums of such pairs stay ample on one variety.
inline bool same_normal_fan(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.dim() != q.dim() || p.vertices().size() != q.vertices().size()) return false;
    auto cones = [](const LatticePolytope& x) {
        std::vector<std::vector<std::vector<Int>>> cs;
        for (const LatticePoint& v : x.vertices()) {
            std::vector<std::vector<Int>> gens;
            for (const LatticePoint& d : detail::edge_directions_at(x, v))
                gens.push_back(d.coords());
            std::sort(gens.begin(), gens.end());
            cs.push_back(gens);
        }
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    return cones(p) == cones(q);
}

}  // namespace quadrigen

#endif
