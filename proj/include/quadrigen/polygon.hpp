#ifndef QUADRIGEN_POLYGON_HPP
#define QUADRIGEN_POLYGON_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quadrigen/polytope.hpp"

namespace quadrigen {

namespace detail {

inline void require_polygon(const LatticePolytope& f, const char* who) {
    if (f.dim() != 2) throw DimensionMismatch(std::string(who) + " expects a 2D polytope");
}

}  // namespace detail

// Twice the Euclidean area by the shoelace formula (positive for the stored
// counter-clockwise cycle).
inline Int twice_area(const LatticePolytope& f) {
    detail::require_polygon(f, "twice_area");
    const auto& v = f.vertices();
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s = checked_add(s, cross2(v[i], v[(i + 1) % v.size()]));
    return s;
}

// |boundary(F) cap M'| = sum of the lattice lengths of the edges.
inline Int boundary_lattice_count(const LatticePolytope& f) {
    detail::require_polygon(f, "boundary_lattice_count");
    const auto& v = f.vertices();
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s = checked_add(s, content(v[(i + 1) % v.size()] - v[i]));
    return s;
}

inline bool is_nonsingular_polygon(const LatticePolytope& f) {
    detail::require_polygon(f, "is_nonsingular_polygon");
    return is_smooth(f).all_smooth;
}

// Koelman's criterion for a projective toric surface: the section ideal is
// generated in degree <= 3, always normally generated, and needs a cubic
// exactly when the polygon has interior points and a 3-point boundary.
struct KoelmanVerdict {
    bool normally_generated = true;
    bool needs_cubics = false;
    Int interior_count = 0;
    Int boundary_count = 0;
};

inline KoelmanVerdict koelman_classify(const LatticePolytope& f) {
    detail::require_polygon(f, "koelman_classify");
    KoelmanVerdict v;
    v.interior_count = static_cast<Int>(interior_lattice_points(f).size());
    v.boundary_count = boundary_lattice_count(f);
    v.needs_cubics = v.interior_count > 0 && v.boundary_count == 3;
    return v;
}

// Vertex of F at maximal squared Euclidean distance from u0; ties go to the
// canonically smallest point so results are reproducible.
inline LatticePoint farthest_vertex(const LatticePolytope& f, const LatticePoint& u0) {
    detail::require_polygon(f, "farthest_vertex");
    f.vertex_index(u0);  // throws NotAVertex
    bool have = false;
    LatticePoint best;
    Int best_d2 = 0;
    for (const LatticePoint& v : f.vertices()) {
        LatticePoint d = v - u0;
        Int d2 = dot(d, d);
        if (!have || d2 > best_d2 || (d2 == best_d2 && graded_lex_less(v, best))) {
            best = v;
            best_d2 = d2;
            have = true;
        }
    }
    return best;
}

// Lattice parallelogram {t, t-u, t-w, t-u-w} containing exactly its four
// corners as lattice points.
struct BasicDiamond {
    std::array<LatticePoint, 4> corners;  // t, t-u, t-w, t-u-w
    LatticePoint distinguished_vertex;    // t, a vertex of the polygon
    LatticePoint opposite;                // corner diagonally opposite t
};

struct DiamondSearchResult {
    // Frame with the chosen polygon vertex at the origin and its edges along
    // the coordinate axes; both containments below hold in this frame.
    AffineUnimodularMap to_normal_frame;
    LatticePolytope normalized;
    BasicDiamond diamond;
    int case_used = 0;         // 1: axis-parallel edge present, 2: farthest vertex
    bool axes_swapped = false; // case 1 found after exchanging the axes
    bool opposite_interior = false;
};

namespace detail {

// Index of the first counter-clockwise-upward vertical edge [v_i, v_i+1],
// scanning from the origin vertex; -1 if none.  The edge through the origin
// along the y-axis runs downward in the cycle, so it never matches.
inline int find_up_vertical_edge(const LatticePolytope& f) {
    const auto& cyc = f.vertices();
    const std::size_t n = cyc.size();
    std::size_t start = static_cast<std::size_t>(f.vertex_index(LatticePoint(0, 0)));
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t i = (start + s) % n;
        LatticePoint d = primitive(cyc[(i + 1) % n] - cyc[i]);
        if (d == LatticePoint(0, 1)) return static_cast<int>(i);
    }
    return -1;
}

inline BasicDiamond make_diamond(const LatticePoint& t, const LatticePoint& u,
                                 const LatticePoint& w) {
    BasicDiamond s;
    s.corners = {t, t - u, t - w, t - u - w};
    s.distinguished_vertex = t;
    s.opposite = t - u - w;
    return s;
}

inline void verify_diamond(const LatticePolytope& f, const BasicDiamond& s) {
    for (const LatticePoint& c : s.corners) {
        if (!f.contains(c))
            throw DiamondVerificationFailed("corner " + c.str() + " left the polygon");
        if (!f.contains(c - s.opposite))
            throw DiamondVerificationFailed("translated corner " + (c - s.opposite).str() +
                                            " left the polygon");
    }
    auto hull_pts = lattice_points(convex_hull(
        std::vector<LatticePoint>(s.corners.begin(), s.corners.end())));
    if (hull_pts.size() != 4)
        throw DiamondVerificationFailed("parallelogram holds " +
                                        std::to_string(hull_pts.size()) +
                                        " lattice points, expected 4");
}

}  // namespace detail

// Basic diamond whose distinguished vertex, containments and translate all
// live in the frame normalized at origin_vertex.  Case 1 looks for an edge
// parallel to the y-axis edge first, then (after exchanging the axes) for
// one parallel to the x-axis edge; otherwise case 2 builds the diamond at
// the farthest vertex, which requires all four direction components >= 1.
inline DiamondSearchResult find_basic_diamond(const LatticePolytope& f,
                                              const LatticePoint& origin_vertex) {
    detail::require_polygon(f, "find_basic_diamond");
    if (!is_nonsingular_polygon(f))
        throw NotNonsingular("diamond search requires a nonsingular polygon");
    if (interior_lattice_points(f).empty())
        throw NoInteriorPoints("polygon has no interior lattice points");

    auto [t0, fn] = normalize_at_vertex(f, origin_vertex);

    AffineUnimodularMap frame_map = t0;
    LatticePolytope frame = fn;
    bool swapped = false;

    int edge_idx = detail::find_up_vertical_edge(fn);
    if (edge_idx < 0) {
        AffineUnimodularMap swap_axes(
            IntMatrix::from_rows({LatticePoint(0, 1), LatticePoint(1, 0)}),
            LatticePoint(0, 0));
        LatticePolytope fswap = apply_map(swap_axes, fn);
        int idx2 = detail::find_up_vertical_edge(fswap);
        if (idx2 >= 0) {
            swapped = true;
            frame_map = swap_axes.after(t0);
            frame = fswap;
            edge_idx = idx2;
        }
    }

    const auto& cyc = frame.vertices();
    const std::size_t n = cyc.size();
    BasicDiamond dia;
    int case_used = 0;

    if (edge_idx >= 0) {
        case_used = 1;
        std::size_t i = static_cast<std::size_t>(edge_idx);
        LatticePoint ut = cyc[(i + 1) % n];
        LatticePoint unext = cyc[(i + 2) % n];
        LatticePoint gd = primitive(ut - unext);
        if (gd[0] != 1)
            throw DiamondVerificationFailed("next edge at " + ut.str() +
                                            " is not unimodular against the vertical");
        LatticePoint u(0, 1);
        LatticePoint w = gd[1] >= 0 ? gd : LatticePoint(1, 0);
        dia = detail::make_diamond(ut, u, w);
    } else {
        case_used = 2;
        LatticePoint ut = farthest_vertex(frame, LatticePoint(0, 0));
        std::size_t i = static_cast<std::size_t>(frame.vertex_index(ut));
        LatticePoint into_prev = primitive(ut - cyc[(i + n - 1) % n]);
        LatticePoint into_next = primitive(ut - cyc[(i + 1) % n]);
        if (into_prev[0] < 1 || into_prev[1] < 1 || into_next[0] < 1 || into_next[1] < 1)
            throw DiamondPreconditionFailed(
                "direction components at farthest vertex " + ut.str() + " are " +
                into_prev.str() + ", " + into_next.str() + "; all must be >= 1");
        dia = detail::make_diamond(ut, into_prev, into_next);
    }

    detail::verify_diamond(frame, dia);
    return DiamondSearchResult{frame_map, frame, dia, case_used, swapped,
                               frame.strictly_contains(dia.opposite)};
}

}  // namespace quadrigen

#endif
