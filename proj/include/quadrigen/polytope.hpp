#ifndef QUADRIGEN_POLYTOPE_HPP
#define QUADRIGEN_POLYTOPE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "quadrigen/geometry.hpp"

namespace quadrigen {

// Closed half-space n.x + offset >= 0 with primitive inward normal.
struct Facet {
    LatticePoint normal;
    Int offset = 0;

    Int eval(const LatticePoint& p) const { return checked_add(dot(normal, p), offset); }

    friend bool operator==(const Facet& a, const Facet& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return graded_lex_less(a.normal, b.normal);
        return a.offset < b.offset;
    }
};

// Full-dimensional convex lattice polytope in Z^2 or Z^3.
//
// Construction always goes through convex_hull(), which derives an
// irredundant vertex list and the complete facet description.  In dimension
// 2 the vertices run counter-clockwise starting at the canonically smallest
// one; in dimension 3 they are kept in canonical order.
class LatticePolytope {
  public:
    int dim() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const LatticePoint& p) const {
        for (const Facet& f : facets_)
            if (f.eval(p) < 0) return false;
        return true;
    }

    bool strictly_contains(const LatticePoint& p) const {
        for (const Facet& f : facets_)
            if (f.eval(p) <= 0) return false;
        return true;
    }

    bool is_vertex(const LatticePoint& p) const {
        return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
    }

    int vertex_index(const LatticePoint& p) const {
        auto it = std::find(vertices_.begin(), vertices_.end(), p);
        if (it == vertices_.end()) throw NotAVertex(p.str() + " is not a vertex");
        return static_cast<int>(it - vertices_.begin());
    }

    void bounding_box(LatticePoint& lo, LatticePoint& hi) const {
        lo = hi = vertices_.front();
        for (const LatticePoint& v : vertices_)
            for (int i = 0; i < dim_; ++i) {
                lo[i] = std::min(lo[i], v[i]);
                hi[i] = std::max(hi[i], v[i]);
            }
    }

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        if (a.dim_ != b.dim_) return false;
        std::vector<LatticePoint> va = a.vertices_, vb = b.vertices_;
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        return va == vb;
    }

    friend LatticePolytope convex_hull(std::vector<LatticePoint> points);

  private:
    LatticePolytope() = default;

    int dim_ = 0;
    std::vector<LatticePoint> vertices_;
    std::vector<Facet> facets_;
};

namespace detail {

inline int rank_of_vectors(const std::vector<LatticePoint>& vs, int dim) {
    bool any_nonzero = false;
    for (const auto& v : vs) any_nonzero |= !v.is_zero();
    if (!any_nonzero) return 0;
    if (dim == 2) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (cross2(vs[i], vs[j]) != 0) return 2;
        return 1;
    }
    bool rank2 = false;
    for (std::size_t i = 0; i < vs.size() && !rank2; ++i)
        for (std::size_t j = i + 1; j < vs.size() && !rank2; ++j)
            if (!cross3(vs[i], vs[j]).is_zero()) rank2 = true;
    if (!rank2) return 1;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (std::size_t k = j + 1; k < vs.size(); ++k)
                if (det3(vs[i], vs[j], vs[k]) != 0) return 3;
    return 2;
}

inline int affine_rank(const std::vector<LatticePoint>& pts, int dim) {
    std::vector<LatticePoint> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    return rank_of_vectors(diffs, dim);
}

// Andrew's monotone chain, strict turns only; result is counter-clockwise.
inline std::vector<LatticePoint> hull2d(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    std::vector<LatticePoint> h(2 * n);
    std::size_t k = 0;
    auto turn = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
        return cross2(a - o, b - o);
    };
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace detail

// Convex hull of a nonempty full-dimensional point set.  The ambient
// dimension is read off the points themselves.
inline LatticePolytope convex_hull(std::vector<LatticePoint> points) {
    if (points.empty()) throw DegenerateInput("empty point set");
    const int dim = points.front().dim();
    for (const LatticePoint& p : points) {
        if (p.dim() != dim) throw DimensionMismatch("mixed-dimension points");
        validate_input_coords(p);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (detail::affine_rank(points, dim) < dim)
        throw DegenerateInput("affine span has dimension < " + std::to_string(dim));

    LatticePolytope poly;
    poly.dim_ = dim;

    if (dim == 2) {
        std::vector<LatticePoint> cyc = detail::hull2d(points);
        // Rotate so the canonically smallest vertex comes first.
        std::size_t best = 0;
        for (std::size_t i = 1; i < cyc.size(); ++i)
            if (graded_lex_less(cyc[i], cyc[best])) best = i;
        std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(best), cyc.end());
        poly.vertices_ = cyc;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const LatticePoint& a = cyc[i];
            const LatticePoint& b = cyc[(i + 1) % cyc.size()];
            LatticePoint d = primitive(b - a);
            LatticePoint n(checked_neg(d[1]), d[0]);  // inward for CCW
            poly.facets_.push_back(Facet{n, checked_neg(dot(n, a))});
        }
    } else {
        // Exhaustive plane scan: every facet plane is spanned by some point
        // triple, and a candidate plane is a facet iff no point lies outside.
        std::map<std::pair<std::vector<Int>, Int>, Facet> found;
        const std::size_t n = points.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    LatticePoint nrm = cross3(points[j] - points[i], points[k] - points[i]);
                    if (nrm.is_zero()) continue;
                    nrm = primitive(nrm);
                    bool has_pos = false, has_neg = false;
                    for (std::size_t t = 0; t < n && !(has_pos && has_neg); ++t) {
                        Int s = dot(nrm, points[t] - points[i]);
                        has_pos |= s > 0;
                        has_neg |= s < 0;
                    }
                    if (has_pos && has_neg) continue;
                    if (has_neg) nrm = -nrm;
                    Facet f{nrm, checked_neg(dot(nrm, points[i]))};
                    found.emplace(std::make_pair(f.normal.coords(), f.offset), f);
                }
        for (auto& [key, f] : found) poly.facets_.push_back(f);
        std::sort(poly.facets_.begin(), poly.facets_.end());

        // A point is a vertex iff its active facet normals span the space.
        for (const LatticePoint& p : points) {
            std::vector<LatticePoint> active;
            for (const Facet& f : poly.facets_)
                if (f.eval(p) == 0) active.push_back(f.normal);
            if (active.size() >= 3 && detail::rank_of_vectors(active, 3) == 3)
                poly.vertices_.push_back(p);
        }
        std::sort(poly.vertices_.begin(), poly.vertices_.end());
    }
    std::sort(poly.facets_.begin(), poly.facets_.end());
    return poly;
}

inline std::vector<LatticePoint> lattice_points(const LatticePolytope& p) {
    LatticePoint lo, hi;
    p.bounding_box(lo, hi);
    std::vector<LatticePoint> out;
    if (p.dim() == 2) {
        for (Int x = lo[0]; x <= hi[0]; ++x)
            for (Int y = lo[1]; y <= hi[1]; ++y)
                if (LatticePoint q(x, y); p.contains(q)) out.push_back(q);
    } else {
        for (Int x = lo[0]; x <= hi[0]; ++x)
            for (Int y = lo[1]; y <= hi[1]; ++y)
                for (Int z = lo[2]; z <= hi[2]; ++z)
                    if (LatticePoint q(x, y, z); p.contains(q)) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<LatticePoint> interior_lattice_points(const LatticePolytope& p) {
    LatticePoint lo, hi;
    p.bounding_box(lo, hi);
    std::vector<LatticePoint> out;
    if (p.dim() == 2) {
        for (Int x = lo[0]; x <= hi[0]; ++x)
            for (Int y = lo[1]; y <= hi[1]; ++y)
                if (LatticePoint q(x, y); p.strictly_contains(q)) out.push_back(q);
    } else {
        for (Int x = lo[0]; x <= hi[0]; ++x)
            for (Int y = lo[1]; y <= hi[1]; ++y)
                for (Int z = lo[2]; z <= hi[2]; ++z)
                    if (LatticePoint q(x, y, z); p.strictly_contains(q)) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.dim() != q.dim())
        throw DimensionMismatch("Minkowski sum of a 2D and a 3D polytope");
    std::vector<LatticePoint> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const LatticePoint& a : p.vertices())
        for (const LatticePoint& b : q.vertices()) sums.push_back(a + b);
    return convex_hull(std::move(sums));
}

// Sum with a single point, i.e. a translation.  A bare point is not a valid
// full-dimensional polytope, so it gets its own overload.
inline LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePoint& t) {
    if (p.dim() != t.dim())
        throw DimensionMismatch("Minkowski sum of mixed dimensions");
    std::vector<LatticePoint> moved;
    moved.reserve(p.vertices().size());
    for (const LatticePoint& v : p.vertices()) moved.push_back(v + t);
    return convex_hull(std::move(moved));
}

inline LatticePolytope dilate(const LatticePolytope& p, Int k) {
    if (k < 1) throw InvalidParameters("dilation factor must be >= 1");
    std::vector<LatticePoint> scaled;
    scaled.reserve(p.vertices().size());
    for (const LatticePoint& v : p.vertices()) scaled.push_back(k * v);
    return convex_hull(std::move(scaled));
}

// Apex plus the primitive directions of the polytope edges leaving it.
struct VertexCone {
    LatticePoint apex;
    std::vector<LatticePoint> generators;  // canonical order
};

namespace detail {

// Primitive directions of the edges incident to vertex v.
inline std::vector<LatticePoint> edge_directions_at(const LatticePolytope& p,
                                                    const LatticePoint& v) {
    const int idx = p.vertex_index(v);
    std::vector<LatticePoint> dirs;
    if (p.dim() == 2) {
        const auto& cyc = p.vertices();
        const std::size_t n = cyc.size();
        const std::size_t i = static_cast<std::size_t>(idx);
        dirs.push_back(primitive(cyc[(i + 1) % n] - v));
        dirs.push_back(primitive(cyc[(i + n - 1) % n] - v));
    } else {
        std::vector<const Facet*> at_v;
        for (const Facet& f : p.facets())
            if (f.eval(v) == 0) at_v.push_back(&f);
        for (const LatticePoint& w : p.vertices()) {
            if (w == v) continue;
            std::vector<LatticePoint> shared;
            for (const Facet* f : at_v)
                if (f->eval(w) == 0) shared.push_back(f->normal);
            if (shared.size() >= 2 && rank_of_vectors(shared, 3) == 2)
                dirs.push_back(primitive(w - v));
        }
        std::sort(dirs.begin(), dirs.end());
    }
    return dirs;
}

}  // namespace detail

inline VertexCone vertex_cone(const LatticePolytope& p, const LatticePoint& v) {
    auto dirs = detail::edge_directions_at(p, v);
    auto sorted = dirs;
    std::sort(sorted.begin(), sorted.end());
    return VertexCone{v, sorted};
}

struct VertexSmoothness {
    LatticePoint vertex;
    bool smooth = false;
    Int cone_determinant = 0;  // 0 when the vertex is not simple
    int edge_count = 0;
};

struct SmoothnessReport {
    std::vector<VertexSmoothness> per_vertex;  // in vertex order
    bool all_smooth = true;
};

// A vertex passes iff it has exactly dim edge directions forming a basis of
// the lattice (determinant +-1).
inline SmoothnessReport is_smooth(const LatticePolytope& p) {
    SmoothnessReport rep;
    for (const LatticePoint& v : p.vertices()) {
        VertexSmoothness vs;
        vs.vertex = v;
        auto dirs = detail::edge_directions_at(p, v);
        vs.edge_count = static_cast<int>(dirs.size());
        if (static_cast<int>(dirs.size()) == p.dim()) {
            vs.cone_determinant =
                p.dim() == 2 ? cross2(dirs[0], dirs[1]) : det3(dirs[0], dirs[1], dirs[2]);
            vs.smooth = vs.cone_determinant == 1 || vs.cone_determinant == -1;
        }
        rep.all_smooth &= vs.smooth;
        rep.per_vertex.push_back(vs);
    }
    return rep;
}

inline bool is_smooth_at(const LatticePolytope& p, const LatticePoint& v) {
    auto dirs = detail::edge_directions_at(p, v);
    if (static_cast<int>(dirs.size()) != p.dim()) return false;
    Int d = p.dim() == 2 ? cross2(dirs[0], dirs[1]) : det3(dirs[0], dirs[1], dirs[2]);
    return d == 1 || d == -1;
}

inline LatticePolytope apply_map(const AffineUnimodularMap& t, const LatticePolytope& p) {
    if (t.dim() != p.dim()) throw DimensionMismatch("map/polytope dimension mismatch");
    std::vector<LatticePoint> imgs;
    imgs.reserve(p.vertices().size());
    for (const LatticePoint& v : p.vertices()) imgs.push_back(t.apply(v));
    return convex_hull(std::move(imgs));
}

// Map sending v to the origin and the edge directions at v to the standard
// basis.  In dimension 2 the counter-clockwise-next edge goes to e1 and the
// previous edge to e2, so the image lies in the first quadrant; in dimension
// 3 the generators are taken in canonical order.
inline std::pair<AffineUnimodularMap, LatticePolytope> normalize_at_vertex(
    const LatticePolytope& p, const LatticePoint& v) {
    auto dirs = detail::edge_directions_at(p, v);  // throws NotAVertex
    if (static_cast<int>(dirs.size()) != p.dim())
        throw NotSmoothVertex("vertex " + v.str() + " has " + std::to_string(dirs.size()) +
                              " edges");
    IntMatrix m = IntMatrix::from_columns(dirs);
    Int d = m.determinant();
    if (d != 1 && d != -1)
        throw NotSmoothVertex("edge directions at " + v.str() + " have determinant " +
                              std::to_string(d));
    IntMatrix a = m.inverse_unimodular();
    AffineUnimodularMap t(a, -a.apply(v));
    return {t, apply_map(t, p)};
}

}  // namespace quadrigen

#endif
