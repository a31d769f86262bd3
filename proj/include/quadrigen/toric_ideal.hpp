#ifndef QUADRIGEN_TORIC_IDEAL_HPP
#define QUADRIGEN_TORIC_IDEAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quadrigen/polytope.hpp"

namespace quadrigen {

// Default guard rails for the combinatorial oracles.  Degree-d multisets of
// r points number binomial(r+d-1, d); past these limits the enumeration is
// no longer a desk-scale verification device.
inline constexpr std::size_t kOracleMaxPoints = 40;
inline constexpr int kOracleMaxDegree = 4;

struct NegativeExponent : Error {
    explicit NegativeExponent(const std::string& msg) : Error(msg) {}
};

// Property failure at a vertex: the listed lattice points admit no pairwise
// decomposition m_i + m0 = m_k + m_l inside the polytope.
struct PropertyFails : Error {
    PropertyFails(const LatticePoint& v, std::vector<LatticePoint> pts)
        : Error("decomposition property fails at " + v.str() + " for " +
                std::to_string(pts.size()) + " point(s)"),
          vertex(v),
          unwitnessed(std::move(pts)) {}

    LatticePoint vertex;
    std::vector<LatticePoint> unwitnessed;
};

// ---------------------------------------------------------------------------
// Vertex charts.

struct ChartExponent {
    LatticePoint point;          // m_i
    std::array<Int, 3> exps{};   // a_i1, a_i2, a_i3
};

// Affine chart at a smooth vertex m0: the nearest lattice points m1,m2,m3
// along the three edges form a basis, and every other lattice point expands
// with nonnegative integer exponents in that basis.
struct ChartPresentation {
    LatticePoint vertex;                       // m0
    std::array<LatticePoint, 3> basis_points;  // m1, m2, m3
    std::vector<ChartExponent> exponents;      // canonical point order
};

inline ChartPresentation chart_presentation(const LatticePolytope& p, const LatticePoint& v) {
    if (p.dim() != 3) throw DimensionMismatch("chart presentations live on 3D polytopes");
    auto dirs = detail::edge_directions_at(p, v);  // throws NotAVertex
    if (dirs.size() != 3) throw NotSmoothVertex("vertex " + v.str() + " is not simple");
    IntMatrix m = IntMatrix::from_columns(dirs);
    Int d = m.determinant();
    if (d != 1 && d != -1)
        throw NotSmoothVertex("edge directions at " + v.str() + " are not a lattice basis");
    IntMatrix inv = m.inverse_unimodular();

    ChartPresentation chart;
    chart.vertex = v;
    for (int j = 0; j < 3; ++j) chart.basis_points[static_cast<std::size_t>(j)] = v + dirs[static_cast<std::size_t>(j)];

    for (const LatticePoint& mi : lattice_points(p)) {
        if (mi == v) continue;
        if (std::find(chart.basis_points.begin(), chart.basis_points.end(), mi) !=
            chart.basis_points.end())
            continue;
        LatticePoint a = inv.apply(mi - v);
        for (int j = 0; j < 3; ++j)
            if (a[j] < 0)
                throw NegativeExponent("expansion of " + mi.str() + " at " + v.str() +
                                       " has negative coefficient");
        chart.exponents.push_back(ChartExponent{mi, {a[0], a[1], a[2]}});
    }
    return chart;
}

// ---------------------------------------------------------------------------
// Pairwise decomposition certificates.

struct Witness {
    LatticePoint point;   // m_i
    LatticePoint first;   // m_k
    LatticePoint second;  // m_l, with m_i + m0 = m_k + m_l
};

struct DecompositionCertificate {
    LatticePoint vertex;             // m0
    std::vector<Witness> witnesses;  // one per non-basis lattice point
};

// Exhaustive witness search at a smooth vertex.  For each lattice point m_i
// outside {m0, m1, m2, m3} the pair (m_k, m_l) with m_i + m0 = m_k + m_l and
// m_k, m_l != m0 is found by scanning candidates in canonical order, so the
// certificate is deterministic; if any point has no witness the search
// proves failure and throws PropertyFails.
inline DecompositionCertificate decomposition_certificate(const LatticePolytope& p,
                                                          const LatticePoint& v) {
    ChartPresentation chart = chart_presentation(p, v);
    std::vector<LatticePoint> pts = lattice_points(p);

    auto in_pts = [&pts](const LatticePoint& q) {
        return std::binary_search(pts.begin(), pts.end(), q, graded_lex_less);
    };

    DecompositionCertificate cert;
    cert.vertex = v;
    std::vector<LatticePoint> failures;
    for (const ChartExponent& ce : chart.exponents) {
        const LatticePoint target = ce.point + v;
        bool done = false;
        for (const LatticePoint& mk : pts) {
            if (mk == v) continue;
            LatticePoint ml = target - mk;
            if (ml == v || !in_pts(ml)) continue;
            cert.witnesses.push_back(Witness{ce.point, mk, ml});
            done = true;
            break;
        }
        if (!done) failures.push_back(ce.point);
    }
    if (!failures.empty()) throw PropertyFails(v, std::move(failures));
    return cert;
}

// ---------------------------------------------------------------------------
// Homogeneous quadric presentation.

// Z_chart * Z_i - Z_k * Z_l over the canonical indexing of the lattice
// points of P.
struct QuadraticBinomial {
    int chart = 0;
    int i = 0;
    int k = 0;
    int l = 0;
};

struct QuadraticPresentation {
    std::vector<LatticePoint> point_order;
    std::vector<QuadraticBinomial> binomials;
};

// Union of the chart quadrics over all vertices, deduplicated by the
// unordered pair-of-pairs {chart, i}, {k, l}.
inline QuadraticPresentation quadratic_presentation(const LatticePolytope& p) {
    if (p.dim() != 3) throw DimensionMismatch("quadratic presentations live on 3D polytopes");
    SmoothnessReport rep = is_smooth(p);
    if (!rep.all_smooth) {
        for (const auto& vs : rep.per_vertex)
            if (!vs.smooth)
                throw NotSmoothVertex("polytope is singular at " + vs.vertex.str());
    }

    QuadraticPresentation pres;
    pres.point_order = lattice_points(p);
    auto index_of = [&](const LatticePoint& q) {
        auto it = std::lower_bound(pres.point_order.begin(), pres.point_order.end(), q,
                                   graded_lex_less);
        return static_cast<int>(it - pres.point_order.begin());
    };

    std::set<std::array<int, 4>> seen;
    for (const LatticePoint& v : p.vertices()) {
        DecompositionCertificate cert = decomposition_certificate(p, v);
        const int iv = index_of(v);
        for (const Witness& w : cert.witnesses) {
            QuadraticBinomial b{iv, index_of(w.point), index_of(w.first), index_of(w.second)};
            std::array<int, 2> lhs{std::min(b.chart, b.i), std::max(b.chart, b.i)};
            std::array<int, 2> rhs{std::min(b.k, b.l), std::max(b.k, b.l)};
            if (rhs < lhs) std::swap(lhs, rhs);
            if (seen.insert({lhs[0], lhs[1], rhs[0], rhs[1]}).second)
                pres.binomials.push_back(b);
        }
    }
    return pres;
}

// ---------------------------------------------------------------------------
// Fiber-graph oracle.
//
// For each degree d <= D, the d-element multisets of P cap M are partitioned
// by their coordinate sum; two multisets are adjacent when one turns into
// the other by swapping a sub-pair {p,q} for {p',q'} with p+q = p'+q'.  The
// toric ideal is generated by quadrics through degree D iff every such
// fiber is connected, which makes this an oracle independent of the chart
// construction above.

struct FiberDegreeVerdict {
    int degree = 0;
    std::size_t fiber_count = 0;
    std::size_t multiset_count = 0;
    std::size_t disconnected_fibers = 0;
    bool connected = true;
};

struct FiberFailure {
    int degree = 0;
    LatticePoint fiber_sum;
    std::vector<LatticePoint> component_a;  // one multiset per component
    std::vector<LatticePoint> component_b;
};

struct FiberGraphReport {
    int degree_bound = 0;
    std::vector<FiberDegreeVerdict> per_degree;
    bool all_connected = true;
    std::optional<FiberFailure> first_failure;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

inline void enumerate_multisets(int count, int degree,
                                const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur(static_cast<std::size_t>(degree), 0);
    // Nondecreasing index vectors, lexicographic order.
    while (true) {
        emit(cur);
        int pos = degree - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == count - 1) --pos;
        if (pos < 0) break;
        int next = cur[static_cast<std::size_t>(pos)] + 1;
        for (int q = pos; q < degree; ++q) cur[static_cast<std::size_t>(q)] = next;
    }
}

}  // namespace detail

inline FiberGraphReport fiber_graph_oracle(const LatticePolytope& p, int degree_bound,
                                           std::size_t max_points = kOracleMaxPoints) {
    std::vector<LatticePoint> pts = lattice_points(p);
    if (pts.size() > max_points)
        throw TooLarge("fiber oracle limited to " + std::to_string(max_points) +
                       " lattice points, got " + std::to_string(pts.size()));
    if (degree_bound > kOracleMaxDegree || degree_bound < 1)
        throw TooLarge("fiber oracle degree bound must be between 1 and " +
                       std::to_string(kOracleMaxDegree));

    const int r = static_cast<int>(pts.size());
    FiberGraphReport report;
    report.degree_bound = degree_bound;

    // Pairs of indices grouped by coordinate sum, for the swap moves.
    std::map<LatticePoint, std::vector<std::array<int, 2>>> pairs_by_sum;
    for (int a = 0; a < r; ++a)
        for (int b = a; b < r; ++b)
            pairs_by_sum[pts[static_cast<std::size_t>(a)] + pts[static_cast<std::size_t>(b)]]
                .push_back({a, b});

    for (int d = 1; d <= degree_bound; ++d) {
        FiberDegreeVerdict verdict;
        verdict.degree = d;

        std::map<LatticePoint, std::vector<std::vector<int>>> fibers;
        detail::enumerate_multisets(r, d, [&](const std::vector<int>& ms) {
            LatticePoint s = LatticePoint::zero(p.dim());
            for (int ix : ms) s = s + pts[static_cast<std::size_t>(ix)];
            fibers[s].push_back(ms);
        });
        verdict.fiber_count = fibers.size();

        for (const auto& [sum, members] : fibers) {
            verdict.multiset_count += members.size();
            if (members.size() <= 1 || d < 2) continue;
            std::map<std::vector<int>, int> id;
            for (const auto& ms : members) id.emplace(ms, static_cast<int>(id.size()));
            detail::UnionFind uf(members.size());
            for (const auto& ms : members) {
                const int self = id.at(ms);
                for (std::size_t a = 0; a < ms.size(); ++a)
                    for (std::size_t b = a + 1; b < ms.size(); ++b) {
                        if (a > 0 && ms[a] == ms[a - 1]) break;
                        if (b > a + 1 && ms[b] == ms[b - 1]) continue;
                        LatticePoint psum = pts[static_cast<std::size_t>(ms[a])] +
                                            pts[static_cast<std::size_t>(ms[b])];
                        for (const auto& rep : pairs_by_sum.at(psum)) {
                            std::vector<int> next = ms;
                            next[a] = rep[0];
                            next[b] = rep[1];
                            std::sort(next.begin(), next.end());
                            uf.unite(self, id.at(next));
                        }
                    }
            }
            int root = uf.find(0);
            bool conn = true;
            int other = -1;
            for (std::size_t i = 1; i < members.size(); ++i)
                if (uf.find(static_cast<int>(i)) != root) {
                    conn = false;
                    other = static_cast<int>(i);
                    break;
                }
            if (!conn) {
                verdict.connected = false;
                ++verdict.disconnected_fibers;
                if (!report.first_failure) {
                    FiberFailure fail;
                    fail.degree = d;
                    fail.fiber_sum = sum;
                    for (int ix : members[0])
                        fail.component_a.push_back(pts[static_cast<std::size_t>(ix)]);
                    for (int ix : members[static_cast<std::size_t>(other)])
                        fail.component_b.push_back(pts[static_cast<std::size_t>(ix)]);
                    report.first_failure = fail;
                }
            }
        }
        report.all_connected &= verdict.connected;
        report.per_degree.push_back(verdict);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Normal generation and the Fujita-style counts.

// For each k <= bound, whether every lattice point of kP is a sum of k
// lattice points of P, verified inductively as (k-1)P + P covering kP.
inline std::vector<bool> normally_generated_check(const LatticePolytope& p, int bound,
                                                  std::size_t max_points = kOracleMaxPoints) {
    std::vector<LatticePoint> base = lattice_points(p);
    if (base.size() > max_points)
        throw TooLarge("normal generation check limited to " + std::to_string(max_points) +
                       " lattice points, got " + std::to_string(base.size()));
    if (bound > kOracleMaxDegree || bound < 1)
        throw TooLarge("normal generation bound must be between 1 and " +
                       std::to_string(kOracleMaxDegree));

    std::vector<bool> verdicts;
    std::vector<LatticePoint> prev = base;  // lattice points of (k-1)P
    verdicts.push_back(true);               // k = 1
    for (int k = 2; k <= bound; ++k) {
        std::vector<LatticePoint> target = lattice_points(dilate(p, k));
        std::set<std::vector<Int>> cover;
        for (const LatticePoint& a : prev)
            for (const LatticePoint& b : base) cover.insert((a + b).coords());
        bool ok = true;
        for (const LatticePoint& t : target)
            if (!cover.count(t.coords())) {
                ok = false;
                break;
            }
        verdicts.push_back(ok);
        prev = std::move(target);
    }
    return verdicts;
}

struct FujitaCounts {
    Int chi = 0;     // #(Q cap M)
    Int genus = 0;   // #(int(2Q) cap M)
    Int degree = 0;  // genus - 1 + chi
    bool quadric_by_fujita = false;  // chi >= genus + 3
};

// Curve-section counts for a 3-polytope with no interior lattice points.
inline FujitaCounts fujita_counts(const LatticePolytope& q) {
    if (q.dim() != 3) throw DimensionMismatch("fujita_counts expects a 3D polytope");
    if (!interior_lattice_points(q).empty())
        throw InteriorNotEmpty("polytope has interior lattice points");
    FujitaCounts fc;
    fc.chi = static_cast<Int>(lattice_points(q).size());
    fc.genus = static_cast<Int>(interior_lattice_points(dilate(q, 2)).size());
    fc.degree = checked_add(checked_sub(fc.genus, 1), fc.chi);
    fc.quadric_by_fujita = fc.chi >= checked_add(fc.genus, 3);
    return fc;
}

}  // namespace quadrigen

#endif
