#ifndef QUADRIGEN_GEOMETRY_HPP
#define QUADRIGEN_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "quadrigen/errors.hpp"

namespace quadrigen {

using Int = std::int64_t;

// Largest coordinate magnitude accepted on input.  Desk-scale polytopes
// stay far below this; the cap keeps all downstream determinants inside
// the checked 64-bit range.
inline constexpr Int kMaxInputCoord = 1'000'000;

// ---------------------------------------------------------------------------
// Checked 64-bit arithmetic.  Overflow raises instead of wrapping.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int gcd_nonneg(Int a, Int b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// ---------------------------------------------------------------------------
// Lattice points.
//
// A point of Z^2 or Z^3.  The dimension tag is fixed at construction and all
// arithmetic demands matching tags.  For dim 2 the third slot is kept at 0.

class LatticePoint {
  public:
    LatticePoint() : dim_(0), c_{0, 0, 0} {}
    LatticePoint(Int x, Int y) : dim_(2), c_{x, y, 0} {}
    LatticePoint(Int x, Int y, Int z) : dim_(3), c_{x, y, z} {}

    static LatticePoint zero(int dim) {
        return dim == 2 ? LatticePoint(0, 0) : LatticePoint(0, 0, 0);
    }

    static LatticePoint from_coords(const std::vector<Int>& v) {
        if (v.size() == 2) return LatticePoint(v[0], v[1]);
        if (v.size() == 3) return LatticePoint(v[0], v[1], v[2]);
        throw DimensionMismatch("point must have 2 or 3 coordinates");
    }

    int dim() const { return dim_; }
    Int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    Int coordinate_sum() const {
        Int s = 0;
        for (int i = 0; i < dim_; ++i) s = checked_add(s, c_[static_cast<std::size_t>(i)]);
        return s;
    }

    std::vector<Int> coords() const {
        return std::vector<Int>(c_.begin(), c_.begin() + dim_);
    }

    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        require_same_dim(a, b);
        LatticePoint r = a;
        for (int i = 0; i < a.dim_; ++i) r[i] = checked_add(a[i], b[i]);
        return r;
    }

    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        require_same_dim(a, b);
        LatticePoint r = a;
        for (int i = 0; i < a.dim_; ++i) r[i] = checked_sub(a[i], b[i]);
        return r;
    }

    friend LatticePoint operator*(Int k, const LatticePoint& a) {
        LatticePoint r = a;
        for (int i = 0; i < a.dim_; ++i) r[i] = checked_mul(k, a[i]);
        return r;
    }

    friend LatticePoint operator-(const LatticePoint& a) { return -1 * a; }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) {
        return !(a == b);
    }

    bool is_zero() const {
        for (int i = 0; i < dim_; ++i)
            if (c_[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim_; ++i) {
            if (i) s += ",";
            s += std::to_string(c_[static_cast<std::size_t>(i)]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
        return os << p.str();
    }

  private:
    static void require_same_dim(const LatticePoint& a, const LatticePoint& b) {
        if (a.dim_ != b.dim_) throw DimensionMismatch("mixed 2D/3D points");
    }

    int dim_;
    std::array<Int, 3> c_;
};

// Canonical order: by coordinate sum, then lexicographic.  Every ordered
// output in the library uses this comparison so that runs are reproducible.
inline bool graded_lex_less(const LatticePoint& a, const LatticePoint& b) {
    Int sa = a.coordinate_sum(), sb = b.coordinate_sum();
    if (sa != sb) return sa < sb;
    for (int i = 0; i < a.dim(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return graded_lex_less(a, b);
}

inline Int dot(const LatticePoint& a, const LatticePoint& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("dot of mixed dimensions");
    Int s = 0;
    for (int i = 0; i < a.dim(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

// z-component of the 2D cross product.
inline Int cross2(const LatticePoint& a, const LatticePoint& b) {
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

inline LatticePoint cross3(const LatticePoint& a, const LatticePoint& b) {
    return LatticePoint(checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
                        checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
                        checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0])));
}

inline Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return dot(a, cross3(b, c));
}

inline Int content(const LatticePoint& v) {
    Int g = 0;
    for (int i = 0; i < v.dim(); ++i) g = gcd_nonneg(g, v[i]);
    return g;
}

// v / gcd(v).  The zero vector has no primitive direction.
inline LatticePoint primitive(const LatticePoint& v) {
    Int g = content(v);
    if (g == 0) throw InvalidParameters("primitive direction of the zero vector");
    LatticePoint r = v;
    for (int i = 0; i < v.dim(); ++i) r[i] = v[i] / g;
    return r;
}

inline void validate_input_coords(const LatticePoint& p) {
    for (int i = 0; i < p.dim(); ++i)
        if (p[i] > kMaxInputCoord || p[i] < -kMaxInputCoord)
            throw CoordinateOutOfRange("coordinate " + std::to_string(p[i]) +
                                       " exceeds magnitude 10^6");
}

// ---------------------------------------------------------------------------
// Integer matrices and affine unimodular maps.

class IntMatrix {
  public:
    IntMatrix() : dim_(0), m_{} {}

    static IntMatrix identity(int dim) {
        IntMatrix a;
        a.dim_ = dim;
        for (int i = 0; i < dim; ++i) a.m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return a;
    }

    static IntMatrix from_columns(const std::vector<LatticePoint>& cols) {
        if (cols.empty() || (cols.size() != 2 && cols.size() != 3))
            throw DimensionMismatch("matrix needs 2 or 3 columns");
        int dim = static_cast<int>(cols.size());
        IntMatrix a;
        a.dim_ = dim;
        for (int j = 0; j < dim; ++j) {
            if (cols[static_cast<std::size_t>(j)].dim() != dim)
                throw DimensionMismatch("column dimension mismatch");
            for (int i = 0; i < dim; ++i) a.at(i, j) = cols[static_cast<std::size_t>(j)][i];
        }
        return a;
    }

    static IntMatrix from_rows(const std::vector<LatticePoint>& rows) {
        IntMatrix a = from_columns(rows);
        return a.transposed();
    }

    int dim() const { return dim_; }
    Int at(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    Int& at(int i, int j) { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    LatticePoint row(int i) const {
        return dim_ == 2 ? LatticePoint(at(i, 0), at(i, 1))
                         : LatticePoint(at(i, 0), at(i, 1), at(i, 2));
    }
    LatticePoint column(int j) const {
        return dim_ == 2 ? LatticePoint(at(0, j), at(1, j))
                         : LatticePoint(at(0, j), at(1, j), at(2, j));
    }

    LatticePoint apply(const LatticePoint& x) const {
        if (x.dim() != dim_) throw DimensionMismatch("matrix/vector dimension mismatch");
        LatticePoint r = LatticePoint::zero(dim_);
        for (int i = 0; i < dim_; ++i) r[i] = dot(row(i), x);
        return r;
    }

    Int determinant() const {
        if (dim_ == 2) return cross2(column(0), column(1));
        return det3(column(0), column(1), column(2));
    }

    IntMatrix transposed() const {
        IntMatrix t;
        t.dim_ = dim_;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) t.at(i, j) = at(j, i);
        return t;
    }

    IntMatrix times(const IntMatrix& b) const {
        if (dim_ != b.dim_) throw DimensionMismatch("matrix product dimension mismatch");
        IntMatrix r;
        r.dim_ = dim_;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                Int s = 0;
                for (int k = 0; k < dim_; ++k)
                    s = checked_add(s, checked_mul(at(i, k), b.at(k, j)));
                r.at(i, j) = s;
            }
        return r;
    }

    // Exact inverse; only valid when |det| = 1.
    IntMatrix inverse_unimodular() const {
        Int d = determinant();
        if (d != 1 && d != -1) throw NotUnimodular("matrix determinant is not +-1");
        IntMatrix inv;
        inv.dim_ = dim_;
        if (dim_ == 2) {
            inv.at(0, 0) = checked_mul(d, at(1, 1));
            inv.at(0, 1) = checked_mul(d, checked_neg(at(0, 1)));
            inv.at(1, 0) = checked_mul(d, checked_neg(at(1, 0)));
            inv.at(1, 1) = checked_mul(d, at(0, 0));
        } else {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
                    int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
                    Int cof = checked_sub(checked_mul(at(i1, j1), at(i2, j2)),
                                          checked_mul(at(i1, j2), at(i2, j1)));
                    inv.at(i, j) = checked_mul(d, cof);
                }
        }
        return inv;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.dim_ == b.dim_ && a.m_ == b.m_;
    }

  private:
    int dim_;
    std::array<std::array<Int, 3>, 3> m_{};
};

// x |-> A x + t with det A = +-1, so the lattice maps onto itself.
class AffineUnimodularMap {
  public:
    AffineUnimodularMap(const IntMatrix& linear, const LatticePoint& translation)
        : linear_(linear), translation_(translation) {
        Int d = linear.determinant();
        if (d != 1 && d != -1)
            throw NotUnimodular("determinant " + std::to_string(d) + " is not +-1");
        if (translation.dim() != linear.dim())
            throw DimensionMismatch("translation dimension mismatch");
    }

    static AffineUnimodularMap identity(int dim) {
        return AffineUnimodularMap(IntMatrix::identity(dim), LatticePoint::zero(dim));
    }

    static AffineUnimodularMap translation_by(const LatticePoint& t) {
        return AffineUnimodularMap(IntMatrix::identity(t.dim()), t);
    }

    int dim() const { return linear_.dim(); }
    const IntMatrix& linear() const { return linear_; }
    const LatticePoint& translation() const { return translation_; }

    LatticePoint apply(const LatticePoint& x) const { return linear_.apply(x) + translation_; }

    AffineUnimodularMap inverse() const {
        IntMatrix inv = linear_.inverse_unimodular();
        return AffineUnimodularMap(inv, -inv.apply(translation_));
    }

    // The map doing `inner` first, then `*this`.
    AffineUnimodularMap after(const AffineUnimodularMap& inner) const {
        return AffineUnimodularMap(linear_.times(inner.linear_),
                                   linear_.apply(inner.translation_) + translation_);
    }

  private:
    IntMatrix linear_;
    LatticePoint translation_;
};

// Unimodular matrix whose last row is the given primitive vector, so the
// functional n.x becomes the last coordinate in the new basis.
inline IntMatrix complete_to_unimodular_row(const LatticePoint& n) {
    if (content(n) != 1) throw InvalidParameters("normal must be primitive");
    int dim = n.dim();
    // Column-reduce n to (0,...,0,1), accumulating the operations into V;
    // then n = last row of V^-1.
    IntMatrix v = IntMatrix::identity(dim);
    std::vector<Int> w(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) w[static_cast<std::size_t>(i)] = n[i];
    auto col_addmul = [&](int dst, int src, Int k) {
        w[static_cast<std::size_t>(dst)] =
            checked_add(w[static_cast<std::size_t>(dst)], checked_mul(k, w[static_cast<std::size_t>(src)]));
        for (int r = 0; r < dim; ++r)
            v.at(r, dst) = checked_add(v.at(r, dst), checked_mul(k, v.at(r, src)));
    };
    auto col_swap_negate = [&](int a, int b) {
        // (col_a, col_b) <- (col_b, -col_a), a determinant-preserving swap.
        std::swap(w[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(b)]);
        w[static_cast<std::size_t>(b)] = checked_neg(w[static_cast<std::size_t>(b)]);
        for (int r = 0; r < dim; ++r) {
            std::swap(v.at(r, a), v.at(r, b));
            v.at(r, b) = checked_neg(v.at(r, b));
        }
    };
    // Clear every entry against the last one by the Euclidean algorithm.
    for (int j = 0; j + 1 < dim; ++j) {
        while (w[static_cast<std::size_t>(j)] != 0) {
            if (w[static_cast<std::size_t>(dim - 1)] != 0) {
                Int q = w[static_cast<std::size_t>(j)] / w[static_cast<std::size_t>(dim - 1)];
                if (q != 0) col_addmul(j, dim - 1, checked_neg(q));
            }
            if (w[static_cast<std::size_t>(j)] != 0) col_swap_negate(j, dim - 1);
        }
    }
    if (w[static_cast<std::size_t>(dim - 1)] == -1) {
        for (int r = 0; r < dim; ++r) {
            v.at(r, dim - 1) = checked_neg(v.at(r, dim - 1));
            v.at(r, 0) = checked_neg(v.at(r, 0));
        }
        w[static_cast<std::size_t>(dim - 1)] = 1;
    }
    return v.inverse_unimodular();
}

}  // namespace quadrigen

#endif
