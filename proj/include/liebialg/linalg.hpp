#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liebialg/errors.hpp"
#include "liebialg/rational.hpp"

namespace liebialg {

using RatVec = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RatMat from_rows(const std::vector<RatVec>& rows) {
        if (rows.empty()) return RatMat(0, 0);
        RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols())
                throw dimension_mismatch("ragged row list");
            for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    RatVec row(int i) const {
        RatVec r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    void set_row(int i, const RatVec& v) {
        if (static_cast<int>(v.size()) != cols_) throw dimension_mismatch("row length");
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    RatMat transpose() const {
        RatMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMat operator*(const RatMat& o) const {
        if (cols_ != o.rows_) throw dimension_mismatch("matrix product");
        RatMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    if (o(k, j) != 0) r(i, j) += x * o(k, j);
            }
        return r;
    }

    RatVec apply(const RatVec& v) const {
        if (static_cast<int>(v.size()) != cols_) throw dimension_mismatch("matrix-vector product");
        RatVec r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool operator==(const RatMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

inline RatVec operator+(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector sum");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector difference");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec operator*(const Rational& c, const RatVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("dot product");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

/// In-place Gauss-Jordan reduction to reduced row-echelon form.
/// Returns the pivot column of each pivot row; rank = returned size.
inline std::vector<int> rref_in_place(RatMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref_in_place(m).size()); }

/// Basis of { x : M x = 0 }, one row per basis vector (standard
/// free-variable parametrization of the RREF).
inline RatMat nullspace(RatMat m) {
    const int n = m.cols();
    std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMat basis(static_cast<int>(free_cols.size()), n);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis(static_cast<int>(k), fc) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            basis(static_cast<int>(k), pivots[r]) = -m(static_cast<int>(r), fc);
    }
    return basis;
}

struct LinearSolution {
    bool consistent = false;
    RatVec particular;   // one solution when consistent
    RatMat kernel;       // rows span the homogeneous solution space
};

/// Exact solve of A x = b with full solution-set description.
inline LinearSolution solve_linear(const RatMat& a, const RatVec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw dimension_mismatch("solve_linear rhs");
    RatMat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref_in_place(aug);
    LinearSolution sol;
    if (!pivots.empty() && pivots.back() == a.cols()) return sol;  // 0 = 1 row
    sol.consistent = true;
    sol.particular.assign(a.cols(), 0);
    for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(static_cast<int>(r), a.cols());
    sol.kernel = nullspace(a);
    return sol;
}

/// Determinant by fraction-preserving Gaussian elimination.
inline Rational determinant(RatMat m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("determinant of non-square matrix");
    Rational det = 1;
    const int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Rational inv = Rational(1) / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Inverse of a square invertible matrix; throws on singular input.
inline RatMat inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("inverse of non-square matrix");
    const int n = m.rows();
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw degenerate_pairing();
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace liebialg
