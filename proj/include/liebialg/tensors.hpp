#pragma once

#include <array>
#include <utility>
#include <vector>

#include "liebialg/errors.hpp"
#include "liebialg/linalg.hpp"
#include "liebialg/rational.hpp"

namespace liebialg {

// Wedge convention used throughout: x^y := x(x)y - y(x)x (no 1/2), so the
// coefficient of the basis wedge X_i^X_j (i<j) coincides with the (i,j)
// component of the corresponding tensor in g(x)g.

/// Antisymmetric 2-tensor r^{ij}, housing r-matrices.
class Bivector {
public:
    explicit Bivector(int dim) : dim_(dim), m_(dim, dim) {}

    static Bivector wedge(const RatVec& u, const RatVec& w) {
        if (u.size() != w.size()) throw dimension_mismatch("wedge operands");
        Bivector b(static_cast<int>(u.size()));
        for (int i = 0; i < b.dim_; ++i) {
            if (u[i] == 0 && w[i] == 0) continue;
            for (int j = 0; j < b.dim_; ++j) b.m_(i, j) += u[i] * w[j] - w[i] * u[j];
        }
        return b;
    }

    static Bivector from_matrix(RatMat m) {
        Bivector b(m.rows());
        if (m.rows() != m.cols()) throw dimension_mismatch("bivector matrix");
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m(i, j) != -m(j, i)) throw bad_params("bivector matrix not antisymmetric");
        b.m_ = std::move(m);
        return b;
    }

    int dim() const { return dim_; }
    const Rational& operator()(int i, int j) const { return m_(i, j); }
    const RatMat& matrix() const { return m_; }

    /// Set the coefficient of X_i^X_j; requires i != j, stores both orders.
    void set(int i, int j, const Rational& v) {
        if (i == j) throw bad_params("bivector diagonal entry");
        m_(i, j) = v;
        m_(j, i) = -v;
    }
    void accumulate(int i, int j, const Rational& v) {
        if (i == j) {
            if (v != 0) throw bad_params("bivector diagonal entry");
            return;
        }
        m_(i, j) += v;
        m_(j, i) -= v;
    }

    Bivector& operator+=(const Bivector& o) {
        if (o.dim_ != dim_) throw dimension_mismatch("bivector sum");
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m_(i, j) += o.m_(i, j);
        return *this;
    }
    Bivector operator+(const Bivector& o) const {
        Bivector r = *this;
        r += o;
        return r;
    }
    Bivector operator-() const {
        Bivector r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r.m_(i, j) = -m_(i, j);
        return r;
    }
    Bivector scaled(const Rational& c) const {
        Bivector r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r.m_(i, j) = c * m_(i, j);
        return r;
    }

    bool is_zero() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (m_(i, j) != 0) return false;
        return true;
    }

    bool operator==(const Bivector& o) const { return dim_ == o.dim_ && m_ == o.m_; }

    /// Wedge-basis coordinates (i<j, lexicographic), used by the linear solver.
    RatVec wedge_coords() const {
        RatVec v;
        v.reserve(static_cast<size_t>(dim_) * (dim_ - 1) / 2);
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j) v.push_back(m_(i, j));
        return v;
    }

    static Bivector from_wedge_coords(int dim, const RatVec& v) {
        Bivector b(dim);
        size_t p = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) b.set(i, j, v[p++]);
        return b;
    }

private:
    int dim_;
    RatMat m_;
};

/// Fully antisymmetric 3-tensor, stored on i<j<k.
class Trivector {
public:
    explicit Trivector(int dim) : dim_(dim) {
        size_t n = 0;
        if (dim >= 3) n = static_cast<size_t>(dim) * (dim - 1) * (dim - 2) / 6;
        t_.assign(n, Rational(0));
    }

    int dim() const { return dim_; }

    Rational get(int i, int j, int k) const {
        int sign = sort_sign(i, j, k);
        if (sign == 0) return 0;
        return sign > 0 ? t_[flat(i, j, k)] : -t_[flat(i, j, k)];
    }

    void set_sorted(int i, int j, int k, const Rational& v) { t_[flat_checked(i, j, k)] = v; }
    void accumulate(int i, int j, int k, const Rational& v) {
        int sign = sort_sign(i, j, k);
        if (sign == 0) {
            if (v != 0) throw bad_params("trivector entry with repeated index");
            return;
        }
        t_[flat(i, j, k)] += sign > 0 ? v : -v;
    }

    bool is_zero() const {
        for (const auto& x : t_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Trivector& o) const { return dim_ == o.dim_ && t_ == o.t_; }

    Trivector scaled(const Rational& c) const {
        Trivector r(dim_);
        for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = c * t_[i];
        return r;
    }

    Trivector operator-(const Trivector& o) const {
        if (o.dim_ != dim_) throw dimension_mismatch("trivector difference");
        Trivector r(dim_);
        for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = t_[i] - o.t_[i];
        return r;
    }

    /// First nonzero ordered triple, or (-1,-1,-1) if zero.
    std::array<int, 3> first_nonzero() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = j + 1; k < dim_; ++k)
                    if (t_[flat(i, j, k)] != 0) return {i, j, k};
        return {-1, -1, -1};
    }

private:
    // Sorts (i,j,k) in place conceptually; returns the permutation sign,
    // or 0 when indices repeat.  Arguments are passed by value.
    static int sort_sign(int& i, int& j, int& k) {
        int sign = 1;
        if (i > j) {
            std::swap(i, j);
            sign = -sign;
        }
        if (j > k) {
            std::swap(j, k);
            sign = -sign;
        }
        if (i > j) {
            std::swap(i, j);
            sign = -sign;
        }
        if (i == j || j == k) return 0;
        return sign;
    }

    // Position of (i<j<k) in the lexicographic enumeration of ordered triples.
    size_t flat(int i, int j, int k) const {
        size_t idx = 0;
        for (int a = 0; a < i; ++a) {
            size_t rem = static_cast<size_t>(dim_ - 1 - a);
            idx += rem * (rem - 1) / 2;
        }
        for (int b = i + 1; b < j; ++b) idx += static_cast<size_t>(dim_ - 1 - b);
        idx += static_cast<size_t>(k - j - 1);
        return idx;
    }

    size_t flat_checked(int i, int j, int k) const {
        if (!(0 <= i && i < j && j < k && k < dim_)) throw bad_params("trivector index order");
        return flat(i, j, k);
    }

    int dim_;
    std::vector<Rational> t_;
};

/// Linear map delta: g -> g^g as a 3-index tensor,
/// d(i,j,k) = coefficient of X_j^X_k in delta(X_i), antisymmetric in (j,k).
class Cobracket {
public:
    explicit Cobracket(int dim) : dim_(dim), d_(static_cast<size_t>(dim) * dim * dim, Rational(0)) {}

    int dim() const { return dim_; }

    const Rational& d(int i, int j, int k) const { return d_[idx(i, j, k)]; }

    void set(int i, int j, int k, const Rational& v) {
        if (j == k) throw bad_params("cobracket entry with j == k");
        d_[idx(i, j, k)] = v;
        d_[idx(i, k, j)] = -v;
    }
    void accumulate(int i, int j, int k, const Rational& v) {
        if (j == k) {
            if (v != 0) throw bad_params("cobracket entry with j == k");
            return;
        }
        d_[idx(i, j, k)] += v;
        d_[idx(i, k, j)] -= v;
    }

    bool is_zero() const {
        for (const auto& x : d_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Cobracket& o) const { return dim_ == o.dim_ && d_ == o.d_; }

    Cobracket scaled(const Rational& c) const {
        Cobracket r(dim_);
        for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = c * d_[i];
        return r;
    }

    Cobracket operator+(const Cobracket& o) const {
        if (o.dim_ != dim_) throw dimension_mismatch("cobracket sum");
        Cobracket r(dim_);
        for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
        return r;
    }

private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
    }

    int dim_;
    std::vector<Rational> d_;
};

}  // namespace liebialg
