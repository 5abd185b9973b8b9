#pragma once

#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "liebialg/errors.hpp"
#include "liebialg/linalg.hpp"
#include "liebialg/rational.hpp"

namespace liebialg {

struct JacobiReport {
    bool pass = true;
    // First violating quadruple (basis triple + component), 0-based; valid when !pass.
    int i = -1, j = -1, k = -1, l = -1;

    std::string describe() const {
        if (pass) return "jacobi holds";
        return "jacobi fails at (i,j,k,l)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "," + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")";
    }
};

enum class RepKind { adjoint, coadjoint };

/// Finite-dimensional Lie algebra over the rationals, stored as an exact
/// structure-constant tensor: [X_i, X_j] = sum_k c(i,j,k) X_k.
/// Antisymmetry in (i,j) is enforced at construction; the Jacobi identity
/// is checked on demand via verify_jacobi().
class LieAlgebra {
public:
    /// Sparse entry (i, j, k, value), 0-based indices.
    using Entry = std::tuple<int, int, int, Rational>;

    LieAlgebra(int dim, std::vector<std::string> labels, const std::vector<Entry>& entries)
        : dim_(dim), labels_(std::move(labels)) {
        if (dim <= 0) throw bad_params("algebra dimension must be positive");
        if (labels_.empty()) {
            labels_.reserve(dim);
            for (int i = 0; i < dim; ++i) labels_.push_back("X" + std::to_string(i + 1));
        }
        if (static_cast<int>(labels_.size()) != dim) throw bad_params("label count != dim");
        c_.assign(cube(), Rational(0));
        std::vector<bool> given(cube(), false);
        for (const auto& [i, j, k, v] : entries) {
            check_index(i);
            check_index(j);
            check_index(k);
            if (given[idx(i, j, k)] && c_[idx(i, j, k)] != v)
                throw antisymmetry_violation(i + 1, j + 1, k + 1);
            c_[idx(i, j, k)] = v;
            given[idx(i, j, k)] = true;
        }
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k)
                if (given[idx(i, i, k)] && c_[idx(i, i, k)] != 0)
                    throw antisymmetry_violation(i + 1, i + 1, k + 1);
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) {
                    bool gij = given[idx(i, j, k)], gji = given[idx(j, i, k)];
                    if (gij && gji) {
                        if (c_[idx(i, j, k)] != -c_[idx(j, i, k)])
                            throw antisymmetry_violation(i + 1, j + 1, k + 1);
                    } else if (gij) {
                        c_[idx(j, i, k)] = -c_[idx(i, j, k)];
                    } else if (gji) {
                        c_[idx(i, j, k)] = -c_[idx(j, i, k)];
                    }
                }
        build_pair_lists();
    }

    /// Construct from a complete dense tensor (must already be antisymmetric).
    LieAlgebra(int dim, std::vector<std::string> labels, std::vector<Rational> dense)
        : dim_(dim), labels_(std::move(labels)), c_(std::move(dense)) {
        if (static_cast<int>(c_.size()) != cube()) throw dimension_mismatch("dense tensor size");
        if (static_cast<int>(labels_.size()) != dim_) throw bad_params("label count != dim");
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j <= i; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (c_[idx(i, j, k)] != -c_[idx(j, i, k)])
                        throw antisymmetry_violation(i + 1, j + 1, k + 1);
        build_pair_lists();
    }

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }

    const Rational& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }

    /// Nonzero components of [X_i, X_j] as (k, coefficient) pairs.
    const std::vector<std::pair<int, Rational>>& bracket_basis(int i, int j) const {
        return pairs_[static_cast<size_t>(i) * dim_ + j];
    }

    RatVec bracket(const RatVec& x, const RatVec& y) const {
        if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
            throw dimension_mismatch("bracket operands");
        RatVec r(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                Rational f = x[i] * y[j];
                for (const auto& [k, coef] : bracket_basis(i, j)) r[k] += f * coef;
            }
        }
        return r;
    }

    /// Exhaustive Jacobi check over all basis triples; reports the first
    /// violating (i,j,k,l) on failure.
    JacobiReport verify_jacobi() const {
        RatVec acc(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = j + 1; k < dim_; ++k) {
                    for (auto& v : acc) v = 0;
                    accumulate_nested(acc, i, j, k);
                    accumulate_nested(acc, j, k, i);
                    accumulate_nested(acc, k, i, j);
                    for (int l = 0; l < dim_; ++l)
                        if (acc[l] != 0) return JacobiReport{false, i, j, k, l};
                }
        return JacobiReport{};
    }

    /// Adjoint: M y = [x, y].  Coadjoint: M = -(adjoint)^T in the coordinate
    /// dual basis, so that <M a, y> = <a, [y, x]>.
    RatMat rep_matrix(RepKind kind, const RatVec& x) const {
        if (static_cast<int>(x.size()) != dim_) throw dimension_mismatch("rep_matrix argument");
        RatMat ad(dim_, dim_);
        for (int i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (int m = 0; m < dim_; ++m)
                for (const auto& [k, coef] : bracket_basis(i, m)) ad(k, m) += x[i] * coef;
        }
        if (kind == RepKind::adjoint) return ad;
        RatMat co(dim_, dim_);
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b) co(a, b) = -ad(b, a);
        return co;
    }

private:
    size_t cube() const { return static_cast<size_t>(dim_) * dim_ * dim_; }
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
    }
    void check_index(int i) const {
        if (i < 0 || i >= dim_) throw bad_params("structure constant index out of range");
    }
    void build_pair_lists() {
        pairs_.assign(static_cast<size_t>(dim_) * dim_, {});
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (c_[idx(i, j, k)] != 0)
                        pairs_[static_cast<size_t>(i) * dim_ + j].emplace_back(k, c_[idx(i, j, k)]);
    }
    // acc += [[X_a, X_b], X_c]
    void accumulate_nested(RatVec& acc, int a, int b, int c) const {
        for (const auto& [m, f] : bracket_basis(a, b))
            for (const auto& [k, g] : bracket_basis(m, c)) acc[k] += f * g;
    }

    int dim_;
    std::vector<std::string> labels_;
    std::vector<Rational> c_;
    std::vector<std::vector<std::pair<int, Rational>>> pairs_;
};

inline LieAlgebra new_lie_algebra(int dim, std::vector<std::string> labels,
                                  const std::vector<LieAlgebra::Entry>& entries) {
    return LieAlgebra(dim, std::move(labels), entries);
}

/// Coadjoint semidirect product g x| g* with g* an abelian ideal:
/// [X_i, X_j] as in g, [X_i, X*_j] = ad^v_{X_i} X*_j, [X*_i, X*_j] = 0.
inline LieAlgebra semidirect_with_dual(const LieAlgebra& g) {
    const int d = g.dim();
    const int dd = 2 * d;
    std::vector<std::string> labels;
    labels.reserve(dd);
    for (int i = 0; i < d; ++i) labels.push_back(g.label(i));
    for (int i = 0; i < d; ++i) labels.push_back(g.label(i) + "*");
    std::vector<LieAlgebra::Entry> entries;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& [k, coef] : g.bracket_basis(i, j)) {
                if (j < i) continue;  // mirror filled by constructor
                entries.emplace_back(i, j, k, coef);
            }
    // [X_i, X*_j] = -sum_k c(i,k,j) X*_k
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j)
                if (g.c(i, k, j) != 0) entries.emplace_back(i, d + j, d + k, -g.c(i, k, j));
    return LieAlgebra(dd, std::move(labels), entries);
}

}  // namespace liebialg
