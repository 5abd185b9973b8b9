#pragma once

#include <string>

#include "liebialg/algebra.hpp"
#include "liebialg/linalg.hpp"
#include "liebialg/report.hpp"

namespace liebialg {

/// Bilinear form on a coordinate space, given by its Gram matrix in the
/// working basis.
struct BilinearForm {
    int dim = 0;
    RatMat matrix;
    bool symmetric = false;

    BilinearForm() = default;
    BilinearForm(int dim, RatMat m, bool symmetric) : dim(dim), matrix(std::move(m)), symmetric(symmetric) {
        if (matrix.rows() != dim || matrix.cols() != dim)
            throw dimension_mismatch("bilinear form matrix");
        if (symmetric && !(matrix == matrix.transpose()))
            throw bad_params("form flagged symmetric but matrix is not");
    }

    Rational eval(const RatVec& x, const RatVec& y) const { return dot(x, matrix.apply(y)); }
};

/// Canonical pairing on g (+) g*: <(X,a),(Y,b)> = a(Y) + b(X).
inline BilinearForm canonical_pairing_form(int g_dim) {
    RatMat m(2 * g_dim, 2 * g_dim);
    for (int i = 0; i < g_dim; ++i) {
        m(i, g_dim + i) = 1;
        m(g_dim + i, i) = 1;
    }
    return BilinearForm(2 * g_dim, std::move(m), true);
}

/// Invariance <[z,x],y> + <x,[z,y]> = 0 over all basis triples, plus a
/// nondegeneracy check (det != 0).
inline Report verify_invariant_form(const LieAlgebra& alg, const BilinearForm& form) {
    Report rep;
    rep.suite = "invariant_form";
    if (form.dim != alg.dim()) throw dimension_mismatch("form vs algebra");
    const int d = alg.dim();
    bool invariant = true;
    std::string witness;
    for (int z = 0; z < d && invariant; ++z)
        for (int x = 0; x < d && invariant; ++x)
            for (int y = form.symmetric ? x : 0; y < d; ++y) {
                Rational v = 0;
                for (const auto& [k, coef] : alg.bracket_basis(z, x)) v += coef * form.matrix(k, y);
                for (const auto& [k, coef] : alg.bracket_basis(z, y)) v += coef * form.matrix(x, k);
                if (v != 0) {
                    invariant = false;
                    witness = "(z,x,y)=(" + std::to_string(z + 1) + "," + std::to_string(x + 1) +
                              "," + std::to_string(y + 1) + ")";
                    break;
                }
            }
    rep.add("invariant", invariant, witness);
    bool nondeg = determinant(form.matrix) != 0;
    rep.add("nondegenerate", nondeg, nondeg ? "" : "det = 0");
    return rep;
}

}  // namespace liebialg
