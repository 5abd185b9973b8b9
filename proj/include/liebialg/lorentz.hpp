#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <string>

#include "liebialg/errors.hpp"

// Numerical realization of the SO0(1,n) decompositions.  Everything here
// works in long double; matrices use the mostly-plus index order of the
// exact modules: index 0 is the timelike direction, eta = diag(1,-1,...,-1).

namespace liebialg::lorentz {

using Scalar = long double;
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline Mat minkowski(int n) {
    Mat eta = Mat::Identity(n + 1, n + 1);
    for (int i = 1; i <= n; ++i) eta(i, i) = -1;
    return eta;
}

inline Scalar max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

/// Boost A(t): cosh/sinh block on the (first, last) coordinates.
inline Mat mat_a(int n, Scalar t) {
    Mat a = Mat::Identity(n + 1, n + 1);
    a(0, 0) = std::cosh(t);
    a(n, n) = std::cosh(t);
    a(0, n) = std::sinh(t);
    a(n, 0) = std::sinh(t);
    return a;
}

/// Nilpotent N(x), x in R^{n-1} indexed by the middle coordinates.
inline Mat mat_n(int n, const Vec& x) {
    if (x.size() != n - 1) throw bad_params("N(x) needs an (n-1)-vector");
    Scalar half_sq = x.squaredNorm() / 2;
    Mat m = Mat::Identity(n + 1, n + 1);
    m(0, 0) = 1 + half_sq;
    m(0, n) = half_sq;
    m(n, 0) = -half_sq;
    m(n, n) = 1 - half_sq;
    for (int j = 1; j < n; ++j) {
        m(0, j) = -x(j - 1);
        m(j, 0) = -x(j - 1);
        m(j, n) = -x(j - 1);
        m(n, j) = x(j - 1);
    }
    return m;
}

/// Matrix exponential by scaling and squaring with a truncated series.
inline Mat expm(const Mat& m) {
    const int d = static_cast<int>(m.rows());
    Scalar norm = max_abs(m);
    int squarings = 0;
    while (norm > Scalar(0.5)) {
        norm /= 2;
        ++squarings;
    }
    Mat t = m / std::pow(Scalar(2), squarings);
    Mat sum = Mat::Identity(d, d);
    Mat term = Mat::Identity(d, d);
    for (int j = 1; j <= 40; ++j) {
        term = (term * t) / Scalar(j);
        sum += term;
        if (max_abs(term) < Scalar(1e-24) * max_abs(sum)) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

inline void check_antisymmetric(const Mat& s, int n) {
    if (s.rows() != n - 1 || s.cols() != n - 1)
        throw bad_params("s must be an (n-1)x(n-1) matrix");
    if (max_abs(Mat(s + s.transpose())) > Scalar(1e-12))
        throw bad_params("s must be antisymmetric");
}

/// S(t) = exp(t s) on the middle block; identity on the first and last
/// coordinates.  s is a real antisymmetric (n-1)x(n-1) matrix.
inline Mat mat_s(int n, const Mat& s, Scalar t) {
    check_antisymmetric(s, n);
    Mat block = expm(Mat(t * s));
    Mat m = Mat::Identity(n + 1, n + 1);
    m.block(1, 1, n - 1, n - 1) = block;
    return m;
}

/// F(t) = A(t) S(t) = S(t) A(t).
inline Mat mat_f(int n, const Mat& s, Scalar t) { return mat_a(n, t) * mat_s(n, s, t); }

/// k0 = diag(I_{n-1}, -I_2): the component representative used to extend the
/// Poincare-type decomposition.
inline Mat mat_k0(int n) {
    Mat m = Mat::Identity(n + 1, n + 1);
    m(n - 1, n - 1) = -1;
    m(n, n) = -1;
    return m;
}

/// Dispatch used by the CLI: kind in {A, N, S, F, K0}.
inline Mat factor_matrix(const std::string& kind, int n, Scalar t, const Vec& x, const Mat& s) {
    if (n < 2) throw bad_params("n must be at least 2");
    if (kind == "A") return mat_a(n, t);
    if (kind == "N") return mat_n(n, x);
    if (kind == "S") return mat_s(n, s, t);
    if (kind == "F") return mat_f(n, s, t);
    if (kind == "K0") return mat_k0(n);
    throw bad_params("unknown factor kind '" + kind + "'");
}

struct So0Report {
    bool pass = false;
    Scalar ortho_residual = 0;  // max |g^T eta g - eta|
    Scalar det_error = 0;       // |det g - 1|
    Scalar g11 = 0;
    bool ortho_ok = false, det_ok = false, component_ok = false;
};

/// Membership in the identity component: eta-orthogonality, det = +1, and
/// g11 >= 1 (top-left entry dominates on O(1,n)).
inline So0Report verify_so0(const Mat& g, int n, Scalar tol = 1e-9) {
    So0Report rep;
    if (g.rows() != n + 1 || g.cols() != n + 1) throw bad_params("matrix size vs n");
    Mat eta = minkowski(n);
    rep.ortho_residual = max_abs(Mat(g.transpose() * eta * g - eta));
    rep.det_error = std::abs(g.determinant() - Scalar(1));
    rep.g11 = g(0, 0);
    rep.ortho_ok = rep.ortho_residual < tol;
    rep.det_ok = rep.det_error < tol;
    rep.component_ok = rep.g11 >= 1 - tol;
    rep.pass = rep.ortho_ok && rep.det_ok && rep.component_ok;
    return rep;
}

/// Deterministic sample of SO0(1,n): exponential of a random so(1,n) element
/// with entries in [-2,2] (uniform draw, then antisymmetrized against eta).
inline Mat sample_so0(int n, std::uint64_t seed) {
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next_u64 = [&state]() {
        // xorshift* generator; keeps the stream identical across platforms
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 2685821657736338717ULL;
    };
    auto uniform = [&next_u64]() {
        return Scalar(-2) + Scalar(4) * (Scalar(next_u64() >> 11) / Scalar(9007199254740992.0L));
    };
    Mat m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) m(i, j) = uniform();
    Mat eta = minkowski(n);
    Mat x = (m - eta * m.transpose() * eta) / 2;
    return expm(x);
}

struct IwasawaFactors {
    Mat k;     // block diag(1, T), T in SO(n)
    Scalar t;  // boost parameter
    Vec x;     // nilpotent parameter, length n-1
};

/// Residual of the block form diag(1, T), T in SO(n).
inline Scalar k_block_residual(const Mat& k, int n) {
    Scalar r = std::abs(k(0, 0) - Scalar(1));
    for (int j = 1; j <= n; ++j) {
        r = std::max(r, std::abs(k(0, j)));
        r = std::max(r, std::abs(k(j, 0)));
    }
    Mat t = k.block(1, 1, n, n);
    r = std::max(r, max_abs(Mat(t.transpose() * t - Mat::Identity(n, n))));
    r = std::max(r, std::abs(t.determinant() - Scalar(1)));
    return r;
}

/// Residual of the block form diag(T~, 1), T~ in SO0(1, n-1).
inline Scalar poincare_block_residual(const Mat& k, int n) {
    Scalar r = std::abs(k(n, n) - Scalar(1));
    for (int j = 0; j < n; ++j) {
        r = std::max(r, std::abs(k(n, j)));
        r = std::max(r, std::abs(k(j, n)));
    }
    Mat t = k.block(0, 0, n, n);
    Mat eta = minkowski(n - 1);
    r = std::max(r, max_abs(Mat(t.transpose() * eta * t - eta)));
    r = std::max(r, std::abs(t.determinant() - Scalar(1)));
    r = std::max(r, std::max(Scalar(0), Scalar(1) - t(0, 0)));
    return r;
}

/// Global Iwasawa decomposition g = k A(t) N(x), factors read off the first
/// row of g: e^{-t} = g11 - g1,n+1 and x_j = -g1j e^t.
inline IwasawaFactors iwasawa_decompose(const Mat& g, int n, Scalar tol = 1e-9) {
    if (g.rows() != n + 1 || g.cols() != n + 1) throw bad_params("matrix size vs n");
    // Checked before membership: boosts large enough to push e^{-t} below tol
    // also wreck the orthogonality residual, and the boundary diagnostic is
    // the useful one there.
    Scalar em = g(0, 0) - g(0, n);
    if (em <= tol) throw numerical_breakdown("g11 - g1,n+1 = " +
                                             std::to_string(static_cast<double>(em)));
    So0Report mem = verify_so0(g, n, tol);
    if (!mem.pass)
        throw not_in_group("membership residual " + std::to_string(static_cast<double>(
                               std::max(mem.ortho_residual, mem.det_error))));
    IwasawaFactors f;
    f.t = -std::log(em);
    f.x = Vec(n - 1);
    for (int j = 1; j < n; ++j) f.x(j - 1) = -g(0, j) / em;
    f.k = g * mat_n(n, -f.x) * mat_a(n, -f.t);
    if (k_block_residual(f.k, n) > tol)
        throw numerical_breakdown("Iwasawa k factor is not in K");
    return f;
}

enum class KfnBranch { euclid, poincare, extended_k0 };

inline const char* branch_name(KfnBranch b) {
    switch (b) {
        case KfnBranch::euclid: return "euclid";
        case KfnBranch::poincare: return "poincare";
        default: return "extended_k0";
    }
}

struct KfnFactors {
    Mat k_tilde;
    Scalar t = 0;
    Vec x;
    KfnBranch branch = KfnBranch::euclid;
};

/// g = k~ F(t) N(x) with k~ in K: global, reduces to Iwasawa for s = 0
/// via k~ = k S(-t).
inline KfnFactors kfn_euclid(const Mat& g, int n, const Mat& s, Scalar tol = 1e-9) {
    IwasawaFactors iw = iwasawa_decompose(g, n, tol);
    KfnFactors f;
    f.t = iw.t;
    f.x = iw.x;
    f.k_tilde = iw.k * mat_s(n, s, -iw.t);
    f.branch = KfnBranch::euclid;
    return f;
}

/// W(g) := eta(g(e_1 - e_{n+1}), e_{n+1}); positive on the Poincare-type
/// K~FN set, negative at k0.
inline Scalar w_value(const Mat& g, int n) { return g(n, n) - g(n, 0); }

struct KfnPoincareResult {
    bool ok = false;
    KfnFactors factors;       // valid iff ok
    Scalar obstruction = 0;   // the k_{n+1,n+1} entry when obstructed
};

/// Poincare-type decomposition, defined exactly on the set where the Iwasawa
/// k factor has k_{n+1,n+1} > 0.  Solves the last-row equations
/// k_{n+1,n+1} e^{-w} = 1, z_j = -k_{n+1,j}.
inline KfnPoincareResult kfn_poincare(const Mat& g, int n, const Mat& s, Scalar tol = 1e-9) {
    IwasawaFactors iw = iwasawa_decompose(g, n, tol);
    KfnPoincareResult res;
    Scalar kv = iw.k(n, n);
    if (kv <= tol) {
        res.obstruction = kv;
        return res;
    }
    Scalar w = std::log(kv);
    Vec z(n - 1);
    for (int j = 1; j < n; ++j) z(j - 1) = -iw.k(n, j);
    res.ok = true;
    res.factors.branch = KfnBranch::poincare;
    res.factors.t = iw.t - w;
    res.factors.x = iw.x - std::exp(res.factors.t) * z;
    res.factors.k_tilde = iw.k * mat_a(n, w) * mat_n(n, z) * mat_s(n, s, -res.factors.t);
    // |k~| grows like 1/k_{n+1,n+1} near the boundary; condition the
    // defensive block test accordingly.
    Scalar knorm = max_abs(res.factors.k_tilde);
    Scalar block_tol = std::max(tol, Scalar(100) * Scalar(1.1e-19L) * knorm * knorm * (n + 1));
    if (poincare_block_residual(res.factors.k_tilde, n) > block_tol)
        throw numerical_breakdown("Poincare k~ factor is not in K~");
    return res;
}

struct XfnResult {
    bool ok = false;
    bool on_boundary = false;
    KfnFactors factors;   // valid iff ok
    Scalar k_entry = 0;   // the Iwasawa k_{n+1,n+1} entry
};

/// Extended decomposition over X = K~ u k0 K~: delegates to kfn_poincare,
/// prepending k0 when the obstruction entry is negative.  Fails only on the
/// measure-zero boundary k_{n+1,n+1} = 0.
inline XfnResult xfn_extended(const Mat& g, int n, const Mat& s, Scalar tol = 1e-9) {
    IwasawaFactors iw = iwasawa_decompose(g, n, tol);
    XfnResult res;
    res.k_entry = iw.k(n, n);
    if (std::abs(res.k_entry) <= tol) {
        res.on_boundary = true;
        return res;
    }
    if (res.k_entry > 0) {
        KfnPoincareResult p = kfn_poincare(g, n, s, tol);
        res.ok = true;
        res.factors = p.factors;
        return res;
    }
    Mat k0 = mat_k0(n);
    KfnPoincareResult p = kfn_poincare(Mat(k0 * g), n, s, tol);
    if (!p.ok) throw numerical_breakdown("k0-shifted decomposition failed unexpectedly");
    res.ok = true;
    res.factors = p.factors;
    res.factors.k_tilde = k0 * p.factors.k_tilde;
    res.factors.branch = KfnBranch::extended_k0;
    return res;
}

/// k~ F(t) N(x) for any of the three branches.  Evaluated as
/// k~ S(t) N(e^{-t} x) A(t), which is the same product but keeps the
/// intermediates bounded by ~|k~| |A(t)| even near the obstruction boundary,
/// where x grows like e^{t}.
inline Mat kfn_reconstruct(const KfnFactors& f, int n, const Mat& s) {
    return f.k_tilde * mat_s(n, s, f.t) * mat_n(n, Vec(std::exp(-f.t) * f.x)) * mat_a(n, f.t);
}

inline Mat iwasawa_reconstruct(const IwasawaFactors& f, int n) {
    return f.k * mat_a(n, f.t) * mat_n(n, f.x);
}

}  // namespace liebialg::lorentz
