#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liebialg/orthogonal.hpp"
#include "liebialg/subspace.hpp"

namespace liebialg {

// Distinguished elements of so(p,q), 1-based indices 1..n+1 (stored 0-based):
//   f   = L_{1,n+1}
//   g_k = L_{1k} + L_{k,n+1},  2 <= k <= n.

inline RatVec f_vector(const Metric& m) {
    RatVec v(so_dim(m.n1()));
    v[lambda_index(m.n1(), 0, m.n1() - 1)] = 1;
    return v;
}

/// g_k for 0-based V index k in [1, n-1].
inline RatVec g_vector(const Metric& m, int k) {
    const int n1 = m.n1();
    if (k <= 0 || k >= n1 - 1) throw bad_params("g_k index out of range");
    RatVec v(so_dim(n1));
    v[lambda_index(n1, 0, k)] = 1;
    v[lambda_index(n1, k, n1 - 1)] = 1;
    return v;
}

/// h1 = <L_ij : 2 <= i < j <= n+1> = so(p-1, q), generators in lex order.
inline std::vector<RatVec> h1_generators(const Metric& m) {
    const int n1 = m.n1();
    std::vector<RatVec> gens;
    for (int i = 1; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) {
            RatVec v(so_dim(n1));
            v[lambda_index(n1, i, j)] = 1;
            gens.push_back(v);
        }
    return gens;
}

/// h2 = <L_ij : 1 <= i < j <= n> = so(p, q-1), generators in lex order.
inline std::vector<RatVec> h2_generators(const Metric& m) {
    const int n1 = m.n1();
    std::vector<RatVec> gens;
    for (int i = 0; i < n1 - 1; ++i)
        for (int j = i + 1; j < n1 - 1; ++j) {
            RatVec v(so_dim(n1));
            v[lambda_index(n1, i, j)] = 1;
            gens.push_back(v);
        }
    return gens;
}

/// The element s = s^{ij} L_ij (full-sum convention; the matrix carries the
/// raised-index coefficients over the 1-based indices 2..n, entry (a,b) for the
/// pair (a+2, b+2)).
inline RatVec s_element(const Metric& m, const RatMat& s) {
    const int n1 = m.n1();
    RatVec v(so_dim(n1));
    if (s.rows() == 0) return v;
    if (s.rows() != n1 - 2 || s.cols() != n1 - 2) throw bad_params("s matrix must be (n-1)x(n-1)");
    for (int a = 0; a < s.rows(); ++a)
        for (int b = 0; b < s.cols(); ++b) {
            if (s(a, b) != -s(b, a)) throw bad_params("s matrix must be antisymmetric");
            if (a < b && s(a, b) != 0) v[lambda_index(n1, a + 1, b + 1)] = 2 * s(a, b);
        }
    return v;
}

enum class UVariant { u, u_tilde, U_tilde };

inline const char* variant_name(UVariant v) {
    switch (v) {
        case UVariant::u: return "u";
        case UVariant::u_tilde: return "utilde";
        default: return "Utilde";
    }
}

struct SubalgebraSpec {
    UVariant variant = UVariant::u;
    RatMat s;                               // empty means s = 0
    std::vector<std::pair<int, int>> D;     // (m_k, n_k), 1-based V indices
};

struct SubalgebraFamily {
    std::vector<RatVec> gens;  // ordered: f (or f-tilde), then g_2..g_n (or g-tilde)
    Subspace space;
    Report report;  // closure + complementarity to h1 and h2
};

/// Builds u, u-tilde, or U-tilde inside so(p,q) and validates it.
/// Requires eta_1 = +1 and eta_{n+1} = -1.  For U-tilde the characteristic
/// identity of the D-set is validated exactly, along with the unit
/// eigenvector conditions of s.
inline SubalgebraFamily iwasawa_type_subalgebra(const Metric& m, const SubalgebraSpec& spec) {
    const int n1 = m.n1();
    if (n1 < 3) throw bad_params("iwasawa-type subalgebras need n+1 >= 3");
    if (m.eta(0) != 1 || m.eta(n1 - 1) != -1)
        throw bad_params("metric must have eta_1 = +1 and eta_{n+1} = -1");
    RatVec s_elem = s_element(m, spec.s);
    std::vector<bool> chi(n1, false);
    if (spec.variant == UVariant::U_tilde) {
        for (auto [mk, nk] : spec.D) {
            if (!(2 <= mk && mk < nk && nk <= n1 - 1))
                throw bad_params("D indices must satisfy 2 <= m_k < n_k <= n");
            if (m.eta(mk - 1) != 1 || m.eta(nk - 1) != -1)
                throw eigenstructure_violated("D pair (" + std::to_string(mk) + "," +
                                              std::to_string(nk) + ") needs signs (+,-)");
            chi[mk - 1] = chi[nk - 1] = true;
            // s(e_m - e_n) = e_m - e_n
            RatVec w(n1);
            w[mk - 1] = 1;
            w[nk - 1] = -1;
            if (defining_action(m, s_elem, w) != w)
                throw eigenstructure_violated("e_" + std::to_string(mk) + " - e_" +
                                              std::to_string(nk) +
                                              " is not a unit eigenvector of s");
        }
        // s^{ij} eta_{jp} chi(i) - s^{ij} eta_{ip} chi(j) = -chi(p)
        for (int p = 1; p < n1 - 1; ++p) {
            Rational lhs = 0;
            if (spec.s.rows() > 0) {
                for (int a = 0; a < n1 - 2; ++a) {
                    lhs += spec.s(a, p - 1) * m.eta(p) * (chi[a + 1] ? 1 : 0);
                    lhs -= spec.s(p - 1, a) * m.eta(p) * (chi[a + 1] ? 1 : 0);
                }
            }
            if (lhs != Rational(chi[p] ? -1 : 0))
                throw eigenstructure_violated("characteristic identity fails at p = " +
                                              std::to_string(p + 1));
        }
    }

    std::vector<RatVec> gens;
    RatVec f = f_vector(m);
    if (spec.variant == UVariant::u) {
        gens.push_back(f);
    } else {
        gens.push_back(f + s_elem);  // f-tilde
    }
    for (int k = 1; k < n1 - 1; ++k) {
        RatVec g = g_vector(m, k);
        if (spec.variant == UVariant::U_tilde && chi[k]) g = g + f;
        gens.push_back(g);
    }

    SubalgebraFamily fam;
    fam.gens = gens;
    fam.space = Subspace::from_generators(so_dim(n1), gens);
    LieAlgebra so = build_so(m);
    Report rep;
    rep.suite = std::string("subalgebra_") + variant_name(spec.variant);
    SubalgebraReport closed = is_subalgebra(so, fam.space);
    rep.add("subalgebra", closed.pass, closed.pass ? "" : closed.describe());
    Subspace h1 = Subspace::from_generators(so_dim(n1), h1_generators(m));
    Subspace h2 = Subspace::from_generators(so_dim(n1), h2_generators(m));
    rep.add("complementary_to_h1", verify_double_decomposition(so, h1, fam.space).all_pass());
    rep.add("complementary_to_h2", verify_double_decomposition(so, h2, fam.space).all_pass());
    fam.report = rep;
    return fam;
}

enum class Remark1Choice { plain, shifted };

struct Remark1Family {
    std::vector<RatVec> gens;  // in iso(p,q) coordinates: f-bar, w, x_2..x_n
    Subspace space;
    Report report;
};

/// Subalgebras <f-bar, w, x_k> (or x_k + lambda g_k) of iso(p,q),
/// complementary to so(p,q):
///   f-bar = e_1 + lambda L_{1,n+1} + s + g,  w = e_1 - e_{n+1}.
inline Remark1Family remark1_subalgebra(const Metric& m, const Rational& lambda, const RatMat& s,
                                        const RatVec& g_coeffs, Remark1Choice choice) {
    const int n1 = m.n1();
    if (n1 < 3) throw bad_params("remark1_subalgebra needs n+1 >= 3");
    if (!g_coeffs.empty() && static_cast<int>(g_coeffs.size()) != n1 - 2)
        throw bad_params("g coefficients must have length n-1");
    const int iso_d = so_dim(n1) + n1;
    LieAlgebra iso = build_iso(m);

    RatVec g_elem(so_dim(n1));
    for (int k = 1; k < n1 - 1; ++k)
        if (!g_coeffs.empty() && g_coeffs[k - 1] != 0)
            g_elem = g_elem + g_coeffs[k - 1] * g_vector(m, k);

    RatVec fbar(iso_d);
    fbar[translation_index(n1, 0)] = 1;
    {
        RatVec so_part = lambda * f_vector(m) + s_element(m, s) + g_elem;
        for (int t = 0; t < so_dim(n1); ++t) fbar[t] = so_part[t];
    }
    RatVec w(iso_d);
    w[translation_index(n1, 0)] = 1;
    w[translation_index(n1, n1 - 1)] = -1;

    std::vector<RatVec> gens{fbar, w};
    for (int k = 1; k < n1 - 1; ++k) {
        RatVec xk(iso_d);
        xk[translation_index(n1, k)] = 1;
        if (choice == Remark1Choice::shifted && lambda != 0) {
            RatVec gk = g_vector(m, k);
            for (int t = 0; t < so_dim(n1); ++t) xk[t] = lambda * gk[t];
        }
        gens.push_back(xk);
    }

    Remark1Family fam;
    fam.gens = gens;
    fam.space = Subspace::from_generators(iso_d, gens);
    Report rep;
    rep.suite = "remark1";
    SubalgebraReport closed = is_subalgebra(iso, fam.space);
    rep.add("subalgebra", closed.pass, closed.pass ? "" : closed.describe());
    std::vector<RatVec> so_block;
    for (int t = 0; t < so_dim(n1); ++t) {
        RatVec v(iso_d);
        v[t] = 1;
        so_block.push_back(v);
    }
    Subspace so_sub = Subspace::from_generators(iso_d, so_block);
    rep.add("complementary_to_so", verify_double_decomposition(iso, so_sub, fam.space).all_pass());
    rep.add("basis_count", fam.space.dim() == n1,
            fam.space.dim() == n1 ? "" : "expected n+1 generators");
    fam.report = rep;
    return fam;
}

}  // namespace liebialg
