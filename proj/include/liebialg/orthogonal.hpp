#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liebialg/algebra.hpp"
#include "liebialg/bialgebra.hpp"
#include "liebialg/form.hpp"
#include "liebialg/subspace.hpp"
#include "liebialg/tensors.hpp"

namespace liebialg {

/// Diagonal metric of signature (p,q): an ordered list of +/-1 signs.
/// The 1-based index convention of the docs maps index 1 to position 0.
struct Metric {
    std::vector<int> signs;

    static Metric parse(const std::string& text) {
        Metric m;
        for (char ch : text) {
            if (ch == '+')
                m.signs.push_back(1);
            else if (ch == '-')
                m.signs.push_back(-1);
            else
                throw bad_params(std::string("metric characters must be '+' or '-', got '") + ch +
                                 "'");
        }
        if (m.signs.size() < 2) throw bad_params("metric needs at least two signs");
        return m;
    }

    int n1() const { return static_cast<int>(signs.size()); }  // n+1
    int p() const {
        int c = 0;
        for (int s : signs) c += s > 0;
        return c;
    }
    int q() const { return n1() - p(); }
    int eta(int i) const { return signs[i]; }

    std::string str() const {
        std::string s;
        for (int v : signs) s += v > 0 ? '+' : '-';
        return s;
    }

    Metric drop_first() const {
        Metric m;
        m.signs.assign(signs.begin() + 1, signs.end());
        return m;
    }
    Metric drop_last() const {
        Metric m;
        m.signs.assign(signs.begin(), signs.end() - 1);
        return m;
    }
};

inline int so_dim(int n1) { return n1 * (n1 - 1) / 2; }

/// Flat position of the basis element Lambda_{ij}, 0-based i<j, lexicographic.
inline int lambda_index(int n1, int i, int j) {
    return i * n1 - i * (i + 1) / 2 + (j - i - 1);
}

inline std::string lambda_label(int i, int j) {  // 0-based in, 1-based text out
    if (j + 1 <= 9) return "L" + std::to_string(i + 1) + std::to_string(j + 1);
    return "L" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

/// vec += coef * Lambda_{ab} with arbitrary index order resolved to the i<j basis.
inline void add_lambda(RatVec& vec, int n1, int a, int b, const Rational& coef) {
    if (a == b || coef == 0) return;
    if (a < b)
        vec[lambda_index(n1, a, b)] += coef;
    else
        vec[lambda_index(n1, b, a)] -= coef;
}

/// so(p,q) with the Lambda basis and commutators
/// [L_ij, L_kl] = eta_il L_jk + eta_jk L_il - eta_ik L_jl - eta_jl L_ik.
inline LieAlgebra build_so(const Metric& m) {
    const int n1 = m.n1();
    const int d = so_dim(n1);
    std::vector<std::string> labels;
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) labels.push_back(lambda_label(i, j));
    std::vector<LieAlgebra::Entry> entries;
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j)
            for (int k = 0; k < n1; ++k)
                for (int l = k + 1; l < n1; ++l) {
                    if (lambda_index(n1, i, j) > lambda_index(n1, k, l)) continue;
                    RatVec out(d);
                    if (i == l) add_lambda(out, n1, j, k, m.eta(i));
                    if (j == k) add_lambda(out, n1, i, l, m.eta(j));
                    if (i == k) add_lambda(out, n1, j, l, -m.eta(i));
                    if (j == l) add_lambda(out, n1, i, k, -m.eta(j));
                    int a = lambda_index(n1, i, j), b = lambda_index(n1, k, l);
                    for (int t = 0; t < d; ++t)
                        if (out[t] != 0) entries.emplace_back(a, b, t, out[t]);
                }
    return LieAlgebra(d, std::move(labels), entries);
}

/// iso(p,q) = so(p,q) |x V: Lambda block first, then translations e_1..e_{n+1};
/// [L_ij, e_k] = eta_jk e_i - eta_ik e_j and V abelian.
inline LieAlgebra build_iso(const Metric& m) {
    const int n1 = m.n1();
    const int sd = so_dim(n1);
    const int d = sd + n1;
    LieAlgebra so = build_so(m);
    std::vector<std::string> labels = so.labels();
    for (int k = 0; k < n1; ++k) labels.push_back("e" + std::to_string(k + 1));
    std::vector<LieAlgebra::Entry> entries;
    for (int a = 0; a < sd; ++a)
        for (int b = a + 1; b < sd; ++b)
            for (const auto& [k, coef] : so.bracket_basis(a, b)) entries.emplace_back(a, b, k, coef);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j)
            for (int k = 0; k < n1; ++k) {
                int a = lambda_index(n1, i, j);
                if (j == k) entries.emplace_back(a, sd + k, sd + i, Rational(m.eta(j)));
                if (i == k) entries.emplace_back(a, sd + k, sd + j, Rational(-m.eta(i)));
            }
    return LieAlgebra(d, std::move(labels), entries);
}

inline int translation_index(int n1, int k) { return so_dim(n1) + k; }

/// Defining representation of Lambda_{ij} on V: (n+1)x(n+1) rational matrix.
inline RatMat defining_matrix(const Metric& m, int i, int j) {
    const int n1 = m.n1();
    RatMat mat(n1, n1);
    mat(i, j) += m.eta(j);
    mat(j, i) -= m.eta(i);
    return mat;
}

/// Action of an so(p,q) element (Lambda coordinates) on a vector of V.
inline RatVec defining_action(const Metric& m, const RatVec& so_elem, const RatVec& v) {
    const int n1 = m.n1();
    if (static_cast<int>(v.size()) != n1) throw dimension_mismatch("defining_action vector");
    if (static_cast<int>(so_elem.size()) != so_dim(n1))
        throw dimension_mismatch("defining_action element");
    RatVec out(n1);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) {
            const Rational& c = so_elem[lambda_index(n1, i, j)];
            if (c == 0) continue;
            out[i] += c * m.eta(j) * v[j];
            out[j] -= c * m.eta(i) * v[i];
        }
    return out;
}

/// K(A,B) := -1/2 Tr(AB) on so(p,q), computed on the defining representation.
/// The Lambda basis is orthonormal up to sign: K(L_ij, L_ij) = eta_i eta_j.
inline BilinearForm k_form(const Metric& m) {
    const int n1 = m.n1();
    const int d = so_dim(n1);
    std::vector<RatMat> defs;
    defs.reserve(d);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) defs.push_back(defining_matrix(m, i, j));
    RatMat gram(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            RatMat prod = defs[a] * defs[b];
            Rational tr = 0;
            for (int t = 0; t < n1; ++t) tr += prod(t, t);
            gram(a, b) = -tr / 2;
            gram(b, a) = gram(a, b);
        }
    return BilinearForm(d, std::move(gram), true);
}

/// K-twisted dual basis element Lambda*_{ab} of so(p,q)* in coordinate dual
/// coordinates: <L_kl, L*_ab> := K(L_ab, L_kl).
inline RatVec lambda_star_vector(const Metric& m, int a, int b) {
    const int n1 = m.n1();
    RatVec v(so_dim(n1));
    if (a == b) return v;
    int sign = 1;
    if (a > b) {
        std::swap(a, b);
        sign = -1;
    }
    v[lambda_index(n1, a, b)] = Rational(sign * m.eta(a) * m.eta(b));
    return v;
}

/// Canonical invariant trivector Omega of iso(p,q): the total
/// antisymmetrization of eta^{jl} eta^{km} e_j ^ e_k (x) L_lm.
inline Trivector omega_element(const Metric& m) {
    const int n1 = m.n1();
    const int d = so_dim(n1) + n1;
    Trivector t(d);
    const Rational two_thirds(2, 3);
    for (int j = 0; j < n1; ++j)
        for (int k = j + 1; k < n1; ++k)
            t.set_sorted(lambda_index(n1, j, k), translation_index(n1, j),
                         translation_index(n1, k), two_thirds * m.eta(j) * m.eta(k));
    return t;
}

/// Embeds an so-coordinate vector into iso coordinates.
inline RatVec embed_so(const Metric& m, const RatVec& so_elem) {
    RatVec out(so_dim(m.n1()) + m.n1());
    for (size_t i = 0; i < so_elem.size(); ++i) out[i] = so_elem[i];
    return out;
}

/// Embeds a V-coordinate vector into iso coordinates.
inline RatVec embed_v(const Metric& m, const RatVec& v) {
    RatVec out(so_dim(m.n1()) + m.n1());
    for (int k = 0; k < m.n1(); ++k) out[so_dim(m.n1()) + k] = v[k];
    return out;
}

inline Rational eta_norm(const Metric& m, const RatVec& x) {
    Rational s = 0;
    for (int i = 0; i < m.n1(); ++i) s += m.eta(i) * x[i] * x[i];
    return s;
}

/// b_x := eta^{jk} e_j ^ Lambda_{x e_k} as a bivector on iso(p,q).
inline Bivector b_x_bivector(const Metric& m, const RatVec& x) {
    const int n1 = m.n1();
    if (static_cast<int>(x.size()) != n1) throw dimension_mismatch("b_x vector");
    Bivector b(so_dim(n1) + n1);
    for (int k = 0; k < n1; ++k)
        for (int i = 0; i < n1; ++i) {
            if (i == k || x[i] == 0) continue;
            // e_k ^ x^i Lambda_{ik}
            Rational coef = Rational(m.eta(k)) * x[i];
            if (i < k)
                b.accumulate(translation_index(n1, k), lambda_index(n1, i, k), coef);
            else
                b.accumulate(translation_index(n1, k), lambda_index(n1, k, i), -coef);
        }
    return b;
}

/// Parameters of the four b-type GCYBE solution families.
struct BSolutionParams {
    int family = 1;
    RatVec x;                          // V coordinates
    RatVec so_x = {};                  // X in so coordinates (families 2, 4)
    std::vector<RatVec> v_list = {};   // family 3
    std::vector<RatVec> x_list = {};   // family 3: X_i in so coordinates
    std::vector<Rational> alpha_list = {};
    RatVec v = {};                     // family 4
};

inline Bivector b_solution(const Metric& m, const BSolutionParams& p) {
    const int n1 = m.n1();
    if (static_cast<int>(p.x.size()) != n1) throw dimension_mismatch("b_solution x");
    Bivector b = b_x_bivector(m, p.x);
    auto wedge_vx = [&](const RatVec& vv, const RatVec& so_el) {
        return Bivector::wedge(embed_v(m, vv), embed_so(m, so_el));
    };
    switch (p.family) {
        case 1:
            return b;
        case 2: {
            if (!is_zero(defining_action(m, p.so_x, p.x))) throw constraint_violated("Xx=0");
            b += wedge_vx(p.x, p.so_x);
            return b;
        }
        case 3: {
            if (eta_norm(m, p.x) != 0) throw constraint_violated("eta(x,x)=0");
            if (p.v_list.size() != p.x_list.size() || p.v_list.size() != p.alpha_list.size())
                throw bad_params("family 3 lists must have equal length");
            LieAlgebra so = build_so(m);
            for (size_t i = 0; i < p.x_list.size(); ++i) {
                if (!is_zero(defining_action(m, p.x_list[i], p.x)))
                    throw constraint_violated("X_i x=0");
                for (size_t j = 0; j < p.v_list.size(); ++j) {
                    RatVec want(n1);
                    if (i == j)
                        for (int t = 0; t < n1; ++t) want[t] = -p.x[t];
                    if (defining_action(m, p.x_list[i], p.v_list[j]) != want)
                        throw constraint_violated("X_i v_j=-delta_ij x");
                }
                for (size_t j = i + 1; j < p.x_list.size(); ++j)
                    if (!is_zero(so.bracket(p.x_list[i], p.x_list[j])))
                        throw constraint_violated("[X_i,X_j]=0");
            }
            RatVec y(so_dim(n1));
            for (size_t i = 0; i < p.x_list.size(); ++i)
                for (size_t t = 0; t < y.size(); ++t) y[t] += p.alpha_list[i] * p.x_list[i][t];
            b += wedge_vx(p.x, y);
            for (size_t i = 0; i < p.v_list.size(); ++i) b += wedge_vx(p.v_list[i], p.x_list[i]);
            return b;
        }
        case 4: {
            if (!is_zero(defining_action(m, p.so_x, p.x))) throw constraint_violated("Xx=0");
            if (defining_action(m, p.so_x, p.v) != p.v) throw constraint_violated("Xv=v");
            b += wedge_vx(p.x, p.so_x);
            b += wedge_vx(p.v, p.so_x);
            return b;
        }
        default:
            throw bad_params("family must be 1..4");
    }
}

/// Structure constants of the bracket on V* in the metric-twisted dual basis
/// e*_k := eta(e_k):  [e*_i, e*_j] = f(i,j,k) e*_k.
struct VDualStructure {
    int n1 = 0;
    std::vector<Rational> f;

    explicit VDualStructure(int n1) : n1(n1), f(static_cast<size_t>(n1) * n1 * n1) {}
    Rational& at(int i, int j, int k) { return f[(static_cast<size_t>(i) * n1 + j) * n1 + k]; }
    const Rational& at(int i, int j, int k) const {
        return f[(static_cast<size_t>(i) * n1 + j) * n1 + k];
    }
};

/// Extracts the V*-bracket induced by a pure h^V bivector through the
/// coadjoint action, via f_{ijk} = 2(b_{jik} - b_{ijk}) with eta lowering.
inline VDualStructure b_to_dual_structure(const Metric& m, const Bivector& b) {
    const int n1 = m.n1();
    const int sd = so_dim(n1);
    if (b.dim() != sd + n1) throw dimension_mismatch("b_to_dual_structure");
    for (int a = 0; a < sd; ++a) {
        for (int c = a + 1; c < sd; ++c)
            if (b(a, c) != 0) throw not_b_type("nonzero h^h component");
    }
    for (int a = sd; a < sd + n1; ++a)
        for (int c = a + 1; c < sd + n1; ++c)
            if (b(a, c) != 0) throw not_b_type("nonzero V^V component");
    // b_{ijk} fully lowered, i a V index, (j,k) a Lambda pair.
    auto b_low = [&](int i, int j, int k) -> Rational {
        if (j == k) return 0;
        Rational sign(m.eta(i) * m.eta(j) * m.eta(k));
        if (j < k)
            return sign * b(translation_index(n1, i), lambda_index(n1, j, k)) / 2;
        return -sign * b(translation_index(n1, i), lambda_index(n1, k, j)) / 2;
    };
    VDualStructure f(n1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n1; ++k)
                f.at(i, j, k) = Rational(m.eta(k)) * 2 * (b_low(j, i, k) - b_low(i, j, k));
        }
    return f;
}

/// Inverse of b_to_dual_structure via b_{ijk} = 1/4 (f_{jki} - f_{ijk} - f_{kij}).
inline Bivector dual_structure_to_b(const Metric& m, const VDualStructure& f) {
    const int n1 = m.n1();
    if (f.n1 != n1) throw dimension_mismatch("dual_structure_to_b");
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int k = 0; k < n1; ++k)
                if (f.at(i, j, k) != -f.at(j, i, k))
                    throw bad_params("dual structure constants must be antisymmetric in (i,j)");
    auto f_low = [&](int i, int j, int k) { return Rational(m.eta(k)) * f.at(i, j, k); };
    Bivector b(so_dim(n1) + n1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int k = j + 1; k < n1; ++k) {
                Rational bl = (f_low(j, k, i) - f_low(i, j, k) - f_low(k, i, j)) / 4;
                if (bl == 0) continue;
                Rational up = Rational(m.eta(i) * m.eta(j) * m.eta(k)) * bl;
                b.accumulate(translation_index(n1, i), lambda_index(n1, j, k), 2 * up);
            }
    return b;
}

}  // namespace liebialg
