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

/// A double Lie algebra (g; a, b): two subalgebras splitting g.
struct DoubleDecomposition {
    LieAlgebra alg;
    Subspace a;
    Subspace b;
};

/// (m; P, Q) with the invariant scalar product; P and Q keep their stored
/// generator order, which downstream extraction relies on.
struct ManinTriple {
    LieAlgebra m;
    Subspace p;
    Subspace q;
    BilinearForm form;
};

struct DrinfeldDoubleResult {
    LieAlgebra algebra;
    JacobiReport jacobi;
};

/// The unique bracket on g (+) g* making g, g* subalgebras and the canonical
/// form invariant:
/// [X + a, Y + b] = [X,Y] - ad^v_b X + ad^v_a Y + [a,b] + ad^v_X b - ad^v_Y a.
/// Its Jacobi identity holds iff (g, delta) is a Lie bialgebra.
inline DrinfeldDoubleResult drinfeld_double(const LieAlgebra& g, const LieAlgebra& g_dual) {
    if (g_dual.dim() != g.dim()) throw dimension_mismatch("drinfeld_double");
    const int d = g.dim();
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back(g.label(i));
    for (int i = 0; i < d; ++i) labels.push_back(g.label(i) + "^");
    std::vector<LieAlgebra::Entry> entries;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            for (const auto& [k, coef] : g.bracket_basis(i, j)) entries.emplace_back(i, j, k, coef);
            for (const auto& [k, coef] : g_dual.bracket_basis(i, j))
                entries.emplace_back(d + i, d + j, d + k, coef);
        }
    // [X_i, X*_j] = -sum_k c(i,k,j) X*_k + sum_m fc(j,m,i) X_m
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k)
                if (g.c(i, k, j) != 0) entries.emplace_back(i, d + j, d + k, -g.c(i, k, j));
            for (int m = 0; m < d; ++m)
                if (g_dual.c(j, m, i) != 0) entries.emplace_back(i, d + j, m, g_dual.c(j, m, i));
        }
    LieAlgebra dd(2 * d, std::move(labels), entries);
    JacobiReport jac = dd.verify_jacobi();
    return DrinfeldDoubleResult{std::move(dd), jac};
}

namespace detail {

inline std::vector<RatVec> embed_block(const RatMat& gens, int total, int offset) {
    std::vector<RatVec> rows;
    for (int i = 0; i < gens.rows(); ++i) {
        RatVec v(total);
        for (int j = 0; j < gens.cols(); ++j) v[offset + j] = gens(i, j);
        rows.push_back(v);
    }
    return rows;
}

}  // namespace detail

/// (g |x g*; a |x a^0, b |x b^0) as a Manin triple with the canonical pairing.
/// The annihilator bases may be supplied explicitly (they must span the
/// annihilators exactly); by default the echelon bases are used.
inline ManinTriple manin_from_double(const DoubleDecomposition& dd,
                                     const std::vector<RatVec>& a0_basis = {},
                                     const std::vector<RatVec>& b0_basis = {}) {
    const int d = dd.alg.dim();
    LieAlgebra m = semidirect_with_dual(dd.alg);
    auto dual_part = [&](const Subspace& sub, const std::vector<RatVec>& given) {
        Subspace ann = annihilator(d, sub);
        if (given.empty()) return ann;
        Subspace expl = Subspace::from_generators(d, given);
        if (!(expl == ann)) throw bad_params("explicit annihilator basis has the wrong span");
        return expl;
    };
    Subspace a0 = dual_part(dd.a, a0_basis);
    Subspace b0 = dual_part(dd.b, b0_basis);
    std::vector<RatVec> p_rows = detail::embed_block(dd.a.generators(), 2 * d, 0);
    for (auto& r : detail::embed_block(a0.generators(), 2 * d, d)) p_rows.push_back(r);
    std::vector<RatVec> q_rows = detail::embed_block(dd.b.generators(), 2 * d, 0);
    for (auto& r : detail::embed_block(b0.generators(), 2 * d, d)) q_rows.push_back(r);
    return ManinTriple{std::move(m), Subspace::from_generators(2 * d, p_rows),
                       Subspace::from_generators(2 * d, q_rows), canonical_pairing_form(d)};
}

/// All Manin axioms, each as a separate check: P, Q subalgebras; m = P (+) Q;
/// invariant nondegenerate form; P, Q isotropic.
inline Report verify_manin(const ManinTriple& t) {
    Report rep;
    rep.suite = "manin";
    SubalgebraReport sp = is_subalgebra(t.m, t.p);
    rep.add("P_subalgebra", sp.pass, sp.pass ? "" : sp.describe());
    SubalgebraReport sq = is_subalgebra(t.m, t.q);
    rep.add("Q_subalgebra", sq.pass, sq.pass ? "" : sq.describe());
    bool dims = t.p.dim() + t.q.dim() == t.m.dim();
    std::vector<RatVec> stacked;
    for (int i = 0; i < t.p.dim(); ++i) stacked.push_back(t.p.generator(i));
    for (int i = 0; i < t.q.dim(); ++i) stacked.push_back(t.q.generator(i));
    bool direct =
        dims && rank(RatMat::from_rows(stacked)) == static_cast<int>(stacked.size());
    rep.add("direct_sum", direct);
    Report inv = verify_invariant_form(t.m, t.form);
    const Check* c = inv.find("invariant");
    rep.add("form_invariant", c->pass, c->witness);
    c = inv.find("nondegenerate");
    rep.add("form_nondegenerate", c->pass, c->witness);
    auto isotropic = [&](const Subspace& s, const std::string& name) {
        for (int u = 0; u < s.dim(); ++u)
            for (int v = u; v < s.dim(); ++v)
                if (t.form.eval(s.generator(u), s.generator(v)) != 0) {
                    rep.add(name, false,
                            "generators " + std::to_string(u + 1) + "," + std::to_string(v + 1));
                    return;
                }
        rep.add(name, true);
    };
    isotropic(t.p, "P_isotropic");
    isotropic(t.q, "Q_isotropic");
    return rep;
}

struct ExtractedBialgebra {
    LieAlgebra algebra;       // bracket of m restricted to P, in P's basis
    Cobracket delta;          // cobracket on P dual to Q's bracket
    LieAlgebra dual_algebra;  // Q's bracket re-expressed in the P-dual basis
    int split = -1;           // dim of the 'a' block of P when P = a |x V
    Report report;            // cocycle, co-Jacobi, shape conditions
};

/// Reads the bialgebra off a Manin triple: inverts the P x Q pairing to
/// identify Q with P*, expresses Q's structure constants there, and dualizes
/// them into a cobracket on P.  `split` (when >= 0) adds the semidirect
/// shape checks delta(a) c a^V, delta(V) c V^V.
inline ExtractedBialgebra extract_bialgebra(const ManinTriple& t, int split = -1) {
    const int n = t.p.dim();
    if (t.q.dim() != n) throw degenerate_pairing();
    RatMat pairing(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) pairing(u, v) = t.form.eval(t.p.generator(u), t.q.generator(v));
    RatMat pinv = inverse(pairing);  // throws degenerate_pairing when singular
    // q_hat_w = sum_v pinv(v, w) Q_v satisfies form(P_u, q_hat_w) = delta_uw.
    std::vector<RatVec> qhat;
    for (int w = 0; w < n; ++w) {
        RatVec acc(t.m.dim());
        for (int v = 0; v < n; ++v)
            if (pinv(v, w) != 0) acc = acc + pinv(v, w) * t.q.generator(v);
        qhat.push_back(acc);
    }
    auto pair_with = [&](const std::vector<RatVec>& duals, const RatVec& x) {
        RatVec coords(n);
        for (int w = 0; w < n; ++w) coords[w] = t.form.eval(x, duals[w]);
        return coords;
    };
    auto pair_with_p = [&](const RatVec& x) {
        RatVec coords(n);
        for (int z = 0; z < n; ++z) coords[z] = t.form.eval(t.p.generator(z), x);
        return coords;
    };

    std::vector<std::string> p_labels, q_labels;
    for (int i = 0; i < n; ++i) {
        p_labels.push_back("P" + std::to_string(i + 1));
        q_labels.push_back("P" + std::to_string(i + 1) + "*");
    }
    std::vector<LieAlgebra::Entry> alg_entries, dual_entries;
    Cobracket delta(n);
    bool p_closed = true, q_closed = true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            RatVec pb = t.m.bracket(t.p.generator(u), t.p.generator(v));
            RatVec pc = pair_with(qhat, pb);
            RatVec recon(t.m.dim());
            for (int w = 0; w < n; ++w)
                if (pc[w] != 0) recon = recon + pc[w] * t.p.generator(w);
            if (!(recon == pb)) p_closed = false;
            for (int w = 0; w < n; ++w)
                if (pc[w] != 0) alg_entries.emplace_back(u, v, w, pc[w]);

            RatVec qb = t.m.bracket(qhat[u], qhat[v]);
            RatVec gc = pair_with_p(qb);
            RatVec qrecon(t.m.dim());
            for (int z = 0; z < n; ++z)
                if (gc[z] != 0) qrecon = qrecon + gc[z] * qhat[z];
            if (!(qrecon == qb)) q_closed = false;
            for (int z = 0; z < n; ++z)
                if (gc[z] != 0) {
                    dual_entries.emplace_back(u, v, z, gc[z]);
                    delta.set(z, u, v, gc[z]);
                }
        }
    if (!p_closed) throw bad_params("P is not closed under the bracket");
    if (!q_closed) throw bad_params("Q is not closed under the bracket");

    LieAlgebra algebra(n, p_labels, alg_entries);
    LieAlgebra dual(n, q_labels, dual_entries);
    Report rep;
    rep.suite = "extracted_bialgebra";
    Report coc = verify_cocycle(algebra, delta);
    rep.add("cocycle", coc.all_pass(), coc.all_pass() ? "" : coc.checks.front().witness);
    JacobiReport coj = dual.verify_jacobi();
    rep.add("co_jacobi", coj.pass, coj.pass ? "" : coj.describe());
    if (split >= 0) {
        bool shape_a = true, shape_v = true;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int w = v + 1; w < n; ++w) {
                    if (delta.d(u, v, w) == 0) continue;
                    bool va = v < split, wa = w < split;
                    if (u < split) {
                        if (va == wa) shape_a = false;  // needs exactly one factor in 'a'
                    } else {
                        if (va || wa) shape_v = false;  // needs both factors in V
                    }
                }
        rep.add("shape_delta_a_in_a_wedge_V", shape_a);
        rep.add("shape_delta_V_in_V_wedge_V", shape_v);
    }
    return ExtractedBialgebra{std::move(algebra), std::move(delta), std::move(dual), split,
                              std::move(rep)};
}

}  // namespace liebialg
