#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liebialg/families.hpp"
#include "liebialg/manin.hpp"
#include "liebialg/orthogonal.hpp"

namespace liebialg {

/// Which half of so(p,q) = h (+) u plays the subalgebra 'a' of the double.
enum class Half { h1, h2 };

inline const char* half_name(Half h) { return h == Half::h1 ? "h1" : "h2"; }

/// The distinguished annihilator basis v_l of h^0 in coordinate-dual
/// coordinates of so(p,q)*:
///   h1: v_l = L*_{1l}   = eta_l * dual(L_{1l}),       l = 2..n+1,
///   h2: v_l = L*_{l,n+1} = -eta_l * dual(L_{l,n+1}),  l = 1..n.
/// These are the K-twisted duals; their order matches the translation basis
/// of the identified inhomogeneous algebra.
inline std::vector<RatVec> twisted_annihilator_basis(const Metric& m, Half which) {
    const int n1 = m.n1();
    std::vector<RatVec> rows;
    if (which == Half::h1) {
        for (int l = 1; l < n1; ++l) rows.push_back(lambda_star_vector(m, 0, l));
    } else {
        for (int l = 0; l < n1 - 1; ++l) rows.push_back(lambda_star_vector(m, l, n1 - 1));
    }
    return rows;
}

/// Metric of the identified inhomogeneous algebra: h1 drops the first sign
/// (signature (p-1,q)), h2 drops the last (signature (p,q-1)).
inline Metric identified_metric(const Metric& m, Half which) {
    return which == Half::h1 ? m.drop_first() : m.drop_last();
}

/// Closed form of the cobracket each double induces, as a bivector on the
/// identified iso algebra (a b-solution of type 1, 2 or 4).  With x = v_{n+1}
/// for h1 and x = v_1 for h2:
///   u  : -b_x
///   u~ : -b_x - x ^ s
///   U~ : -b_x - x ^ s -+ sum_k (v_{m_k} - v_{n_k}) ^ s   (- for h1, + for h2)
/// These are the unique h^V solutions of the coboundary equation for the
/// extracted cobrackets; the uniqueness pins every sign, which the test
/// suite rederives independently via the linear solver.
inline Bivector claimed_cobracket_b(const Metric& m, Half which, const SubalgebraSpec& spec) {
    Metric sub = identified_metric(m, which);
    const int sn1 = sub.n1();
    // 1-based V index of the ambient algebra -> 0-based index of the identified one
    auto vmap = [&](int ambient) { return which == Half::h1 ? ambient - 2 : ambient - 1; };
    RatVec x(sn1);
    x[which == Half::h1 ? sn1 - 1 : 0] = 1;
    Bivector b = b_x_bivector(sub, x).scaled(-1);
    if (spec.variant == UVariant::u) return b;

    // s as an element of the identified so block
    RatVec s_elem(so_dim(sn1));
    for (int a = 0; a < spec.s.rows(); ++a)
        for (int bcol = a + 1; bcol < spec.s.cols(); ++bcol)
            if (spec.s(a, bcol) != 0) {
                int i = vmap(a + 2), j = vmap(bcol + 2);
                s_elem[lambda_index(sn1, i, j)] = 2 * spec.s(a, bcol);
            }
    b += Bivector::wedge(embed_v(sub, x), embed_so(sub, s_elem)).scaled(-1);
    if (spec.variant == UVariant::u_tilde) return b;

    RatVec dsum(sn1);
    for (auto [mk, nk] : spec.D) {
        dsum[vmap(mk)] += 1;
        dsum[vmap(nk)] -= 1;
    }
    b += Bivector::wedge(embed_v(sub, dsum), embed_so(sub, s_elem))
             .scaled(which == Half::h1 ? -1 : 1);
    return b;
}

struct So32Pipeline {
    Metric metric;
    Half which;
    SubalgebraSpec spec;
    LieAlgebra so;
    DoubleDecomposition dd;
    ManinTriple triple;
    ExtractedBialgebra extracted;
    Metric sub_metric;
    LieAlgebra standard_iso;
    Cobracket identified;  // extracted delta on the standard iso basis
    Bivector claimed;      // claimed b on the standard iso basis
    Report report;
};

/// Re-expresses an extracted cobracket on the standard build_iso algebra of
/// the identified metric.  The P basis of the pipeline's Manin triple is
/// ordered (h generators, v_l), which matches build_iso's basis order
/// exactly, so the identification amounts to verifying that the structure
/// constants coincide and re-tagging the tensor.  Reports the induced
/// scalar-product signature and the action match.
inline std::pair<Cobracket, Report> identify_iso_basis(const ExtractedBialgebra& extracted,
                                                       const Metric& m, Half which) {
    Metric sub = identified_metric(m, which);
    LieAlgebra iso = build_iso(sub);
    Report rep;
    rep.suite = "identify_iso_basis";
    if (extracted.algebra.dim() != iso.dim())
        throw basis_mismatch("extracted dim " + std::to_string(extracted.algebra.dim()) +
                             " vs iso dim " + std::to_string(iso.dim()));
    bool match = true;
    for (int i = 0; i < iso.dim() && match; ++i)
        for (int j = 0; j < iso.dim() && match; ++j)
            for (int k = 0; k < iso.dim(); ++k)
                if (extracted.algebra.c(i, j, k) != iso.c(i, j, k)) {
                    match = false;
                    break;
                }
    rep.add("algebra_matches_standard_iso", match);
    // Induced scalar product on the v_l: K for h1, -K for h2, orthonormal
    // with the signs of the identified metric.
    BilinearForm kf = k_form(m);
    const int n1 = m.n1();
    bool ortho = true;
    for (int l = 0; l < sub.n1() && ortho; ++l)
        for (int t = 0; t < sub.n1(); ++t) {
            int pl = which == Half::h1 ? lambda_index(n1, 0, l + 1) : lambda_index(n1, l, n1 - 1);
            int pt = which == Half::h1 ? lambda_index(n1, 0, t + 1) : lambda_index(n1, t, n1 - 1);
            Rational v = kf.matrix(pl, pt);
            if (which == Half::h2) v = -v;
            if (v != Rational(l == t ? sub.eta(l) : 0)) {
                ortho = false;
                break;
            }
        }
    rep.add("v_basis_orthonormal_with_identified_signature", ortho);
    Cobracket delta = extracted.delta;
    return {std::move(delta), std::move(rep)};
}

/// Runs the whole double -> Manin triple -> bialgebra -> identification
/// pipeline for one of the six variants and compares the extracted cobracket
/// with the coboundary of the claimed b, exactly.
inline So32Pipeline run_so32_pipeline(const Metric& m, Half which, const SubalgebraSpec& spec) {
    const int n1 = m.n1();
    LieAlgebra so = build_so(m);
    SubalgebraFamily fam = iwasawa_type_subalgebra(m, spec);
    std::vector<RatVec> h_gens = which == Half::h1 ? h1_generators(m) : h2_generators(m);
    DoubleDecomposition dd{so, Subspace::from_generators(so_dim(n1), h_gens),
                           Subspace::from_generators(so_dim(n1), fam.gens)};
    Report rep;
    rep.suite = std::string("so32_double_") + half_name(which) + "_" + variant_name(spec.variant);
    Report ddr = verify_double_decomposition(dd.alg, dd.a, dd.b);
    rep.add("double_decomposition", ddr.all_pass());

    ManinTriple triple = manin_from_double(dd, twisted_annihilator_basis(m, which));
    Report mr = verify_manin(triple);
    for (const auto& c : mr.checks) rep.add("manin_" + c.name, c.pass, c.witness);

    ExtractedBialgebra extracted = extract_bialgebra(triple, dd.a.dim());
    for (const auto& c : extracted.report.checks) rep.add("extracted_" + c.name, c.pass, c.witness);

    auto [identified, idrep] = identify_iso_basis(extracted, m, which);
    for (const auto& c : idrep.checks) rep.add(c.name, c.pass, c.witness);

    Metric sub = identified_metric(m, which);
    LieAlgebra iso = build_iso(sub);
    Bivector claimed = claimed_cobracket_b(m, which, spec);
    Cobracket expected = coboundary_cobracket(iso, claimed);
    rep.add("extracted_equals_partial_b", identified == expected);

    return So32Pipeline{m,
                        which,
                        spec,
                        std::move(so),
                        std::move(dd),
                        std::move(triple),
                        std::move(extracted),
                        std::move(sub),
                        std::move(iso),
                        std::move(identified),
                        std::move(claimed),
                        std::move(rep)};
}

}  // namespace liebialg
