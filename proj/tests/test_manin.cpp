#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "liebialg/manin.hpp"
#include "liebialg/so_doubles.hpp"

using namespace liebialg;

namespace {

RatVec basis_vec(int dim, int i) {
    RatVec v(dim);
    v[i] = 1;
    return v;
}

Bivector kappa_b(const Metric& m) {
    RatVec x(m.n1());
    x[0] = 1;
    return b_x_bivector(m, x);
}

}  // namespace

TEST_CASE("drinfeld_double with an abelian dual equals semidirect_with_dual") {
    Metric m = Metric::parse("+--");
    LieAlgebra iso = build_iso(m);
    LieAlgebra abelian_dual(iso.dim(), {}, std::vector<LieAlgebra::Entry>{});
    DrinfeldDoubleResult dd = drinfeld_double(iso, abelian_dual);
    CHECK(dd.jacobi.pass);
    LieAlgebra sd = semidirect_with_dual(iso);
    REQUIRE(dd.algebra.dim() == sd.dim());
    for (int i = 0; i < sd.dim(); ++i)
        for (int j = 0; j < sd.dim(); ++j)
            for (int k = 0; k < sd.dim(); ++k) CHECK(dd.algebra.c(i, j, k) == sd.c(i, j, k));
}

TEST_CASE("drinfeld_double Jacobi: valid cobracket passes, corrupted fails with witness") {
    Metric m = Metric::parse("+--");
    LieAlgebra iso = build_iso(m);
    Cobracket delta = coboundary_cobracket(iso, kappa_b(m));
    DualAlgebraResult dual = dual_algebra_from_cobracket(delta);
    REQUIRE(dual.cojacobi.pass);
    DrinfeldDoubleResult good = drinfeld_double(iso, dual.dual);
    CHECK(good.jacobi.pass);

    Cobracket corrupt = delta;
    corrupt.set(1, 0, 4, corrupt.d(1, 0, 4) + 1);
    DrinfeldDoubleResult bad = drinfeld_double(iso, dual_algebra_from_cobracket(corrupt).dual);
    CHECK_FALSE(bad.jacobi.pass);
    CHECK(bad.jacobi.i >= 0);
    CHECK(!bad.jacobi.describe().empty());
}

TEST_CASE("double Jacobi holds exactly when cocycle and co-Jacobi do") {
    Metric m = Metric::parse("+--");
    LieAlgebra iso = build_iso(m);
    testutil::Rng rng(53);
    int valid_pass = 0, corrupted_fail = 0;
    for (int trial = 0; trial < 5; ++trial) {
        // a genuine GCYBE solution: b_x for random rational x
        RatVec x = rng.vec(3);
        if (is_zero(x)) x[0] = 1;
        Bivector r = b_x_bivector(m, x);
        Cobracket delta = coboundary_cobracket(iso, r);
        bool cocycle = verify_cocycle(iso, delta).all_pass();
        DualAlgebraResult dual = dual_algebra_from_cobracket(delta);
        bool double_jacobi = drinfeld_double(iso, dual.dual).jacobi.pass;
        CHECK(double_jacobi == (cocycle && dual.cojacobi.pass));
        if (double_jacobi) ++valid_pass;

        Cobracket corrupt = delta;
        int i = rng.range(0, iso.dim() - 1);
        int a = rng.range(0, iso.dim() - 2);
        corrupt.set(i, a, a + 1, corrupt.d(i, a, a + 1) + rng.range(1, 3));
        DualAlgebraResult cd = dual_algebra_from_cobracket(corrupt);
        bool corrupt_jacobi = drinfeld_double(iso, cd.dual).jacobi.pass;
        bool corrupt_bialg = verify_cocycle(iso, corrupt).all_pass() && cd.cojacobi.pass;
        CHECK(corrupt_jacobi == corrupt_bialg);
        if (!corrupt_jacobi) ++corrupted_fail;
    }
    CHECK(valid_pass == 5);
    CHECK(corrupted_fail >= 4);  // a random bump can in principle stay a bialgebra
}

TEST_CASE("manin_from_double: dimensions, isotropy, axioms") {
    Metric m = Metric::parse("+---");
    LieAlgebra so = build_so(m);
    SubalgebraSpec spec;
    SubalgebraFamily u = iwasawa_type_subalgebra(m, spec);
    DoubleDecomposition dd{so, Subspace::from_generators(so.dim(), h1_generators(m)),
                           Subspace::from_generators(so.dim(), u.gens)};
    ManinTriple t = manin_from_double(dd);
    CHECK(t.m.dim() == 2 * so.dim());
    Report rep = verify_manin(t);
    CHECK(rep.all_pass());

    // explicit annihilator bases must span the annihilator
    ManinTriple t2 = manin_from_double(dd, twisted_annihilator_basis(m, Half::h1));
    CHECK(verify_manin(t2).all_pass());
    std::vector<RatVec> wrong{basis_vec(so.dim(), 0)};
    CHECK_THROWS_AS(manin_from_double(dd, wrong), bad_params);

    // identity form in place of the canonical pairing breaks invariance
    ManinTriple broken{t.m, t.p, t.q, BilinearForm(t.m.dim(), RatMat::identity(t.m.dim()), true)};
    Report br = verify_manin(broken);
    CHECK_FALSE(br.all_pass());
    CHECK_FALSE(br.find("form_invariant")->pass);

    // a non-subalgebra P is detected
    std::vector<RatVec> bad_rows{basis_vec(t.m.dim(), 0), basis_vec(t.m.dim(), 1)};
    ManinTriple badp{t.m, Subspace::from_generators(t.m.dim(), bad_rows), t.q, t.form};
    CHECK_FALSE(verify_manin(badp).find("P_subalgebra")->pass);
}

TEST_CASE("extract_bialgebra throws on a degenerate pairing") {
    Metric m = Metric::parse("+--");
    LieAlgebra so = build_so(m);
    LieAlgebra sd = semidirect_with_dual(so);
    std::vector<RatVec> rows;
    for (int i = 0; i < so.dim(); ++i) rows.push_back(basis_vec(sd.dim(), i));
    Subspace p = Subspace::from_generators(sd.dim(), rows);
    ManinTriple degenerate{sd, p, p, canonical_pairing_form(so.dim())};
    CHECK_THROWS_AS(extract_bialgebra(degenerate), degenerate_pairing);
}

TEST_CASE("so32 pipeline: extraction matches the closed-form b for all six variants") {
    Metric m = Metric::parse("+---");
    SubalgebraSpec u;
    u.variant = UVariant::u;
    SubalgebraSpec ut;
    ut.variant = UVariant::u_tilde;
    ut.s = RatMat(2, 2);
    ut.s(0, 1) = Rational(1, 3);
    ut.s(1, 0) = Rational(-1, 3);
    for (Half h : {Half::h1, Half::h2}) {
        So32Pipeline pu = run_so32_pipeline(m, h, u);
        INFO("variant u, " << half_name(h));
        CHECK(pu.report.all_pass());
        So32Pipeline pt = run_so32_pipeline(m, h, ut);
        INFO("variant u~, " << half_name(h));
        CHECK(pt.report.all_pass());
    }

    Metric m4 = Metric::parse("++--");
    SubalgebraSpec Ut;
    Ut.variant = UVariant::U_tilde;
    Ut.D = {{2, 3}};
    Ut.s = RatMat(2, 2);
    Ut.s(0, 1) = Rational(1, 2);
    Ut.s(1, 0) = Rational(-1, 2);
    for (Half h : {Half::h1, Half::h2}) {
        So32Pipeline p = run_so32_pipeline(m4, h, Ut);
        INFO("variant U~, " << half_name(h));
        CHECK(p.report.all_pass());
    }
}

TEST_CASE("extraction examples in closed form") {
    // (so(1,3); h1, u): delta = partial(-b_{e'3}) on iso(0,3)
    Metric m = Metric::parse("+---");
    So32Pipeline p1 = run_so32_pipeline(m, Half::h1, SubalgebraSpec{});
    REQUIRE(p1.report.all_pass());
    CHECK(p1.sub_metric.str() == "---");
    RatVec x3(3);
    x3[2] = 1;
    CHECK(p1.claimed == b_x_bivector(p1.sub_metric, x3).scaled(-1));
    CHECK(p1.identified == coboundary_cobracket(p1.standard_iso, p1.claimed));

    // (so(1,3); h2, u): delta = partial(-b_{e'1}) on iso(1,2)
    So32Pipeline p2 = run_so32_pipeline(m, Half::h2, SubalgebraSpec{});
    REQUIRE(p2.report.all_pass());
    CHECK(p2.sub_metric.str() == "+--");
    RatVec x1(3);
    x1[0] = 1;
    CHECK(p2.claimed == b_x_bivector(p2.sub_metric, x1).scaled(-1));

    // (so(1,3); h1, u~): delta = partial(-b_{e'3} - e'3 ^ s') with s' the
    // shifted s block
    SubalgebraSpec ut;
    ut.variant = UVariant::u_tilde;
    ut.s = RatMat(2, 2);
    ut.s(0, 1) = Rational(2, 5);
    ut.s(1, 0) = Rational(-2, 5);
    So32Pipeline p3 = run_so32_pipeline(m, Half::h1, ut);
    REQUIRE(p3.report.all_pass());
    RatVec s_elem(so_dim(3));
    s_elem[lambda_index(3, 0, 1)] = Rational(4, 5);  // 2 s^{23} at shifted indices
    Bivector expect =
        b_x_bivector(p3.sub_metric, x3).scaled(-1) +
        Bivector::wedge(embed_v(p3.sub_metric, x3), embed_so(p3.sub_metric, s_elem)).scaled(-1);
    CHECK(p3.claimed == expect);
    CHECK(p3.identified == coboundary_cobracket(p3.standard_iso, expect));

    // the claimed b is itself a valid GCYBE solution of the matching family
    GcybeReport g = gcybe_report(p3.standard_iso, p3.claimed, omega_element(p3.sub_metric));
    CHECK(g.invariant);
    CHECK(*g.t == Rational(-eta_norm(p3.sub_metric, x3)));
}

TEST_CASE("the double of a semidirect bialgebra is the coadjoint semidirect product") {
    // h = iso(p', q') = a |x V with delta = partial b; the Drinfeld double of
    // (h, h*) must coincide with semidirect_with_dual(a (+) a0) under the
    // duality map V (+) V0 <-> (a (+) a0)*.
    testutil::Rng rng(59);
    for (const char* sm : {"+--", "---", "++-"}) {
        Metric m = Metric::parse(sm);
        const int n1 = m.n1();
        const int sd = so_dim(n1);
        LieAlgebra iso = build_iso(m);
        RatVec x = rng.vec(n1);
        if (is_zero(x)) x[0] = 1;
        Bivector b = b_x_bivector(m, x);
        Cobracket delta = coboundary_cobracket(iso, b);
        DualAlgebraResult dual = dual_algebra_from_cobracket(delta);
        REQUIRE(dual.cojacobi.pass);
        DrinfeldDoubleResult dd = drinfeld_double(iso, dual.dual);
        REQUIRE(dd.jacobi.pass);
        const int d = iso.dim();

        // positions in the double: a = Lambda block, a0 = duals of translations
        std::vector<int> gprime;
        for (int t = 0; t < sd; ++t) gprime.push_back(t);
        for (int t = 0; t < n1; ++t) gprime.push_back(d + translation_index(n1, t));
        const int gd = static_cast<int>(gprime.size());

        // restrict the double's bracket to G' = a (+) a0 (must close on it)
        std::vector<LieAlgebra::Entry> entries;
        for (int u = 0; u < gd; ++u)
            for (int v = u + 1; v < gd; ++v) {
                RatVec br = dd.algebra.bracket(basis_vec(2 * d, gprime[u]),
                                               basis_vec(2 * d, gprime[v]));
                RatVec coords(gd);
                for (int w = 0; w < gd; ++w) {
                    coords[w] = br[gprime[w]];
                    br[gprime[w]] = 0;
                }
                REQUIRE(is_zero(br));
                for (int w = 0; w < gd; ++w)
                    if (coords[w] != 0) entries.emplace_back(u, v, w, coords[w]);
            }
        LieAlgebra gp(gd, {}, entries);
        LieAlgebra model = semidirect_with_dual(gp);

        // phi: model basis -> double coordinates
        // G'-part maps to its own positions; dual-of-a_u -> X*_{Lambda_u},
        // dual-of-(X*_{e_v}) -> e_v.
        std::vector<RatVec> phi;
        for (int u = 0; u < gd; ++u) phi.push_back(basis_vec(2 * d, gprime[u]));
        for (int u = 0; u < sd; ++u) phi.push_back(basis_vec(2 * d, d + u));
        for (int v = 0; v < n1; ++v) phi.push_back(basis_vec(2 * d, translation_index(n1, v)));

        for (int u = 0; u < model.dim(); ++u)
            for (int v = u + 1; v < model.dim(); ++v) {
                RatVec lhs = dd.algebra.bracket(phi[u], phi[v]);
                RatVec rhs(2 * d);
                for (const auto& [w, coef] : model.bracket_basis(u, v)) rhs = rhs + coef * phi[w];
                CHECK(lhs == rhs);
            }
    }
}
