// liebialg: exact verification of bialgebra structures on inhomogeneous
// pseudo-orthogonal algebras, and numerical decompositions of SO0(1,n).
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 mathematical obstruction (expected failure mode), 4 invalid input.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "liebialg/families.hpp"
#include "liebialg/lorentz.hpp"
#include "liebialg/manin.hpp"
#include "liebialg/orthogonal.hpp"
#include "liebialg/serialize.hpp"
#include "liebialg/so_doubles.hpp"

namespace lb = liebialg;
using lb::json;
using lb::Rational;
using lb::RatVec;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitObstructed = 3;
constexpr int kExitInvalid = 4;

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitUsage);
}

/// Parses linear combinations of basis translations: "e1", "e1+e4", "2e1-1/2e3".
RatVec parse_v_expr(const std::string& text, int n1) {
    RatVec v(n1);
    size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        Rational sign = 1;
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        }
        size_t cstart = pos;
        while (pos < text.size() && text[pos] != 'e') ++pos;
        if (pos == text.size()) usage_error("expected 'e<k>' term in vector '" + text + "'");
        Rational coef = 1;
        if (pos > cstart) coef = lb::parse_rational(text.substr(cstart, pos - cstart));
        ++pos;  // consume 'e'
        size_t istart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (istart == pos) usage_error("missing index after 'e' in '" + text + "'");
        int idx = std::stoi(text.substr(istart, pos - istart));
        if (idx < 1 || idx > n1) usage_error("index e" + std::to_string(idx) + " out of range");
        v[idx - 1] += sign * coef;
        any = true;
    }
    if (!any) usage_error("empty vector expression");
    return v;
}

/// so(p,q) element from a JSON list [[i, j, "coef"], ...] of Lambda terms.
RatVec parse_so_elem(const std::string& text, int n1) {
    RatVec v(lb::so_dim(n1));
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        usage_error(std::string("bad so-element JSON: ") + e.what());
    }
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 3) usage_error("so-element rows are [i,j,\"p/q\"]");
        int a = row[0].get<int>() - 1, b = row[1].get<int>() - 1;
        if (a < 0 || b < 0 || a >= n1 || b >= n1 || a == b)
            usage_error("bad Lambda indices in so-element");
        lb::add_lambda(v, n1, a, b, lb::parse_rational(row[2].get<std::string>()));
    }
    return v;
}

lb::RatMat parse_s_matrix(const std::string& text, int n1) {
    if (text.empty() || text == "0") return lb::RatMat();
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        usage_error(std::string("bad s JSON: ") + e.what());
    }
    int d = n1 - 2;
    if (static_cast<int>(j.size()) != d) usage_error("s must be (n-1)x(n-1)");
    lb::RatMat s(d, d);
    for (int a = 0; a < d; ++a) {
        if (static_cast<int>(j[a].size()) != d) usage_error("s must be square");
        for (int b = 0; b < d; ++b) {
            const auto& cell = j[a][b];
            s(a, b) = cell.is_string() ? lb::parse_rational(cell.get<std::string>())
                                       : Rational(cell.get<long long>());
        }
    }
    return s;
}

std::vector<std::pair<int, int>> parse_d_set(const std::string& text) {
    std::vector<std::pair<int, int>> d;
    if (text.empty()) return d;
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        usage_error(std::string("bad D JSON: ") + e.what());
    }
    // accepted forms: [2,3] (one pair) or [[2,3],[4,5]]
    if (!j.empty() && j[0].is_number()) {
        if (j.size() != 2) usage_error("D pair must have two indices");
        d.emplace_back(j[0].get<int>(), j[1].get<int>());
        return d;
    }
    for (const auto& row : j) {
        if (row.size() != 2) usage_error("D pairs must have two indices");
        d.emplace_back(row[0].get<int>(), row[1].get<int>());
    }
    return d;
}

int emit_report(const lb::Report& rep) {
    std::cout << lb::report_to_json(rep).dump(2) << "\n";
    return rep.exit_code() == 0 ? 0 : kExitFail;
}

// ---------------------------------------------------------------- verify ---

int verify_so(const std::string& metric_str, const std::string& algebra_out) {
    lb::Metric m = lb::Metric::parse(metric_str);
    lb::LieAlgebra so = lb::build_so(m);
    lb::Report rep;
    rep.suite = "so";
    lb::JacobiReport jac = so.verify_jacobi();
    rep.add("jacobi", jac.pass, jac.pass ? "" : jac.describe());
    lb::BilinearForm k = lb::k_form(m);
    lb::Report kf = lb::verify_invariant_form(so, k);
    rep.add("k_form_invariant", kf.find("invariant")->pass, kf.find("invariant")->witness);
    rep.add("k_form_nondegenerate", kf.find("nondegenerate")->pass);
    bool gram = true;
    for (int i = 0; i < m.n1() && gram; ++i)
        for (int j = i + 1; j < m.n1() && gram; ++j)
            for (int a = 0; a < m.n1() && gram; ++a)
                for (int b = a + 1; b < m.n1(); ++b) {
                    Rational expect(0);
                    if (i == a && j == b) expect = m.eta(i) * m.eta(j);
                    if (k.matrix(lb::lambda_index(m.n1(), i, j), lb::lambda_index(m.n1(), a, b)) !=
                        expect) {
                        gram = false;
                        break;
                    }
                }
    rep.add("k_form_matches_metric_formula", gram);
    if (!algebra_out.empty()) {
        std::ofstream out(algebra_out);
        out << lb::algebra_to_json(so).dump(2) << "\n";
    }
    return emit_report(rep);
}

int verify_iso(const std::string& metric_str, const std::string& algebra_out) {
    lb::Metric m = lb::Metric::parse(metric_str);
    const int n1 = m.n1();
    lb::LieAlgebra iso = lb::build_iso(m);
    lb::Report rep;
    rep.suite = "iso";
    lb::JacobiReport jac = iso.verify_jacobi();
    rep.add("jacobi", jac.pass, jac.pass ? "" : jac.describe());
    bool abelian = true;
    for (int a = 0; a < n1 && abelian; ++a)
        for (int b = 0; b < n1; ++b)
            if (!iso.bracket_basis(lb::translation_index(n1, a), lb::translation_index(n1, b))
                     .empty()) {
                abelian = false;
                break;
            }
    rep.add("translations_abelian", abelian);
    // coadjoint formulas on the twisted duals
    bool coad_ok = true;
    for (int a = 0; a < n1 && coad_ok; ++a) {
        RatVec ea(iso.dim());
        ea[lb::translation_index(n1, a)] = 1;
        lb::RatMat co = iso.rep_matrix(lb::RepKind::coadjoint, ea);
        for (int c = 0; c < n1 && coad_ok; ++c)
            for (int d = c + 1; d < n1; ++d) {
                RatVec ls(iso.dim());
                RatVec lsv = lb::lambda_star_vector(m, c, d);
                for (int t = 0; t < lb::so_dim(n1); ++t) ls[t] = lsv[t];
                if (!lb::is_zero(co.apply(ls))) {  // ad^v_{e_a}(L*_{cd}) = 0
                    coad_ok = false;
                    break;
                }
            }
        for (int b = 0; b < n1 && coad_ok; ++b) {
            RatVec estar(iso.dim());
            estar[lb::translation_index(n1, b)] = m.eta(b);
            RatVec got = co.apply(estar);
            RatVec want(iso.dim());
            if (a != b) {  // ad^v_{e_a}(e*_b) = -L*_{ab}
                RatVec lsv = lb::lambda_star_vector(m, a, b);
                for (int t = 0; t < lb::so_dim(n1); ++t) want[t] = -lsv[t];
            }
            if (got != want) coad_ok = false;
        }
    }
    rep.add("coadjoint_formulas", coad_ok);
    if (!algebra_out.empty()) {
        std::ofstream out(algebra_out);
        out << lb::algebra_to_json(iso).dump(2) << "\n";
    }
    return emit_report(rep);
}

struct GcybeCliParams {
    std::string metric;
    std::string family = "1";  // "1".."4" or "b1".."b4"
    std::string x;
    std::string so_x;      // JSON Lambda terms (families 2, 4)
    std::string v;         // vector expr (family 4)
    std::string params;    // full JSON (family 3)
};

int parse_family(std::string f) {
    if (!f.empty() && f[0] == 'b') f = f.substr(1);
    if (f.size() != 1 || f[0] < '1' || f[0] > '4') usage_error("family must be 1..4 or b1..b4");
    return f[0] - '0';
}

int verify_gcybe(const GcybeCliParams& p) {
    lb::Metric m = lb::Metric::parse(p.metric);
    const int n1 = m.n1();
    lb::BSolutionParams bp;
    bp.family = parse_family(p.family);
    bp.x = parse_v_expr(p.x, n1);
    if (bp.family == 2 || bp.family == 4) {
        if (p.so_x.empty()) usage_error("families 2 and 4 need --X");
        bp.so_x = parse_so_elem(p.so_x, n1);
    }
    if (bp.family == 4) {
        bp.v = p.v.empty() ? RatVec(n1) : parse_v_expr(p.v, n1);
    }
    if (bp.family == 3) {
        if (p.params.empty()) usage_error("family 3 needs --params JSON");
        json j;
        try {
            j = json::parse(p.params);
        } catch (const std::exception& e) {
            usage_error(std::string("bad --params JSON: ") + e.what());
        }
        for (const auto& pair : j.at("pairs")) {
            bp.v_list.push_back(parse_v_expr(pair.at("v").get<std::string>(), n1));
            bp.x_list.push_back(parse_so_elem(pair.at("X").dump(), n1));
        }
        for (const auto& a : j.at("alphas"))
            bp.alpha_list.push_back(lb::parse_rational(a.get<std::string>()));
    }
    lb::LieAlgebra iso = lb::build_iso(m);
    lb::Bivector b = lb::b_solution(m, bp);
    lb::GcybeReport g = lb::gcybe_report(iso, b, lb::omega_element(m));
    lb::Report rep;
    rep.suite = "gcybe";
    rep.add("invariant", g.invariant, g.witness);
    rep.add("proportional_to_omega", g.proportional_to_omega);
    if (g.t.has_value()) {
        rep.add("t", true, "", lb::to_string(*g.t));
        Rational norm = lb::eta_norm(m, bp.x);
        if (norm != 0)
            rep.add("t_over_minus_eta_xx", *g.t / (-norm) == 1, "",
                    lb::to_string(*g.t / (-norm)));
        else
            rep.add("t_zero_for_null_x", *g.t == 0);
    }
    return emit_report(rep);
}

lb::SubalgebraSpec make_spec(const std::string& variant, const std::string& s_json,
                             const std::string& d_json, int n1) {
    lb::SubalgebraSpec spec;
    if (variant == "u")
        spec.variant = lb::UVariant::u;
    else if (variant == "utilde")
        spec.variant = lb::UVariant::u_tilde;
    else if (variant == "Utilde")
        spec.variant = lb::UVariant::U_tilde;
    else
        usage_error("variant must be u, utilde or Utilde");
    spec.s = parse_s_matrix(s_json, n1);
    spec.D = parse_d_set(d_json);
    return spec;
}

int verify_double(const std::string& metric_str, const std::string& variant,
                  const std::string& side, const std::string& s_json, const std::string& d_json,
                  bool manin_only) {
    lb::Metric m = lb::Metric::parse(metric_str);
    lb::SubalgebraSpec spec = make_spec(variant, s_json, d_json, m.n1());
    lb::Half half = side == "h2" ? lb::Half::h2 : lb::Half::h1;
    if (side != "h1" && side != "h2") usage_error("--side must be h1 or h2");
    lb::So32Pipeline pipe = lb::run_so32_pipeline(m, half, spec);
    if (manin_only) {
        lb::Report rep = lb::verify_manin(pipe.triple);
        rep.suite = "manin";
        return emit_report(rep);
    }
    return emit_report(pipe.report);
}

int verify_roundtrip(const std::string& metric_str, int count, std::uint64_t seed) {
    lb::Metric m = lb::Metric::parse(metric_str);
    const int n1 = m.n1();
    std::uint64_t state = seed * 2654435769ULL + 1;
    auto next = [&state]() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 2685821657736338717ULL;
    };
    lb::Report rep;
    rep.suite = "roundtrip";
    bool ok = true;
    for (int trial = 0; trial < count && ok; ++trial) {
        lb::Bivector b(lb::so_dim(n1) + n1);
        for (int a = 0; a < lb::so_dim(n1); ++a)
            for (int t = 0; t < n1; ++t) {
                int num = static_cast<int>(next() % 19) - 9;
                if (num != 0)
                    b.set(a, lb::translation_index(n1, t), Rational(num, 1 + (int)(next() % 5)));
            }
        ok = lb::dual_structure_to_b(m, lb::b_to_dual_structure(m, b)) == b;
    }
    rep.add("roundtrip_exact", ok, "", std::to_string(count) + " samples");
    return emit_report(rep);
}

// ------------------------------------------------------------- decompose ---

int decompose_cmd(const std::string& kind, int n, const std::string& s_json,
                  const std::string& input, std::optional<std::uint64_t> seed, double tol) {
    namespace lz = lb::lorentz;
    lz::Mat g;
    if (seed.has_value()) {
        g = lz::sample_so0(n, *seed);
    } else if (!input.empty()) {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot open '" << input << "'\n";
            return kExitInvalid;
        }
        json j;
        try {
            in >> j;
            g = lb::matrix_from_json(j);
        } catch (const std::exception& e) {
            std::cerr << "error: bad matrix JSON: " << e.what() << "\n";
            return kExitInvalid;
        }
        if (g.rows() != n + 1 || g.cols() != n + 1) {
            std::cerr << "error: matrix is not (n+1)x(n+1)\n";
            return kExitInvalid;
        }
    } else {
        usage_error("need --input FILE or --random SEED");
    }

    lz::Mat s = lz::Mat::Zero(n - 1, n - 1);
    if (!s_json.empty() && s_json != "0") {
        try {
            s = lb::matrix_from_json(json::parse(s_json));
        } catch (const std::exception& e) {
            std::cerr << "error: bad s JSON: " << e.what() << "\n";
            return kExitInvalid;
        }
    }

    json out;
    try {
        if (kind == "iwasawa") {
            lz::IwasawaFactors f = lz::iwasawa_decompose(g, n, tol);
            double residual =
                static_cast<double>(lz::max_abs(lz::Mat(lz::iwasawa_reconstruct(f, n) - g)));
            out["branch"] = "iwasawa";
            out["k"] = lb::matrix_to_json(f.k);
            out["t"] = static_cast<double>(f.t);
            out["x"] = lb::vec_to_json(f.x);
            out["residual"] = residual;
        } else if (kind == "kfn-euclid") {
            lz::KfnFactors f = lz::kfn_euclid(g, n, s, tol);
            out = lb::kfn_to_json(
                f, static_cast<double>(lz::max_abs(lz::Mat(lz::kfn_reconstruct(f, n, s) - g))));
        } else if (kind == "kfn-poincare") {
            lz::KfnPoincareResult r = lz::kfn_poincare(g, n, s, tol);
            if (!r.ok) {
                out["branch"] = "obstructed";
                out["obstruction_k_entry"] = static_cast<double>(r.obstruction);
                std::cout << out.dump(2) << "\n";
                return kExitObstructed;
            }
            out = lb::kfn_to_json(r.factors, static_cast<double>(lz::max_abs(
                                                 lz::Mat(lz::kfn_reconstruct(r.factors, n, s) - g))));
        } else if (kind == "xfn") {
            lz::XfnResult r = lz::xfn_extended(g, n, s, tol);
            if (r.on_boundary) {
                out["branch"] = "on_boundary";
                out["k_entry"] = static_cast<double>(r.k_entry);
                std::cout << out.dump(2) << "\n";
                return kExitObstructed;
            }
            out = lb::kfn_to_json(r.factors, static_cast<double>(lz::max_abs(
                                                 lz::Mat(lz::kfn_reconstruct(r.factors, n, s) - g))));
        } else {
            usage_error("unknown decomposition kind '" + kind + "'");
        }
    } catch (const lb::not_in_group& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lie-bialgebra verification and SO0(1,n) decompositions"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run an exact verification suite");
    verify->require_subcommand(1);
    std::string metric, algebra_out, variant = "u", side = "h1", s_json, d_json;
    std::string x_expr, so_x, v_expr, params;
    std::string family = "1";
    int count = 100;
    std::uint64_t seed = 1;

    auto* vso = verify->add_subcommand("so", "pseudo-orthogonal algebra checks");
    vso->add_option("--metric", metric, "signs string, e.g. \"+---\"")->required();
    vso->add_option("--algebra-out", algebra_out, "write the algebra JSON here");

    auto* viso = verify->add_subcommand("iso", "inhomogeneous algebra checks");
    viso->add_option("--metric", metric)->required();
    viso->add_option("--algebra-out", algebra_out);

    auto* vg = verify->add_subcommand("gcybe", "generalized CYBE check of a b-type family");
    vg->add_option("--metric", metric)->required();
    vg->add_option("--family", family, "1..4 or b1..b4")->required();
    vg->add_option("--x", x_expr, "vector, e.g. \"e1\" or \"e1+e4\"")->required();
    vg->add_option("--X", so_x, "so element JSON [[i,j,\"c\"],...]");
    vg->add_option("--v", v_expr, "eigenvector for family 4");
    vg->add_option("--params", params, "family 3 JSON parameters");

    auto* vd = verify->add_subcommand("double", "double -> Manin -> bialgebra pipeline");
    vd->add_option("--metric", metric)->required();
    vd->add_option("--variant", variant, "u | utilde | Utilde");
    vd->add_option("--side", side, "h1 | h2");
    vd->add_option("--s", s_json, "s matrix JSON (raised indices)");
    vd->add_option("--D", d_json, "D index pairs JSON, e.g. [2,3]");

    auto* vm = verify->add_subcommand("manin", "Manin axioms for one double");
    vm->add_option("--metric", metric)->required();
    vm->add_option("--variant", variant);
    vm->add_option("--side", side);
    vm->add_option("--s", s_json);
    vm->add_option("--D", d_json);

    auto* vr = verify->add_subcommand("roundtrip", "b <-> dual structure round trip");
    vr->add_option("--metric", metric)->required();
    vr->add_option("--count", count);
    vr->add_option("--seed", seed);

    // decompose
    auto* dec = app.add_subcommand("decompose", "factor an SO0(1,n) matrix");
    std::string kind, input, s_lorentz;
    int n = 3;
    double tol = 1e-9;
    std::optional<std::uint64_t> rnd_seed;
    std::uint64_t rnd_val = 0;
    dec->add_option("kind", kind, "iwasawa | kfn-euclid | kfn-poincare | xfn")->required();
    dec->add_option("--n", n, "SO0(1,n)")->required();
    dec->add_option("--s", s_lorentz, "antisymmetric (n-1)x(n-1) JSON");
    dec->add_option("--input", input, "matrix JSON file");
    auto* ropt = dec->add_option("--random", rnd_val, "seeded random group element");
    dec->add_option("--tol", tol, "tolerance (default 1e-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (vso->parsed()) return verify_so(metric, algebra_out);
        if (viso->parsed()) return verify_iso(metric, algebra_out);
        if (vg->parsed()) return verify_gcybe({metric, family, x_expr, so_x, v_expr, params});
        if (vd->parsed()) return verify_double(metric, variant, side, s_json, d_json, false);
        if (vm->parsed()) return verify_double(metric, variant, side, s_json, d_json, true);
        if (vr->parsed()) return verify_roundtrip(metric, count, seed);
        if (dec->parsed()) {
            if (ropt->count() > 0) rnd_seed = rnd_val;
            if (n < 2) usage_error("--n must be at least 2");
            return decompose_cmd(kind, n, s_lorentz, input, rnd_seed, tol);
        }
    } catch (const lb::bad_params& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lb::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
