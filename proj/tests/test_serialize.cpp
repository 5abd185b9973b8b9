#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "liebialg/orthogonal.hpp"
#include "liebialg/serialize.hpp"

using namespace liebialg;

TEST_CASE("algebra JSON round trip preserves structure constants exactly") {
    for (const char* s : {"+--", "+---"}) {
        Metric m = Metric::parse(s);
        LieAlgebra iso = build_iso(m);
        json j = algebra_to_json(iso);
        CHECK(j["dim"] == iso.dim());
        LieAlgebra back = algebra_from_json(j);
        REQUIRE(back.dim() == iso.dim());
        CHECK(back.labels() == iso.labels());
        for (int i = 0; i < iso.dim(); ++i)
            for (int k = 0; k < iso.dim(); ++k)
                for (int l = 0; l < iso.dim(); ++l) CHECK(back.c(i, k, l) == iso.c(i, k, l));
    }
}

TEST_CASE("bivector JSON round trip, sparse one-sided entries") {
    testutil::Rng rng(97);
    Bivector b = rng.bivector(6);
    json j = bivector_to_json(b);
    for (const auto& row : j["entries"]) CHECK(row[0].get<int>() < row[1].get<int>());
    CHECK(bivector_from_json(j) == b);
}

TEST_CASE("scalars serialize as reduced fraction strings") {
    Bivector b(3);
    b.set(0, 2, Rational(2, 4));
    json j = bivector_to_json(b);
    CHECK(j["entries"][0][2].get<std::string>() == "1/2");
}

TEST_CASE("report JSON carries witnesses and the exit code contract") {
    Report rep;
    rep.suite = "demo";
    rep.add("ok", true);
    rep.add("bad", false, "because");
    json j = report_to_json(rep);
    CHECK(j["exit_code"] == 1);
    CHECK(j["checks"][1]["witness"] == "because");
    CHECK_FALSE(j["checks"][0].contains("witness"));
}

TEST_CASE("lorentz matrix JSON round trip") {
    lorentz::Mat g = lorentz::sample_so0(3, 7);
    json j = matrix_to_json(g);
    lorentz::Mat back = matrix_from_json(j);
    // double-precision wire format
    CHECK(lorentz::max_abs(lorentz::Mat(back - g)) < 1e-15L);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), bad_params);
}
