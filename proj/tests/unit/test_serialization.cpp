#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "univalent/serialization.hpp"

using namespace univalent;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("series round trip, bit for bit") {
    const TaylorSeries s(std::vector<Complex>{{0.1, -1e-300}, {1.0 / 3.0, 2.0 / 7.0}, {-5e10, 0.0}});
    CHECK(series_from_json(parse_json(to_json(s).dump())) == s);
    Json wrapped;
    wrapped["series"] = to_json(s);
    CHECK(series_from_json(wrapped) == s);
}

TEST_CASE("malformed series are input errors") {
    CHECK(kind_of([] { (void)parse_json("[[0, 1], "); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { (void)series_from_json(parse_json("[]")); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { (void)series_from_json(parse_json("[[1, 2, 3]]")); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { (void)series_from_json(parse_json("[[\"a\", 0]]")); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { (void)series_from_json(parse_json("{\"coeffs\": []}")); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { (void)read_json_file("/nonexistent/file.json"); }) == ErrorKind::InvalidArgument);
    // bare reals are accepted as complex numbers with zero imaginary part
    CHECK(series_from_json(parse_json("[0, 1, 0.5]"))[2] == Complex{0.5, 0.0});
}

TEST_CASE("exterior function round trip") {
    const ExteriorFunction f(std::polar(1.0, 0.3), {{-2.0, 0.1}, {1.0, 0.0}}, true);
    const ExteriorFunction g = exterior_from_json(parse_json(to_json(f).dump()));
    CHECK(g.leading == f.leading);
    CHECK(g.b == f.b);
    CHECK(g.exact);
}

TEST_CASE("functional spec schema") {
    const FunctionalSpec spec = exterior_quadratic_spec({0.01, -0.5});
    const Json j = to_json(spec);
    CHECK(j["name"] == "exterior-quadratic");
    CHECK(j["terms"][1]["mono"][0][0] == 2);
    CHECK(functional_from_json(parse_json(j.dump())) == spec);
    const auto text = R"({"name": "fs", "terms": [{"w": [1, 0], "mono": [[3, 1]]}, {"w": [-0.5, 0], "mono": [[2, 2]]}]})";
    CHECK(functional_from_json(parse_json(text)) == FunctionalSpec{"fs", {{1.0, {{3, 1}}}, {-0.5, {{2, 2}}}}});
    CHECK(kind_of([] { (void)functional_from_json(parse_json(R"({"terms": [{"w": [1, 0], "mono": [[1, 1]]}]})")); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("maximize config and run round trip") {
    MaximizeConfig c;
    c.ball = BallSpec{2, 0.25, NormMode::Paper};
    c.target = Target::functional(fekete_szego_spec(0.5));
    c.starts = 3;
    c.seed = 123456789012345ULL;
    const MaximizeConfig back = maximize_config_from_json(parse_json(to_json(c).dump()));
    CHECK(back.ball == c.ball);
    CHECK(back.target == c.target);
    CHECK(back.starts == 3);
    CHECK(back.seed == c.seed);
    CHECK(back.z0_grid == c.z0_grid);

    ExtremalRun run;
    run.config = c;
    run.seed = c.seed;
    run.best_value = 0.123;
    run.best_phi = TaylorSeries(std::vector<Complex>{{0.1, 0.2}, {0.3, 0.4}});
    run.best_z0 = std::polar(1.0, 0.5);
    run.theta = -0.785;
    run.trace = {{0, 0.1, 0, 0, 12, false}, {1, 0.123, 0, 1, 9, true}};
    const ExtremalRun r = extremal_run_from_json(parse_json(to_json(run).dump()));
    CHECK(r.best_value == run.best_value);
    CHECK(r.best_phi == run.best_phi);
    CHECK(r.best_z0 == run.best_z0);
    CHECK(r.trace.size() == 2);
    CHECK(r.trace[1].failed);
    CHECK(r.trace[1].evaluations == 9);
    CHECK(to_json(r).dump() == to_json(run).dump());
}

TEST_CASE("target kinds") {
    for (const Target& t : {Target::coefficient(3), Target::schwarzian_coefficient(1), Target::functional(zalcman_spec(2))}) {
        CHECK(target_from_json(to_json(t)) == t);
    }
    CHECK(kind_of([] { (void)target_from_json(parse_json(R"({"kind": "other"})")); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("report serialization") {
    const NormPair n{0.1, 0.2, 0.3, 3.0};
    CHECK(to_json(n)["b_norm"] == 0.3);
    EnclosureReport e;
    e.ok = true;
    CHECK(to_json(e)["ok"] == true);
    SymmetryReport s;
    s.symmetry = SymmetryClass::Strong;
    CHECK(to_json(s)["symmetry"] == "strong");
    CHECK_FALSE(to_json(s).contains("best_line"));
}

TEST_CASE("double formatting round trips") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 6.0, 1e300}) CHECK(std::stod(format_double(v)) == v);
    CHECK(format_double(6.0) == "6");
}
