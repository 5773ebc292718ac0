#include <doctest.h>

#include <sstream>

#include "diskrep/json_io.hpp"

using namespace diskrep;

TEST_CASE("disk measure JSON round-trip") {
    Density d;
    d.family = DensityFamily::monomial_power;
    d.m = 2;
    d.N = 3;
    d.coefficient = Complex(1.5, -0.25);
    const Measure mu = Measure({Atom{Complex(0.3, 0.1), Complex(0.0, 2.0)}}, {d});
    const std::string text = measure_to_json(mu);
    const Measure back = measure_from_json(text);
    REQUIRE(back.atoms().size() == 1);
    CHECK(back.atoms()[0].location == mu.atoms()[0].location);
    CHECK(back.atoms()[0].weight == mu.atoms()[0].weight);
    REQUIRE(back.densities().size() == 1);
    CHECK(back.densities()[0].family == DensityFamily::monomial_power);
    CHECK(back.densities()[0].m == 2);
    CHECK(back.densities()[0].N == 3);
    CHECK(back.densities()[0].coefficient == d.coefficient);
    CHECK(measure_space(text) == "disk");
    // serialization is deterministic
    CHECK(measure_to_json(back) == text);
}

TEST_CASE("every density family parses") {
    for (const char* family : {"constant", "power", "monomial_power", "bloch_log", "log_weight"}) {
        const std::string text = std::string("{\"density\":{\"family\":\"") + family +
                                 "\",\"params\":{\"a\":-0.5,\"m\":1,\"N\":2}}}";
        const Measure mu = measure_from_json(text);
        CHECK(mu.densities().size() == 1);
    }
    CHECK_THROWS(measure_from_json("{\"density\":{\"family\":\"nope\"}}"));
}

TEST_CASE("plane measure JSON round-trip with discriminator") {
    PlaneDensity d;
    d.family = PlaneDensityFamily::gaussian_monomial;
    d.alpha = 2.0;
    d.m = 1;
    const PlaneMeasure mu({PlaneAtom{Complex(1.0, -2.0), Complex(0.5, 0.5)}}, {d}, 9.0);
    const std::string text = plane_measure_to_json(mu);
    CHECK(measure_space(text) == "plane");
    const PlaneMeasure back = plane_measure_from_json(text);
    CHECK(back.truncation_radius() == 9.0);
    REQUIRE(back.densities().size() == 1);
    CHECK(back.densities()[0].alpha == 2.0);
    // a disk parser must refuse it
    CHECK_THROWS(measure_from_json(text));
}

TEST_CASE("kernel spec parsing and synthesis dispatch") {
    const std::string text = R"({
        "kernel": "bergman",
        "params": {"b": 3.0, "p": 1.0, "alpha": 0.0},
        "measure": {"atoms": [{"z": [0.0, 0.0], "w": [1.0, 0.0]}]}
    })";
    const KernelSpec spec = kernel_spec_from_json(text);
    CHECK(spec.kernel == "bergman");
    const KernelFunction f = kernel_from_spec(spec);
    CHECK(std::abs(f(Complex(0.5, 0.0)) - 1.0) < 1e-14);
}

TEST_CASE("report serialization") {
    SeminormReport rep;
    rep.radii = {0.9, 0.99};
    rep.values = {1.0, 1.5};
    rep.verdict = Verdict::undecided;
    rep.growth_exponent = 0.25;
    const std::string j = report_to_json(rep);
    CHECK(j.find("UNDECIDED") != std::string::npos);
    const std::string csv = report_to_csv(rep);
    CHECK(csv.rfind("radius,value\n", 0) == 0);
    CHECK(csv.find(",1.5") != std::string::npos);
}

TEST_CASE("probe CSV round-trip") {
    const std::vector<Complex> probes{Complex(0.1, -0.2), Complex(0.5, 0.0)};
    const std::vector<Complex> values{Complex(1.0, 2.0), Complex(-3.0, 0.5)};
    const std::string csv = probes_to_csv(probes, values);
    std::istringstream in(csv);
    const auto back = probes_from_csv(in);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == probes[0]);
    CHECK(back[1] == probes[1]);
}
