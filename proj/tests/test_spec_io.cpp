#include "doctest.h"

#include "support.hpp"
#include "vmrt/spec_io.hpp"

using namespace vmrt;
using vmrt::testing::ints;

TEST_CASE("variety spec parsing") {
  const VarietySpec spec = parse_variety_spec(R"({
    "label": "cubic",
    "variables": ["t"],
    "coordinates": ["1", "t", "t^2", "t^3"]
  })");
  CHECK(spec.chart->label() == "cubic");
  CHECK(spec.chart->coords() == veronese_chart(2, 3).coords());
  CHECK_FALSE(spec.omega);
}

TEST_CASE("explicit omega tables") {
  const VarietySpec spec = parse_variety_spec(R"({
    "label": "cubic", "variables": ["t"], "coordinates": ["1", "t", "t^2", "t^3"],
    "omega": {"dimU": 2, "entries": [{"i": 0, "j": 1, "uVector": [1, "1/2"]},
                                     {"i": 3, "j": 2, "uVector": ["-2", 0]}]}
  })");
  REQUIRE(spec.omega);
  CHECK(spec.omega->dim_u() == 2);
  CHECK(spec.omega->on_basis(0, 1) == Vec{Scalar(1), make_scalar(1, 2)});
  CHECK(spec.omega->on_basis(2, 3) == ints({2, 0}));
  CHECK(parse_omega(omega_to_json(*spec.omega), 4) == *spec.omega);
}

TEST_CASE("malformed specs raise ParseError") {
  CHECK_THROWS_AS(parse_variety_spec("{"), ParseError);
  CHECK_THROWS_AS(parse_variety_spec(R"({"label": "x", "variables": ["t"]})"), ParseError);
  CHECK_THROWS_AS(parse_variety_spec(R"({"label": "x", "variables": ["t"], "coordinates": ["1", "t +"]})"), ParseError);
  CHECK_THROWS_AS(parse_variety_spec(R"({"label": "x", "variables": ["t"], "coordinates": []})"), ParseError);
  CHECK_THROWS_AS(parse_variety_spec(R"({"label": 3, "variables": ["t"], "coordinates": ["1"]})"), ParseError);
  CHECK_THROWS_AS(parse_omega(R"({"dimU": 1, "entries": [{"i": 0, "j": 9, "uVector": [1]}]})", 4), ParseError);
  CHECK_THROWS_AS(parse_omega(R"({"dimU": 1, "entries": [{"i": 0, "j": 1, "uVector": [1, 2]}]})", 4), ParseError);
  CHECK_THROWS_AS(parse_omega(R"({"dimU": 1, "entries": [{"i": 0, "j": 1, "uVector": [1.5]}]})", 4), ParseError);
  CHECK_THROWS_AS(load_variety_spec("builtin:nope"), ParseError);
  CHECK_THROWS_AS(load_variety_spec("/nonexistent/spec.json"), ParseError);
}

TEST_CASE("builtin prefix") {
  const VarietySpec spec = load_variety_spec("builtin:veronese-2-4");
  CHECK(spec.chart->ambient_dim() == 5);
}

TEST_CASE("construction export") {
  const std::string text = construction_to_json(build_omega(veronese_chart(2, 3)));
  CHECK(text.find("\"dimWprime\": 5") != std::string::npos);
  CHECK(text.find("\"dimU\": 1") != std::string::npos);
  CHECK(text.find("\"omegaTable\"") != std::string::npos);
}
