#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxflat/io.hpp"

using namespace coxflat;

TEST_CASE("matrix text parsing") {
  CoxeterMatrix a3 = parse_matrix_text(
      "vertices: s1 s2 s3\n"
      "s1 s2 3\n"
      "s2 s3 3\n"
      "s1 s3 2\n");
  CHECK(a3 == CoxeterMatrix::type_A(3));
  CHECK(a3.names() == std::vector<std::string>{"s1", "s2", "s3"});

  // Indices, a default header, comments, and an infinite order.
  CoxeterMatrix free2 = parse_matrix_text(
      "# free product\n"
      "vertices: a b c\n"
      "default = 2\n"
      "0 1 inf  # overrides the default\n");
  CHECK(free2.order(0, 1) == kInfiniteOrder);
  CHECK(free2.order(0, 2) == 2);
  CHECK(!is_finite(free2));
}

TEST_CASE("matrix parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_matrix_text("vertices: a b\na b 1\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_matrix_text("a b 3\n"), doctest::Contains("line 1"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_matrix_text("vertices: a b\na x 3\n"),
                       doctest::Contains("unknown vertex"), ParseError);
  CHECK_THROWS_WITH_AS(parse_matrix_text("vertices: a b c\na b 3\n"),
                       doctest::Contains("not listed"), ParseError);
  CHECK_THROWS_WITH_AS(parse_matrix_text("vertices: a b\ndefault = 3\n"),
                       doctest::Contains("default = 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_matrix_text("vertices: a b\na b 3\na b 4\n"),
                       doctest::Contains("conflicting"), ParseError);
}

TEST_CASE("point serialization round-trips") {
  ParameterPoint u;
  u.set_edge(0, 1, {frac(1, 2), Rational(3), Rational(-2)});
  u.set_edge(1, 2, {Rational(1), Rational(1)});
  nlohmann::json ju = to_json(u);
  CHECK(ju[0]["edge"] == nlohmann::json({0, 1}));
  CHECK(ju[0]["m"] == 3);
  CHECK(ju[0]["t"][0] == "1/2");
  CHECK(parameter_point_from_json(ju) == u);

  SymmetricPoint e;
  e.set_edge(0, 2, {Rational(0), frac(-5, 7)});
  nlohmann::json je = to_json(e);
  CHECK(je[0]["e"][1] == "-5/7");
  CHECK(symmetric_point_from_json(je) == e);

  ThetaPoint t;
  t.set(0, 1, frac(4, 9));
  nlohmann::json jt = to_json(t);
  CHECK(jt[0]["t"] == "4/9");
  CHECK(theta_point_from_json(jt) == t);

  HeckeParams p;
  p.u = {Rational(1), frac(1, 3)};
  p.v = {Rational(-1), Rational(2)};
  p.f[{0, 1}] = {frac(2, 5)};
  nlohmann::json jp = to_json(p);
  HeckeParams q = hecke_params_from_json(jp);
  CHECK(q.u == p.u);
  CHECK(q.v == p.v);
  CHECK(q.f == p.f);
}

TEST_CASE("json shape errors") {
  CHECK_THROWS_AS(parameter_point_from_json(nlohmann::json::object()), ParseError);
  nlohmann::json bad = nlohmann::json::array();
  bad.push_back({{"edge", {0, 1}}, {"m", 2}, {"t", {"1/2"}}});
  CHECK_THROWS_WITH_AS(parameter_point_from_json(bad), doctest::Contains("disagrees"),
                       ParseError);
  nlohmann::json dup = nlohmann::json::array();
  dup.push_back({{"edge", {0, 1}}, {"t", {"1", "1"}}});
  dup.push_back({{"edge", {1, 0}}, {"t", {"2", "2"}}});
  CHECK_THROWS_WITH_AS(parameter_point_from_json(dup), doctest::Contains("duplicate"),
                       ParseError);
}
