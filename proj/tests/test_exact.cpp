#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxflat/laurent.hpp"
#include "coxflat/series.hpp"

using namespace coxflat;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(rational_str(Rational(3, 2)) == "3/2");
  CHECK(rational_str(Rational(-7)) == "-7");
  CHECK(rational_str(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("rational nth roots") {
  CHECK(rational_nth_root(Rational(8, 27), 3) == Rational(2, 3));
  CHECK(rational_nth_root(Rational(-8, 27), 3) == Rational(-2, 3));
  CHECK(rational_nth_root(Rational(9, 4), 2) == Rational(3, 2));
  CHECK(!rational_nth_root(Rational(2), 2).has_value());
  CHECK(!rational_nth_root(Rational(-4), 2).has_value());
  CHECK(rational_nth_root(Rational(1), 7) == Rational(1));
  CHECK(rational_nth_root(Rational(0), 3) == Rational(0));
}

static LaurentPoly lv(const std::vector<std::string>& vars, const std::string& name,
                      int pw = 1) {
  return LaurentPoly::variable(vars, name, pw);
}

TEST_CASE("elementary symmetric polynomials") {
  std::vector<std::string> vars{"t1", "t2"};
  auto t1 = lv(vars, "t1"), t2 = lv(vars, "t2");
  CHECK(elementary_symmetric({t1, t2}, 2) == t1 * t2);
  CHECK(elementary_symmetric({t1, t2}, 0) == LaurentPoly::constant(vars, 1));

  CHECK(elementary_symmetric(std::vector<Rational>{1, 1, 1}, 2) == Rational(3));

  std::vector<std::string> uv{"t"};
  auto t = lv(uv, "t");
  CHECK(elementary_symmetric({t, t.inverse()}, 1) == t + t.inverse());

  CHECK_THROWS_AS(elementary_symmetric(std::vector<Rational>{1, 2}, 3),
                  std::invalid_argument);
}

TEST_CASE("root identity: sum_k (-1)^k e_k z^{m-k} vanishes at z = x_j") {
  for (int m = 1; m <= 5; ++m) {
    std::vector<std::string> vars;
    for (int i = 0; i < m; ++i) vars.push_back("x" + std::to_string(i));
    std::vector<LaurentPoly> xs;
    for (int i = 0; i < m; ++i) xs.push_back(lv(vars, vars[static_cast<std::size_t>(i)]));
    for (int j = 0; j < m; ++j) {
      LaurentPoly acc(vars);
      for (int k = 0; k <= m; ++k) {
        LaurentPoly term = elementary_symmetric(xs, k) *
                           xs[static_cast<std::size_t>(j)].pow(m - k);
        acc = k % 2 ? acc - term : acc + term;
      }
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("laurent ring laws and evaluation commute (randomized)") {
  std::vector<std::string> vars{"a", "b"};
  std::mt19937 rng(12345);
  auto rand_poly = [&]() {
    LaurentPoly p(vars);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      int ea = static_cast<int>(rng() % 5) - 2;
      int eb = static_cast<int>(rng() % 5) - 2;
      int c = static_cast<int>(rng() % 7) - 3;
      p += LaurentPoly::monomial(vars, {ea, eb}, Rational(c));
    }
    return p;
  };
  std::map<std::string, Rational> pt{{"a", Rational(2, 3)}, {"b", Rational(-5, 2)}};
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly p = rand_poly(), q = rand_poly(), r = rand_poly();
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * (q * r) == (p * q) * r);
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
  }
}

TEST_CASE("laurent monomial inverses; non-monomial inverse rejected") {
  std::vector<std::string> vars{"t"};
  auto t = lv(vars, "t");
  CHECK(t.pow(-3) * t.pow(3) == LaurentPoly::constant(vars, 1));
  CHECK((t.scaled(Rational(2, 5))).inverse() ==
        LaurentPoly::monomial(vars, {-1}, Rational(5, 2)));
  CHECK_THROWS_AS((t + LaurentPoly::constant(vars, 1)).inverse(), std::domain_error);
}

TEST_CASE("mismatched variable contexts are rejected") {
  auto p = lv({"a"}, "a");
  auto q = lv({"b"}, "b");
  CHECK_THROWS_AS(p + q, std::invalid_argument);
}

static std::vector<Rational> rats(std::vector<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST_CASE("series division by 1+z") {
  CHECK(series_div_one_plus_z(TruncatedSeries(rats({1, 2, 2, 1}))) ==
        TruncatedSeries(rats({1, 1, 1, 0})));
  CHECK(series_div_one_plus_z(TruncatedSeries(rats({1, 3, 5, 6, 5, 3, 1}))) ==
        TruncatedSeries(rats({1, 2, 3, 3, 2, 1, 0})));
  CHECK(series_div_one_plus_z(TruncatedSeries(rats({1}))) ==
        TruncatedSeries(rats({1})));

  TruncatedSeries h(rats({1, 3, 5, 6, 5, 3, 1}));
  CHECK(series_div_one_plus_z(h).mul_one_plus_z() == h);
}
