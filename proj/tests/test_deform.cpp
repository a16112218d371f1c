#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxflat/deform.hpp"

using namespace coxflat;

namespace {

// t = 1 everywhere on the finite edges of m.
ParameterPoint ones_point(const CoxeterMatrix& m) {
  ParameterPoint u;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (order_is_finite(m.order(i, j)))
        u.set_edge(i, j, std::vector<Rational>(static_cast<std::size_t>(m.order(i, j)),
                                               Rational(1)));
  return u;
}

Rational rq(std::mt19937& rng) {
  int num = static_cast<int>(rng() % 9) - 4;
  int den = 1 + static_cast<int>(rng() % 4);
  if (num == 0) num = 5;
  return frac(num, den);
}

}  // namespace

TEST_CASE("to_symmetric") {
  ParameterPoint u;
  u.set_edge(0, 1, {Rational(1), Rational(1)});
  SymmetricPoint e = to_symmetric(u);
  CHECK(e.e(0, 1, 1) == Rational(2));
  CHECK(e.e(0, 1, 2) == Rational(1));

  ParameterPoint v;
  v.set_edge(0, 1, {Rational(1), Rational(2), Rational(3)});
  SymmetricPoint f = to_symmetric(v);
  CHECK(f.e(0, 1, 1) == Rational(6));
  CHECK(f.e(0, 1, 2) == Rational(11));
  CHECK(f.e(0, 1, 3) == Rational(6));

  ParameterPoint w;
  w.set_edge(0, 1, {Rational(1, 2), Rational(3)});
  CHECK(to_symmetric(w).e(1, 0, 1) == Rational(7, 3));
}

TEST_CASE("t-chart reversal is an involution") {
  ParameterPoint u;
  u.set_edge(1, 0, {Rational(2), Rational(5), Rational(1, 3)});
  for (int k = 1; k <= 3; ++k) {
    Rational tk = k == 1 ? Rational(2) : k == 2 ? Rational(5) : Rational(1, 3);
    CHECK(u.t(1, 0, k) == tk);
  }
  // The reversed multiset is the set of inverses.
  std::multiset<Rational> inv{Rational(1, 2), Rational(1, 5), Rational(3)};
  std::multiset<Rational> got;
  for (int k = 1; k <= 3; ++k) got.insert(u.t(0, 1, k));
  CHECK(got == inv);

  // e-chart reversal matches elementary symmetrics of the inverses.
  SymmetricPoint e = to_symmetric(u);
  std::vector<Rational> vals(inv.begin(), inv.end());
  auto esym = [&](int k) {
    Rational s = 0;
    if (k == 1) s = vals[0] + vals[1] + vals[2];
    if (k == 2) s = vals[0] * vals[1] + vals[0] * vals[2] + vals[1] * vals[2];
    if (k == 3) s = vals[0] * vals[1] * vals[2];
    return s;
  };
  for (int k = 1; k <= 3; ++k) CHECK(e.e(0, 1, k) == esym(k));
}

TEST_CASE("point shape validation") {
  CoxeterMatrix m = CoxeterMatrix::type_A(2);
  ParameterPoint u;
  CHECK_THROWS_AS(check_point_shape(m, u), std::invalid_argument);  // missing edge
  u.set_edge(0, 1, {Rational(1), Rational(1)});                     // wrong length
  CHECK_THROWS_AS(check_point_shape(m, u), std::invalid_argument);
  u.set_edge(0, 1, {Rational(1), Rational(1), Rational(1)});
  CHECK_NOTHROW(check_point_shape(m, u));
  CHECK_THROWS_AS(u.set_edge(0, 1, {Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(u.set_edge(2, 2, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("apply_Z") {
  CoxeterMatrix m = CoxeterMatrix::triangle(3, 3, 3);
  ParameterPoint u;
  std::mt19937 rng(42);
  for (auto [i, j] : {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}})
    u.set_edge(i, j, {rq(rng), rq(rng), rq(rng)});

  ZElement id{{Rational(1), Rational(1), Rational(1)}};
  CHECK(apply_Z(u, id) == u);

  ZElement z{{Rational(2), Rational(1), Rational(1)}};
  ParameterPoint v = apply_Z(u, z);
  for (int k = 1; k <= 3; ++k) {
    CHECK(v.t(0, 1, k) == 2 * u.t(0, 1, k));
    CHECK(v.t(1, 2, k) == u.t(1, 2, k));
    CHECK(v.t(0, 2, k) == 2 * u.t(0, 2, k));
  }
  CHECK(apply_Z(v, z.inverse()) == u);

  ZElement z2{{Rational(3), Rational(1, 2), Rational(5)}};
  ZElement prod{{Rational(6), Rational(1, 2), Rational(5)}};
  CHECK(apply_Z(apply_Z(u, z), z2) == apply_Z(u, prod));
}

TEST_CASE("build_A_plus shape") {
  CoxeterMatrix m2 = CoxeterMatrix::dihedral(3);
  ParameterPoint u = ones_point(m2);
  Presentation p = build_A_plus(m2, u);
  CHECK(p.gen_names == std::vector<std::string>{"a0_1", "a1_0"});
  // (a-1)^3 must appear among the relations.
  NcPoly cubic = (NcPoly::gen(0) - NcPoly::one()).pow(3);
  bool found = false;
  for (const NcPoly& r : p.relations) found = found || r == cubic;
  CHECK(found);

  // An infinite edge carries no polynomial relation: generators appear but
  // only the inverse/triangle relations reference them.
  CoxeterMatrix m3 = CoxeterMatrix::with_default(3, 2);
  m3.set_order(0, 2, kInfiniteOrder);
  ParameterPoint u3;
  u3.set_edge(0, 1, {Rational(1), Rational(1)});
  u3.set_edge(1, 2, {Rational(1), Rational(1)});
  Presentation p3 = build_A_tilde_plus(m3, to_symmetric(u3));
  CHECK(p3.gen_names.size() == 6);
  for (const NcPoly& r : p3.relations) CHECK(r.degree() <= 3);
}

TEST_CASE("dimension runs at the unit point") {
  CHECK(dim_A_plus(CoxeterMatrix::type_A(2), ones_point(CoxeterMatrix::type_A(2)))
            .dim == Dimension{Dimension::Finite, 3});
  auto a3 = dim_A_plus(CoxeterMatrix::type_A(3), ones_point(CoxeterMatrix::type_A(3)));
  CHECK(a3.dim == Dimension{Dimension::Finite, 12});
  CHECK(a3.flat());
  CHECK(reduce_basis_words(CoxeterMatrix::type_A(3), a3));

  // Rank 1: the trivial algebra.
  auto r1 = dim_A_plus(CoxeterMatrix::with_default(1, 2), ParameterPoint{});
  CHECK(r1.dim == Dimension{Dimension::Finite, 1});
}

TEST_CASE("an off-locus point drops dimension") {
  CoxeterMatrix m = CoxeterMatrix::with_default(3, 2);  // (2,2,2)
  ParameterPoint u = ones_point(m);
  u.set_edge(0, 1, {Rational(1), Rational(2)});
  auto run = dim_A_plus(m, u);
  REQUIRE(run.dim.kind == Dimension::Finite);
  CHECK(run.dim.value < 4);
  CHECK(!run.flat());
  CHECK(!reduce_basis_words(m, run));
}

TEST_CASE("rank-2 algebras are flat for random parameters") {
  std::mt19937 rng(99);
  for (int m12 = 2; m12 <= 5; ++m12) {
    CoxeterMatrix m = CoxeterMatrix::dihedral(m12);
    for (int trial = 0; trial < 3; ++trial) {
      ParameterPoint u;
      std::vector<Rational> roots;
      for (int k = 0; k < m12; ++k) roots.push_back(rq(rng));
      u.set_edge(0, 1, roots);
      auto run = dim_A_plus(m, u);
      CHECK(run.dim == Dimension{Dimension::Finite, m12});
      CHECK(run.flat());
    }
  }
}

TEST_CASE("dimension invariance under Z-action and edge permutation") {
  CoxeterMatrix m = CoxeterMatrix::with_default(3, 2);
  std::mt19937 rng(7);
  ParameterPoint u;
  u.set_edge(0, 1, {rq(rng), rq(rng)});
  u.set_edge(1, 2, {rq(rng), rq(rng)});
  u.set_edge(0, 2, {rq(rng), rq(rng)});
  auto base = dim_A_plus(m, u);
  CHECK(base.dim.value <= base.expected);

  ZElement z{{Rational(3), Rational(1, 4), Rational(7)}};
  CHECK(dim_A_plus(m, apply_Z(u, z)).dim == base.dim);

  ParameterPoint perm = u;
  std::swap(perm.entries[{0, 1}][0], perm.entries[{0, 1}][1]);
  CHECK(dim_A_plus(m, perm).dim == base.dim);
}
