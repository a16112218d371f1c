#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxflat/hecke.hpp"
#include "coxflat/laurent.hpp"

using namespace coxflat;

namespace {

HeckeParams zero_f_params(const CoxeterMatrix& m, Rational u, Rational v) {
  HeckeParams p;
  p.u.assign(static_cast<std::size_t>(m.rank()), u);
  p.v.assign(static_cast<std::size_t>(m.rank()), v);
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      int mij = m.order(i, j);
      if (order_is_finite(mij) && hecke_f_count(mij) > 0)
        p.f[{i, j}] = std::vector<Rational>(static_cast<std::size_t>(hecke_f_count(mij)),
                                            Rational(0));
    }
  return p;
}

}  // namespace

TEST_CASE("braid polynomials") {
  CHECK(braid_poly(0, 0, 1).is_zero());
  CHECK(braid_poly(1, 0, 1) == NcPoly::gen(0) - NcPoly::gen(1));
  CHECK(braid_poly(2, 0, 1) ==
        NcPoly::word(FreeWord({0, 1})) - NcPoly::word(FreeWord({1, 0})));
  CHECK(braid_poly(3, 0, 1) ==
        NcPoly::word(FreeWord({0, 1, 0})) - NcPoly::word(FreeWord({1, 0, 1})));
  CHECK(braid_poly(4, 0, 1) ==
        NcPoly::word(FreeWord({0, 1, 0, 1})) - NcPoly::word(FreeWord({1, 0, 1, 0})));
}

TEST_CASE("presentation shape") {
  CoxeterMatrix a2 = CoxeterMatrix::type_A(2);
  HeckeParams p = zero_f_params(a2, frac(1, 2), Rational(2));
  Presentation pres = build_hecke(a2, p);
  REQUIRE(pres.relations.size() == 3);
  // T1^2 - u T1 + v, same for T2, then the plain braid relation.
  CHECK(pres.relations[0] == NcPoly::word(FreeWord({0, 0})) -
                                 NcPoly::gen(0).scaled(frac(1, 2)) +
                                 NcPoly::constant(2));
  CHECK(pres.relations[2] == braid_poly(3, 0, 1));

  // An order-4 edge carries B4 + f^(1) B2.
  CoxeterMatrix i4 = CoxeterMatrix::dihedral(4);
  HeckeParams q = zero_f_params(i4, Rational(1), Rational(1));
  q.u[1] = 2;  // even edge allows distinct quadratic parameters
  q.f[{0, 1}] = {frac(3, 5)};
  Presentation hp = build_hecke(i4, q);
  CHECK(hp.relations[2] == braid_poly(4, 0, 1) + braid_poly(2, 0, 1).scaled(frac(3, 5)));
}

TEST_CASE("admissibility constraints") {
  CoxeterMatrix a2 = CoxeterMatrix::type_A(2);
  HeckeParams p = zero_f_params(a2, Rational(1), Rational(1));
  p.u[1] = 2;  // odd edge with u1 != u2
  CHECK_THROWS_WITH_AS(static_cast<void>(build_hecke(a2, p)),
                       doctest::Contains("condition (1)"), std::invalid_argument);

  CoxeterMatrix a3 = CoxeterMatrix::type_A(3);
  HeckeParams q = zero_f_params(a3, Rational(1), Rational(1));
  q.f[{0, 1}] = {Rational(1)};
  q.f[{1, 2}] = {Rational(2)};  // the two order-3 edges of a (3,3,2) triple
  CHECK_THROWS_WITH_AS(static_cast<void>(build_hecke(a3, q)),
                       doctest::Contains("condition (2)"), std::invalid_argument);

  q.f[{1, 2}] = {Rational(1)};
  CHECK_NOTHROW(static_cast<void>(build_hecke(a3, q)));

  HeckeParams s = zero_f_params(a3, Rational(1), Rational(1));
  s.f[{0, 1}] = {Rational(1), Rational(2)};  // too many levels for m = 3
  CHECK_THROWS_AS(static_cast<void>(build_hecke(a3, s)), std::invalid_argument);
}

TEST_CASE("random draws are admissible") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    for (CoxeterMatrix m : {CoxeterMatrix::type_A(3), CoxeterMatrix::type_B(3),
                            CoxeterMatrix::dihedral_times_A1(5)}) {
      HeckeParams p = random_hecke_params(m, seed);
      CHECK_NOTHROW(validate_hecke_params(m, p));
    }
  }
}

TEST_CASE("ordinary Hecke specializations are free") {
  // f = 0 with random quadratic parameters.
  for (unsigned seed = 1; seed <= 10; ++seed) {
    CoxeterMatrix a2 = CoxeterMatrix::type_A(2);
    HeckeParams p = random_hecke_params(a2, seed);
    p.f.clear();
    CHECK(verify_freeness(a2, p));
  }
  for (unsigned seed = 1; seed <= 3; ++seed) {
    CoxeterMatrix a3 = CoxeterMatrix::type_A(3);
    HeckeParams p = random_hecke_params(a3, seed);
    for (auto& [e, vals] : p.f) vals.assign(vals.size(), Rational(0));
    HeckeRun run = hecke_freeness_run(a3, p);
    CHECK(run.dim.value == 24);
    CHECK(run.free_module());
  }
  CoxeterMatrix b3 = CoxeterMatrix::type_B(3);
  HeckeParams p = random_hecke_params(b3, 7);
  for (auto& [e, vals] : p.f) vals.assign(vals.size(), Rational(0));
  HeckeRun run = hecke_freeness_run(b3, p);
  CHECK(run.dim.value == 48);
  CHECK(run.free_module());
}

TEST_CASE("freeness holds for random admissible draws") {
  for (CoxeterMatrix m : {CoxeterMatrix::type_A(2), CoxeterMatrix::type_A(3),
                          CoxeterMatrix::type_B(3), CoxeterMatrix::dihedral_times_A1(5)}) {
    for (unsigned seed = 21; seed <= 25; ++seed)
      CHECK(verify_freeness(m, random_hecke_params(m, seed)));
  }
}

TEST_CASE("violating condition (2) breaks freeness") {
  CoxeterMatrix a3 = CoxeterMatrix::type_A(3);
  int broken = 0;
  for (unsigned seed = 1; seed <= 3; ++seed) {
    HeckeParams p = random_hecke_params(a3, seed);
    p.f[{0, 1}] = {p.f_coef(1, 2, 1) + 1};
    CHECK_THROWS_AS(validate_hecke_params(a3, p), std::invalid_argument);
    HeckeRun run = hecke_freeness_run(a3, p);
    if (run.dim.kind == Dimension::Finite && run.dim.value < 24) ++broken;
  }
  CHECK(broken == 3);
}

TEST_CASE("edge conditions and the distinguished point") {
  for (CoxeterMatrix m : {CoxeterMatrix::type_A(3), CoxeterMatrix::type_B(3),
                          CoxeterMatrix::dihedral(5)}) {
    SymmetricPoint d = hecke_distinguished_point(m);
    CHECK(hecke_edge_conditions(m, d));
    // The group-algebra chart (all roots 1) is also invariant.
    SymmetricPoint ones;
    for (int i = 0; i < m.rank(); ++i)
      for (int j = i + 1; j < m.rank(); ++j)
        if (order_is_finite(m.order(i, j))) {
          std::vector<Rational> e;
          for (int k = 1; k <= m.order(i, j); ++k)
            e.push_back(elementary_symmetric(
                std::vector<Rational>(static_cast<std::size_t>(m.order(i, j)), Rational(1)),
                k));
          ones.set_edge(i, j, std::move(e));
        }
    CHECK(hecke_edge_conditions(m, ones));
    // Breaking one middle coefficient leaves the invariant slice.
    SymmetricPoint bad = d;
    std::vector<Rational> vals(static_cast<std::size_t>(m.order(0, 1)), Rational(0));
    vals.front() = 1;
    vals.back() = m.order(0, 1) % 2 ? 1 : -1;
    if (m.order(0, 1) > 2) {
      bad.set_edge(0, 1, vals);
      CHECK_FALSE(hecke_edge_conditions(m, bad));
    }
  }
  // The distinguished chart stays flat on a single edge: z^m = (-1)^{m-1}.
  CoxeterMatrix i3 = CoxeterMatrix::dihedral(3);
  FlatnessRun run = dim_A_tilde_plus(i3, hecke_distinguished_point(i3));
  CHECK(run.flat());
  CHECK(run.expected == 3);
}
