#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "coxflat/coxeter.hpp"

using namespace coxflat;

TEST_CASE("matrix construction and validation") {
  CoxeterMatrix m(3);
  CHECK(!m.all_set());
  m.set_order(0, 1, 3);
  CHECK(m.order(1, 0) == 3);
  CHECK_THROWS_AS(m.order(0, 2), std::logic_error);
  CHECK_THROWS_AS(m.set_order(0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(m.set_order(0, 1, 1), std::invalid_argument);
  m.set_order(0, 2, kInfiniteOrder);
  m.set_order(1, 2, 2);
  CHECK(m.all_set());
  CHECK(!order_is_finite(m.order(0, 2)));
}

TEST_CASE("is_reduced") {
  Coxeter a2(CoxeterMatrix::type_A(2));
  CHECK(!a2.is_reduced({0, 1, 0, 1}));
  CHECK(a2.is_reduced({0, 1, 0}));
  CHECK(a2.is_reduced({}));
}

TEST_CASE("normal_form") {
  Coxeter a2(CoxeterMatrix::type_A(2));
  CHECK(a2.normal_form({1, 0, 1}).normal == Word{0, 1, 0});
  CHECK(a2.normal_form({0, 0}).normal == Word{});
  Coxeter i4a1(CoxeterMatrix::dihedral_times_A1(4));
  CHECK(i4a1.normal_form({2, 0}).normal == Word{0, 2});
}

TEST_CASE("normal_form idempotent and braid-invariant (randomized)") {
  Coxeter b3(CoxeterMatrix::type_B(3));
  std::mt19937 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    Word w;
    int len = static_cast<int>(rng() % 11);
    for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % 3));
    Element e = b3.normal_form(w);
    CHECK(b3.normal_form(e.normal) == e);
    CHECK(b3.is_reduced(e.normal));
    // Multiplying back letter-by-letter represents the same element.
    Element acc;
    for (int s : w) acc = b3.multiply(acc, b3.normal_form({s}));
    CHECK(acc == e);
  }
}

TEST_CASE("multiply") {
  Coxeter a2(CoxeterMatrix::type_A(2));
  CHECK(a2.multiply(a2.element({0}), a2.element({0})).is_identity());
  CHECK(a2.multiply(a2.element({0, 1}), a2.element({0, 1})).normal == Word{1, 0});
  Element y = a2.element({0, 1, 0});
  CHECK(a2.multiply(Element{}, y) == y);
  // Associativity spot-check.
  Element x = a2.element({1}), z = a2.element({0, 1});
  CHECK(a2.multiply(a2.multiply(x, y), z) == a2.multiply(x, a2.multiply(y, z)));
}

TEST_CASE("enumerate finite groups") {
  Coxeter a1a1(CoxeterMatrix::with_default(2, 2));
  auto e = a1a1.enumerate(Coxeter::kAll);
  CHECK(e.complete);
  CHECK(e.growth.counts == std::vector<long>{1, 2, 1});
  CHECK(e.elements.size() == 4);

  Coxeter a3(CoxeterMatrix::type_A(3));
  auto ea3 = a3.enumerate(Coxeter::kAll);
  CHECK(ea3.growth.counts == std::vector<long>{1, 3, 5, 6, 5, 3, 1});
  CHECK(ea3.elements.size() == 24);

  // Growth symmetry b_n = b_{L-n} for finite groups.
  Coxeter b3(CoxeterMatrix::type_B(3));
  auto eb3 = b3.enumerate(Coxeter::kAll);
  CHECK(eb3.elements.size() == 48);
  auto rev = eb3.growth.counts;
  std::reverse(rev.begin(), rev.end());
  CHECK(rev == eb3.growth.counts);
}

TEST_CASE("enumerate affine group by level") {
  Coxeter aff(CoxeterMatrix::affine_A2());
  CHECK_THROWS_AS(aff.enumerate(Coxeter::kAll), std::domain_error);
  auto e = aff.enumerate(2);
  CHECK(!e.complete);
  CHECK(e.growth.counts.size() == 3);
  CHECK(e.growth.counts[0] == 1);
  CHECK(e.growth.counts[1] == 3);
  // Length-2 elements: 3*3 products minus 3 identities, minus braid
  // coincidences (none at length 2 for distinct letters) = 6.
  CHECK(e.growth.counts[2] == 6);
}

TEST_CASE("even elements") {
  Coxeter a3(CoxeterMatrix::type_A(3));
  CHECK(a3.even_elements(Coxeter::kAll).size() == 12);
  Coxeter i5(CoxeterMatrix::dihedral(5));
  CHECK(i5.even_elements(Coxeter::kAll).size() == 5);
  Coxeter a1a1(CoxeterMatrix::with_default(2, 2));
  CHECK(a1a1.even_elements(Coxeter::kAll).size() == 2);
}

TEST_CASE("triangle classification") {
  CHECK(classify_triangle(2, 3, 5).kind == TriangleClass::E235);
  CHECK(classify_triangle(5, 3, 2).kind == TriangleClass::E235);
  CHECK(classify_triangle(2, 3, 6).kind == TriangleClass::Infinite);
  CHECK(classify_triangle(2, 2, 7).kind == TriangleClass::Dihedral);
  CHECK(classify_triangle(2, 2, 7).r == 7);
  CHECK(classify_triangle(2, 3, 4).kind == TriangleClass::E234);
  CHECK(classify_triangle(2, 3, 3).kind == TriangleClass::E233);
  CHECK(classify_triangle(3, 3, 3).kind == TriangleClass::Infinite);
  CHECK(classify_triangle(2, 3, kInfiniteOrder).kind == TriangleClass::Infinite);

  CoxeterMatrix m = CoxeterMatrix::triangle(2, 3, 5);
  CHECK(triangle_type(m, {0, 1, 2}).kind == TriangleClass::E235);
  CHECK_THROWS_AS(triangle_type(m, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("finite rank-3 orders match enumeration") {
  CHECK(finite_rank3_order(2, 3, 5) == 120);
  CHECK(finite_rank3_order(2, 3, 4) == 48);
  for (int n = 2; n <= 6; ++n) CHECK(finite_rank3_order(2, 2, n) == 4 * n);
  CHECK_THROWS_AS(finite_rank3_order(2, 3, 6), std::domain_error);

  auto order_by_bfs = [](int p, int q, int r) {
    Coxeter w(CoxeterMatrix::triangle(p, q, r));
    return static_cast<long>(w.enumerate(Coxeter::kAll).elements.size());
  };
  CHECK(order_by_bfs(2, 3, 3) == finite_rank3_order(2, 3, 3));
  CHECK(order_by_bfs(2, 3, 4) == finite_rank3_order(2, 3, 4));
  CHECK(order_by_bfs(2, 3, 5) == finite_rank3_order(2, 3, 5));
  for (int n = 2; n <= 6; ++n)
    CHECK(order_by_bfs(2, 2, n) == finite_rank3_order(2, 2, n));
}

TEST_CASE("parabolic indices") {
  CoxeterMatrix h3 = CoxeterMatrix::triangle(2, 3, 5);  // m01=2, m12=3, m02=5
  CHECK(parabolic_index(h3, {0, 1, 2}, {0, 1}) == 30);
  CHECK(parabolic_index(h3, {0, 1, 2}, {1, 2}) == 20);
  CHECK(parabolic_index(h3, {0, 1, 2}, {0, 2}) == 12);
  CoxeterMatrix b3 = CoxeterMatrix::triangle(2, 3, 4);
  CHECK(parabolic_index(b3, {0, 1, 2}, {1, 2}) == 8);
  CoxeterMatrix d2n = CoxeterMatrix::triangle(2, 2, 7);
  CHECK(parabolic_index(d2n, {0, 1, 2}, {0, 2}) == 2);
  CoxeterMatrix aff = CoxeterMatrix::affine_A2();
  CHECK_THROWS_AS(parabolic_index(aff, {0, 1, 2}, {0, 1}), std::domain_error);
}

TEST_CASE("finite-type recognition") {
  CHECK(is_finite(CoxeterMatrix::type_H(3)));
  CHECK(is_finite(CoxeterMatrix::type_H(4)));
  CHECK(!is_finite(CoxeterMatrix::affine_A2()));
  CHECK(is_finite(CoxeterMatrix::with_default(1, 2)));
  CHECK(is_finite(CoxeterMatrix::type_A(5)));
  CHECK(is_finite(CoxeterMatrix::type_B(4)));
  CHECK(is_finite(CoxeterMatrix::type_D(5)));
  CHECK(is_finite(CoxeterMatrix::type_E(6)));
  CHECK(is_finite(CoxeterMatrix::type_E(7)));
  CHECK(is_finite(CoxeterMatrix::type_E(8)));
  CHECK(is_finite(CoxeterMatrix::type_F4()));
  CHECK(is_finite(CoxeterMatrix::dihedral(100)));
  CHECK(is_finite(CoxeterMatrix::dihedral_times_A1(7)));
  CHECK(!is_finite(CoxeterMatrix::triangle(3, 3, 3)));
  CHECK(!is_finite(CoxeterMatrix::triangle(2, 4, 4)));
  CHECK(!is_finite(CoxeterMatrix::triangle(2, 3, kInfiniteOrder)));

  // E9 = affine E8 must be rejected.
  CoxeterMatrix e9 = CoxeterMatrix::with_default(9, 2);
  for (int i = 0; i + 1 < 8; ++i) e9.set_order(i, i + 1, 3);
  e9.set_order(2, 8, 3);  // branch node mirroring the E-series shape
  CHECK(!is_finite(e9));

  // A loop of any labels is infinite.
  CoxeterMatrix loop = CoxeterMatrix::with_default(4, 2);
  loop.set_order(0, 1, 3);
  loop.set_order(1, 2, 3);
  loop.set_order(2, 3, 3);
  loop.set_order(0, 3, 3);
  CHECK(!is_finite(loop));
}

TEST_CASE("element signs and parity") {
  Element e;
  CHECK(e.sign() == 1);
  Element odd{Word{0, 1, 0}};
  CHECK(odd.sign() == -1);
  CHECK(!odd.is_even());
}
