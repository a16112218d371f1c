#pragma once

#include <map>
#include <vector>

#include "coxflat/coxeter.hpp"
#include "coxflat/ncalg.hpp"
#include "coxflat/rational.hpp"
#include "coxflat/rewrite.hpp"

namespace coxflat {

// The length-graded algebra on the group elements where T_x T_y equals
// (+-1) T_{xy} when lengths add and 0 otherwise. The sign comes from the
// braid moves needed to reduce the concatenation: each move on an edge of
// order m contributes (-1)^{m+1}.
class SignedWordAlgebra {
 public:
  // Linear combinations of basis words, keyed by the normal form.
  using Sum = std::map<Word, Rational>;

  // max_length = Coxeter::kAll keeps the whole group (finite matrices only).
  SignedWordAlgebra(CoxeterMatrix m, int max_length);

  const CoxeterMatrix& matrix() const { return m_; }
  const std::vector<Element>& basis() const { return basis_; }
  int max_length() const { return max_length_; }

  // Sign of T_x T_y: +-1 when l(xy) = l(x) + l(y), 0 otherwise.
  Rational product_sign(const Element& x, const Element& y) const;

  Sum generator(int i) const;  // T_{s_i}
  // Bilinear product; terms past max_length are dropped (graded truncation).
  Sum multiply(const Sum& a, const Sum& b) const;

 private:
  CoxeterMatrix m_;
  Coxeter group_;
  ScalarRewriter rewriter_;
  std::vector<Element> basis_;
  int max_length_;
};

SignedWordAlgebra build_abar1(const CoxeterMatrix& m, int max_length = Coxeter::kAll);

// The nilpotent additive presentation on the generators g_j (j != base),
// standing for the degree-1 pairs (base, j); a general pair (i, j) is
// g_j - g_i. Relations: (g_j - g_i)^{m_ij} = 0 for every finite order,
// all homogeneous.
struct AdditivePresentation {
  int base = 0;
  Presentation pres;

  int gen_of(int vertex) const;  // index of g_vertex; throws on the base
  NcPoly pair_poly(int i, int j) const;  // the degree-1 element for (i, j)
};

AdditivePresentation build_A0plus(const CoxeterMatrix& m, int base = 0);

// Exact graded dimensions, degree 0..n.
std::vector<long> hilbert_A0plus(const CoxeterMatrix& m, int n, int base = 0);

// One spanning word per group element x with l(s_base x) > l(x): the product
// of the degree-1 pair elements along the normal form of x (1 for x = 1).
struct SpanningWord {
  Element x;
  NcPoly poly;  // expanded in the generators of build_A0plus
};
std::vector<SpanningWord> spanning_b_words(const CoxeterMatrix& m, int max_length,
                                           int base = 0);

// True iff every defining relation maps to 0 under g_j -> T_{s_base} - T_{s_j},
// i.e. (T_{s_i} - T_{s_j})^{m_ij} = 0 in the signed word algebra. Throws
// InconclusiveError when max_length is below the largest finite order.
bool phi0_check(const CoxeterMatrix& m, int max_length, int base = 0);

// B = the image of the additive algebra inside the full signed word algebra.
struct BDecomposition {
  long dim_b = 0;
  bool direct_sum = false;  // rank of B + s_base B equals |W|
};
BDecomposition b_decomposition(const CoxeterMatrix& m, int base = 0);

// Both finite-order presentations of the group-algebra deformation at the
// all-ones point: squares to 1 with either (s_i - s_j)^{m} = 0 or
// (s_i s_j - 1)^{m} = 0. True iff both have dimension |W|.
bool lemma_addmult_mult(const CoxeterMatrix& m);

// The two-sided extension by an order-2 generator negating every g_j.
Presentation build_A0(const CoxeterMatrix& m, int base = 0);

// Exploratory deformation: (g_j - g_i - tau_1)...(g_j - g_i - tau_m) = 0 with
// user-supplied roots per edge (key (i, j), i < j; missing edge means all 0).
Presentation tau_presentation(const CoxeterMatrix& m,
                              const std::map<Edge, std::vector<Rational>>& tau,
                              int base = 0);

}  // namespace coxflat
