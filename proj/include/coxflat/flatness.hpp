#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "coxflat/coxeter.hpp"
#include "coxflat/deform.hpp"
#include "coxflat/laurent.hpp"
#include "coxflat/rewrite.hpp"

namespace coxflat {

// A monomial identity between symbol powers, e.g. alpha2^6 beta3^4 gamma3^4
// = 1. Symbols are the chart coefficients alpha1..2, beta1..q, gamma1..r of
// a finite rank-3 type.
struct TildeEquation {
  std::string id;
  std::map<std::string, int> lhs, rhs;  // exponents; missing symbol = 0
};

// Symbol names for a type, in chart order.
std::vector<std::string> tilde_symbols(const TriangleClass& type);

// The defining equations of the rank-3 flatness locus, in source order.
// Throws std::domain_error for an infinite type.
std::vector<TildeEquation> tilde_equations(const TriangleClass& type);

// Per-side total degree of the middle coefficients (everything except
// alpha2, beta_q, gamma_r); the locus equations all have degree <= 1.
int middle_degree(const TriangleClass& type, const std::map<std::string, int>& side);

// Vertex labeling (i, j, k) of a triangle so that m_ij = p, m_jk = q,
// m_ik = r; ties broken toward the lexicographically least edge.
struct TriangleLabeling {
  int i, j, k;
  TriangleClass type;
};
TriangleLabeling tilde_labeling(const CoxeterMatrix& m, std::array<int, 3> delta);

// Chart values alpha/beta/gamma at a point, in the labeled orientation
// (gamma is the chart of the reversed long edge, i.e. of a_{ki}).
std::map<std::string, Rational> tilde_chart(const CoxeterMatrix& m,
                                            std::array<int, 3> delta,
                                            const SymmetricPoint& e);

struct TildeVerdict {
  bool member = false;
  TriangleClass type;
  std::vector<std::string> failed;  // ids of violated equations
};

TildeVerdict check_tilde_membership(const CoxeterMatrix& m, std::array<int, 3> delta,
                                    const SymmetricPoint& e);

struct TriangleReport {
  std::array<int, 3> delta;
  bool finite = false;  // infinite triangles pass vacuously
  TildeVerdict verdict;
};

struct GlobalVerdict {
  bool member = false;
  std::vector<TriangleReport> triangles;
};

GlobalVerdict check_global_membership(const CoxeterMatrix& m, const SymmetricPoint& e);
GlobalVerdict check_global_membership(const CoxeterMatrix& m, const ParameterPoint& u);

// A flat torus inside the rank-3 parameter space, cut out by monomial
// t-chart equations (product of powers = 1). Variables are named
// t12_k, t23_k, t13_k over the canonical triangle(p, q, r) matrix.
struct LocusComponent {
  enum Kind { Group, Spin } kind = Group;
  TriangleClass type;
  std::vector<std::string> vars;
  std::vector<std::map<std::string, int>> equations;
};

// The flat components provided for the type. (2,2,n)-odd has no separate
// spin component.
std::vector<LocusComponent> lemma_components(const TriangleClass& type);

// A multiplicative basis of the component: one Laurent monomial per
// variable, over free parameters s1..sd; every equation holds identically.
std::vector<LaurentPoly> component_parametrization(const LocusComponent& c);

// Random positive rational point on the component.
ParameterPoint sample_point(const LocusComponent& c, unsigned seed);

// Exact check that the parametrized charts satisfy every tilde equation as
// Laurent identities.
bool symbolic_containment(const LocusComponent& c);

// Random rational triangle point; used with membership rejection to draw
// off-locus points.
ParameterPoint random_triangle_point(const TriangleClass& type, unsigned seed);

// Membership in Theta: the parabolic-index power product is 1 on every
// finite triangle.
bool theta_membership(const CoxeterMatrix& m, const ThetaPoint& t);

// The e-chart with minimal polynomial z^m + (-1)^m t_{ij} per edge.
SymmetricPoint theta_to_symmetric(const CoxeterMatrix& m, const ThetaPoint& t);

class TwistedAlgebra {
 public:
  TwistedAlgebra(CoxeterMatrix m, ThetaPoint t);

  const CoxeterMatrix& matrix() const { return m_; }
  const ThetaPoint& theta() const { return t_; }
  const std::vector<Element>& basis() const { return basis_; }

  // [x][y] = psi(x, y) [xy].
  Rational psi(const Element& x, const Element& y) const;
  Element product_element(const Element& x, const Element& y) const;

 private:
  CoxeterMatrix m_;
  ThetaPoint t_;
  Coxeter group_;
  ScalarRewriter rewriter_;
  std::vector<Element> basis_;
};

// Requires theta_membership; throws std::invalid_argument otherwise.
TwistedAlgebra build_twisted_algebra(const CoxeterMatrix& m, const ThetaPoint& t);

// Recovers the Theta coordinates from m-th powers of the base-pointed
// generators; inverse of build up to the Z-action.
ThetaPoint eta(const TwistedAlgebra& algebra, int base = 0);

// True when b = Z-action of a: b_ij = a_ij (zeta_i/zeta_j)^{m_ij} for some
// rational zeta.
bool same_Z_orbit(const CoxeterMatrix& m, const ThetaPoint& a, const ThetaPoint& b);

// Floating-point Clifford-algebra check of (e_i e_j)^{m_ij} = (-1)^{m_ij+1}
// for every edge; rank <= 3, all orders finite.
bool verify_spin_numeric(const CoxeterMatrix& m, double tolerance = 1e-9);

}  // namespace coxflat
