#pragma once

#include <map>
#include <vector>

#include "coxflat/coxeter.hpp"
#include "coxflat/deform.hpp"
#include "coxflat/ncalg.hpp"
#include "coxflat/rational.hpp"

namespace coxflat {

// Number of deformed-braid coefficients on an edge of order m: the levels l
// with 1 <= l < m/2.
inline int hecke_f_count(int m) { return (m - 1) / 2; }

// Coefficients of the generalized Hecke presentation: a quadratic pair
// (u_i, v_i) per vertex and f^{(l)} per finite edge and level.
struct HeckeParams {
  std::vector<Rational> u, v;              // one entry per vertex
  std::map<Edge, std::vector<Rational>> f;  // values f^{(1)}, f^{(2)}, ...

  // f^{(l)}; a missing edge entry means all levels are 0.
  Rational f_coef(int i, int j, int l) const;
};

// Shape check plus the two admissibility constraints: (1) an odd edge forces
// u_i = u_j and v_i = v_j; (2) order-(3,3,2) triangles force equal f^{(1)} on
// the two order-3 edges. Throws std::invalid_argument naming the violation.
void validate_hecke_params(const CoxeterMatrix& m, const HeckeParams& p);

// B_0 = 0, B_{2k}(x,y) = (xy)^k - (yx)^k, B_{2k+1}(x,y) = (xy)^k x - (yx)^k y
// on generator indices x, y.
NcPoly braid_poly(int k, int x, int y);

// T_i^2 - u_i T_i + v_i per vertex and, per finite edge,
// B_m + f^{(1)} B_{m-2} + f^{(2)} B_{m-4} + ... Validated / raw variants.
Presentation build_hecke(const CoxeterMatrix& m, const HeckeParams& p);
Presentation build_hecke_unchecked(const CoxeterMatrix& m, const HeckeParams& p);

struct HeckeRun {
  Dimension dim;
  GroebnerResult gb;
  long expected = 0;  // |W|
  bool basis_free = false;

  bool free_module() const {
    return dim.kind == Dimension::Finite && dim.value == expected && basis_free;
  }
};

// Dimension run plus linear independence of the |W| words T_w (ShortLex
// reduced words). cap <= 0 selects the default degree cap.
HeckeRun hecke_freeness_run(const CoxeterMatrix& m, const HeckeParams& p, int cap = 0);

// True iff the specialization is a free module of rank |W|. Throws
// InconclusiveError when the Groebner run is truncated.
bool verify_freeness(const CoxeterMatrix& m, const HeckeParams& p, int cap = 0);

// Seeded random admissible parameters (constraints (1) and (2) enforced).
HeckeParams random_hecke_params(const CoxeterMatrix& m, unsigned seed);

// The edge conditions carving the Z_2-invariant slice of the torus:
// (e^{(m)})^2 = 1 and e^{(k)} = e^{(m)} e^{(m-k)} on every finite edge.
bool hecke_edge_conditions(const CoxeterMatrix& m, const SymmetricPoint& e);

// The distinguished invariant point: e^{(m)} = (-1)^{m-1}, all middle
// coefficients 0.
SymmetricPoint hecke_distinguished_point(const CoxeterMatrix& m);

}  // namespace coxflat
