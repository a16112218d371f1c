#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coxflat/coxeter.hpp"
#include "coxflat/ncalg.hpp"
#include "coxflat/rational.hpp"

namespace coxflat {

// Key for an undirected finite edge; always stored with i < j.
using Edge = std::pair<int, int>;
inline Edge edge_key(int i, int j) { return i < j ? Edge{i, j} : Edge{j, i}; }

// The t-chart of a torus point: roots t_{ij,1..m} per finite edge i < j.
// Reversed-edge roots are implied by t_{ji,k} = t_{ij,m-k}^{-1} (index mod m,
// with 0 meaning m).
struct ParameterPoint {
  std::map<Edge, std::vector<Rational>> entries;

  // t_{ijk}, 1 <= k <= m, for either orientation of a stored edge.
  Rational t(int i, int j, int k) const;
  int edge_order(int i, int j) const;
  bool has_edge(int i, int j) const;
  void set_edge(int i, int j, std::vector<Rational> roots);

  bool operator==(const ParameterPoint& o) const { return entries == o.entries; }
};

// The e-chart: e^{(k)}_{ij} for k = 1..m per finite edge i < j, with
// e^{(k)}_{ji} = e^{(m-k)}_{ij} / e^{(m)}_{ij} and e^{(0)} = 1.
struct SymmetricPoint {
  std::map<Edge, std::vector<Rational>> entries;

  Rational e(int i, int j, int k) const;  // 0 <= k <= m, either orientation
  int edge_order(int i, int j) const;
  bool has_edge(int i, int j) const;
  void set_edge(int i, int j, std::vector<Rational> e_values);  // e^(m) != 0

  bool operator==(const SymmetricPoint& o) const { return entries == o.entries; }
};

// An element zeta of the rescaling torus Z; z_{ij} = zeta_i / zeta_j.
struct ZElement {
  std::vector<Rational> zeta;  // one nonzero value per vertex

  ZElement inverse() const;
};

SymmetricPoint to_symmetric(const ParameterPoint& u);
ParameterPoint apply_Z(const ParameterPoint& u, const ZElement& z);

// Validates that u covers exactly the finite edges of M with the right
// multiplicities; throws std::invalid_argument otherwise.
void check_point_shape(const CoxeterMatrix& m, const ParameterPoint& u);
void check_point_shape(const CoxeterMatrix& m, const SymmetricPoint& e);

// Name of the generator a_{ij} as used in built presentations.
std::string pair_gen_name(int i, int j);

// The even-subgroup deformation: generators a_{ij} for all ordered pairs
// i != j; relations a_{ij}a_{ji} = 1, a_{ij}a_{jp}a_{pi} = 1, and for each
// finite edge the degree-m minimal polynomial with coefficients from the
// e-chart.
Presentation build_A_tilde_plus(const CoxeterMatrix& m, const SymmetricPoint& e);
Presentation build_A_plus(const CoxeterMatrix& m, const ParameterPoint& u);

// The full deformation on the s-letter generators: s_i^2 = 1 plus the edge
// polynomials in s_i s_j. Flat iff dimension = |W|.
Presentation build_A_full(const CoxeterMatrix& m, const SymmetricPoint& e);

// Default Groebner degree cap used for dimension runs: 2*(longest element
// length) + 2.
int default_degree_cap(const Coxeter& w);

struct FlatnessRun {
  Dimension dim;
  Dimension dim_upper;  // exact upper bound, valid even for partial runs
  GroebnerResult gb;
  long expected = 0;  // |W_+|
  bool flat() const { return dim.kind == Dimension::Finite && dim.value == expected; }
  // Certified dim < |W_+|: either the completed dimension is short, or the
  // standard words of the partial basis (which always span) already are.
  bool not_flat() const {
    return (dim.kind == Dimension::Finite && dim.value < expected) ||
           (dim_upper.kind == Dimension::Finite && dim_upper.value < expected);
  }
};

// Dimension of A_+(M) at u; requires is_finite(M). cap <= 0 selects the
// default cap; a nonnegative effort_cap bounds the Groebner work (status
// Aborted and dimension Unknown when exceeded).
FlatnessRun dim_A_plus(const CoxeterMatrix& m, const ParameterPoint& u, int cap = 0,
                       long effort_cap = -1);
FlatnessRun dim_A_tilde_plus(const CoxeterMatrix& m, const SymmetricPoint& e, int cap = 0,
                             long effort_cap = -1);

// True iff the normal forms of the |W_+| basis words T_{w(x)} (reduced words
// paired into a_{ij} letters) are linearly independent in the completed
// quotient. Requires a Complete run.
bool reduce_basis_words(const CoxeterMatrix& m, const FlatnessRun& run);

}  // namespace coxflat
