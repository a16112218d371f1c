#include "coxflat/additive.hpp"

#include <algorithm>
#include <stdexcept>

#include "coxflat/deform.hpp"

namespace coxflat {

SignedWordAlgebra::SignedWordAlgebra(CoxeterMatrix m, int max_length)
    : m_(m),
      group_(m_),
      rewriter_(m_, ThetaPoint{}, ScalarRewriter::SquareRule::Annihilate),
      max_length_(max_length) {
  basis_ = group_.enumerate(max_length).elements;
}

Rational SignedWordAlgebra::product_sign(const Element& x, const Element& y) const {
  Word w = x.normal;
  w.insert(w.end(), y.normal.begin(), y.normal.end());
  return rewriter_.rewrite(w).scalar;
}

SignedWordAlgebra::Sum SignedWordAlgebra::generator(int i) const {
  if (i < 0 || i >= m_.rank()) throw std::out_of_range("generator index out of range");
  return {{Word{i}, Rational(1)}};
}

SignedWordAlgebra::Sum SignedWordAlgebra::multiply(const Sum& a, const Sum& b) const {
  Sum out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      ScalarRewriter::Result r = rewriter_.rewrite(w);
      if (r.scalar == 0) continue;
      if (max_length_ != Coxeter::kAll &&
          r.normal.size() > static_cast<std::size_t>(max_length_))
        continue;
      Rational& c = out[r.normal];
      c += ca * cb * r.scalar;
      if (c == 0) out.erase(r.normal);
    }
  return out;
}

SignedWordAlgebra build_abar1(const CoxeterMatrix& m, int max_length) {
  return SignedWordAlgebra(m, max_length);
}

int AdditivePresentation::gen_of(int vertex) const {
  if (vertex == base) throw std::invalid_argument("the base vertex has no generator");
  return vertex < base ? vertex : vertex - 1;
}

NcPoly AdditivePresentation::pair_poly(int i, int j) const {
  if (i == j) throw std::invalid_argument("pair endpoints must differ");
  if (i == base) return NcPoly::gen(gen_of(j));
  if (j == base) return -NcPoly::gen(gen_of(i));
  return NcPoly::gen(gen_of(j)) - NcPoly::gen(gen_of(i));
}

AdditivePresentation build_A0plus(const CoxeterMatrix& m, int base) {
  if (base < 0 || base >= m.rank()) throw std::out_of_range("base vertex out of range");
  AdditivePresentation ap;
  ap.base = base;
  for (int j = 0; j < m.rank(); ++j)
    if (j != base) ap.pres.gen_names.push_back(pair_gen_name(base, j));
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      int mij = m.order(i, j);
      if (!order_is_finite(mij)) continue;
      ap.pres.relations.push_back(ap.pair_poly(i, j).pow(mij));
    }
  return ap;
}

std::vector<long> hilbert_A0plus(const CoxeterMatrix& m, int n, int base) {
  Presentation pres = build_A0plus(m, base).pres;
  // A homogeneous relation above the truncation degree cannot affect it.
  std::erase_if(pres.relations, [n](const NcPoly& r) { return r.degree() > n; });
  return hilbert_function(pres, n);
}

std::vector<SpanningWord> spanning_b_words(const CoxeterMatrix& m, int max_length,
                                           int base) {
  AdditivePresentation ap = build_A0plus(m, base);
  Coxeter group(m);
  Element s_base = group.element({base});
  std::vector<SpanningWord> out;
  for (const Element& x : group.enumerate(max_length).elements) {
    if (group.multiply(s_base, x).length() <= x.length()) continue;
    NcPoly poly = NcPoly::one();
    int prev = base;
    for (int letter : x.normal) {
      poly = poly * ap.pair_poly(prev, letter);
      prev = letter;
    }
    out.push_back({x, std::move(poly)});
  }
  return out;
}

bool phi0_check(const CoxeterMatrix& m, int max_length, int base) {
  if (base < 0 || base >= m.rank()) throw std::out_of_range("base vertex out of range");
  int max_order = 2;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (order_is_finite(m.order(i, j))) max_order = std::max(max_order, m.order(i, j));
  if (max_length != Coxeter::kAll && max_length < max_order)
    throw InconclusiveError("truncation below the largest edge order");
  SignedWordAlgebra alg(m, max_length);
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      int mij = m.order(i, j);
      if (!order_is_finite(mij)) continue;
      SignedWordAlgebra::Sum diff = alg.generator(i);
      for (const auto& [w, c] : alg.generator(j)) diff[w] -= c;
      SignedWordAlgebra::Sum power = {{Word{}, Rational(1)}};
      for (int q = 0; q < mij; ++q) power = alg.multiply(power, diff);
      if (!power.empty()) return false;
    }
  return true;
}

namespace {

// Gaussian elimination over sparse vectors keyed by basis word; returns the
// number of vectors that enlarged the span.
long span_rank(std::map<Word, SignedWordAlgebra::Sum>& pivots,
               std::vector<SignedWordAlgebra::Sum> vecs) {
  long rank = 0;
  for (SignedWordAlgebra::Sum& v : vecs) {
    while (!v.empty()) {
      auto lead = std::prev(v.end());
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) break;
      Rational factor = lead->second / std::prev(it->second.end())->second;
      for (const auto& [w, c] : it->second) {
        Rational& e = v[w];
        e -= factor * c;
        if (e == 0) v.erase(w);
      }
    }
    if (v.empty()) continue;
    pivots[std::prev(v.end())->first] = std::move(v);
    ++rank;
  }
  return rank;
}

}  // namespace

BDecomposition b_decomposition(const CoxeterMatrix& m, int base) {
  if (!is_finite(m)) throw std::domain_error("decomposition requires a finite group");
  SignedWordAlgebra alg(m, Coxeter::kAll);
  Coxeter group(m);
  Element s_base = group.element({base});

  std::vector<SignedWordAlgebra::Sum> b_vecs;
  for (const Element& x : alg.basis()) {
    if (group.multiply(s_base, x).length() <= x.length()) continue;
    SignedWordAlgebra::Sum v = {{Word{}, Rational(1)}};
    int prev = base;
    for (int letter : x.normal) {
      SignedWordAlgebra::Sum diff = alg.generator(prev);
      for (const auto& [w, c] : alg.generator(letter)) diff[w] -= c;
      v = alg.multiply(v, diff);
      prev = letter;
    }
    b_vecs.push_back(std::move(v));
  }

  std::vector<SignedWordAlgebra::Sum> shifted;
  for (const SignedWordAlgebra::Sum& v : b_vecs)
    shifted.push_back(alg.multiply(alg.generator(base), v));

  BDecomposition out;
  std::map<Word, SignedWordAlgebra::Sum> pivots;
  out.dim_b = span_rank(pivots, b_vecs);
  long total = out.dim_b + span_rank(pivots, shifted);
  out.direct_sum = total == static_cast<long>(alg.basis().size());
  return out;
}

bool lemma_addmult_mult(const CoxeterMatrix& m) {
  if (!is_finite(m)) throw std::domain_error("comparison requires a finite group");
  Coxeter group(m);
  long order = 0;
  for (long b : group.enumerate(Coxeter::kAll).growth.counts) order += b;

  Presentation difference, product;
  for (int i = 0; i < m.rank(); ++i) {
    std::string name = "s" + std::to_string(i + 1);
    difference.gen_names.push_back(name);
    product.gen_names.push_back(name);
    NcPoly sq = NcPoly::word(FreeWord(2, static_cast<char>(i))) - NcPoly::one();
    difference.relations.push_back(sq);
    product.relations.push_back(sq);
  }
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      int mij = m.order(i, j);
      if (!order_is_finite(mij)) continue;
      difference.relations.push_back((NcPoly::gen(i) - NcPoly::gen(j)).pow(mij));
      product.relations.push_back(
          (NcPoly::gen(i) * NcPoly::gen(j) - NcPoly::one()).pow(mij));
    }

  int max_order = 2;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (order_is_finite(m.order(i, j))) max_order = std::max(max_order, m.order(i, j));
  // The product-power relations have degree 2m and complete around twice that.
  int cap = std::max(default_degree_cap(group), 4 * max_order + 2);
  for (const Presentation* p : {&difference, &product}) {
    GroebnerResult gb = buchberger(*p, cap);
    Dimension d = dimension(gb, p->num_gens());
    if (d.kind == Dimension::Unknown)
      throw InconclusiveError("presentation comparison undecided at the degree cap");
    if (d.kind != Dimension::Finite || d.value != order) return false;
  }
  return true;
}

Presentation build_A0(const CoxeterMatrix& m, int base) {
  AdditivePresentation ap = build_A0plus(m, base);
  Presentation pres = ap.pres;
  int sigma = pres.num_gens();
  pres.gen_names.push_back("sg");
  pres.relations.push_back(NcPoly::word(FreeWord(2, static_cast<char>(sigma))) -
                           NcPoly::one());
  for (int g = 0; g < sigma; ++g)
    pres.relations.push_back(NcPoly::gen(sigma) * NcPoly::gen(g) +
                             NcPoly::gen(g) * NcPoly::gen(sigma));
  return pres;
}

Presentation tau_presentation(const CoxeterMatrix& m,
                              const std::map<Edge, std::vector<Rational>>& tau,
                              int base) {
  AdditivePresentation ap = build_A0plus(m, base);
  Presentation pres;
  pres.gen_names = ap.pres.gen_names;
  for (const auto& [edge, roots] : tau) {
    auto [i, j] = edge;
    if (i < 0 || j >= m.rank() || i >= j) throw std::invalid_argument("bad tau edge");
    if (!order_is_finite(m.order(i, j)))
      throw std::invalid_argument("tau on an infinite edge");
    if (static_cast<int>(roots.size()) != m.order(i, j))
      throw std::invalid_argument("tau needs one root per edge order");
  }
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      int mij = m.order(i, j);
      if (!order_is_finite(mij)) continue;
      auto it = tau.find({i, j});
      NcPoly rel = NcPoly::one();
      NcPoly alpha = ap.pair_poly(i, j);
      for (int k = 0; k < mij; ++k) {
        Rational root = it == tau.end() ? Rational(0) : it->second[static_cast<std::size_t>(k)];
        rel = rel * (alpha - NcPoly::constant(root));
      }
      pres.relations.push_back(std::move(rel));
    }
  return pres;
}

}  // namespace coxflat
