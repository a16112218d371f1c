#include "coxflat/flatness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace coxflat {

namespace {

// Parses "t12_1^2 t23_2 / t13_1 t13_3" into a signed exponent map; symbols
// after '/' count negatively. "1" is the empty product.
std::map<std::string, int> mono(const std::string& spec) {
  std::map<std::string, int> out;
  std::istringstream in(spec);
  std::string tok;
  int sign = 1;
  while (in >> tok) {
    if (tok == "/") {
      sign = -1;
      continue;
    }
    if (tok == "1") continue;
    int exp = 1;
    auto caret = tok.find('^');
    std::string name = tok;
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      exp = std::stoi(tok.substr(caret + 1));
    }
    out[name] += sign * exp;
    if (out[name] == 0) out.erase(name);
  }
  return out;
}

std::map<std::string, int> side(const std::string& spec) { return mono(spec); }

std::string tvar(int edge12, int k) {
  static const char* names[] = {"t12_", "t23_", "t13_"};
  return names[edge12] + std::to_string(k);
}

}  // namespace

std::vector<std::string> tilde_symbols(const TriangleClass& type) {
  if (!type.finite()) throw std::domain_error("infinite rank-3 type");
  std::vector<std::string> out;
  for (int k = 1; k <= type.p; ++k) out.push_back("alpha" + std::to_string(k));
  for (int k = 1; k <= type.q; ++k) out.push_back("beta" + std::to_string(k));
  for (int k = 1; k <= type.r; ++k) out.push_back("gamma" + std::to_string(k));
  return out;
}

std::vector<TildeEquation> tilde_equations(const TriangleClass& type) {
  std::vector<TildeEquation> eqs;
  switch (type.kind) {
    case TriangleClass::Dihedral: {
      const int n = type.r;
      const std::string gn = "gamma" + std::to_string(n);
      eqs.push_back({"22n.const",
                     {{"alpha2", n}, {"beta2", n}, {gn, 2}},
                     {}});
      for (int k = 1; k < n; ++k)
        eqs.push_back({"22n.gamma" + std::to_string(k),
                       {{"alpha2", k}, {"beta2", k}, {gn, 1}, {"gamma" + std::to_string(k), 1}},
                       {{"gamma" + std::to_string(n - k), 1}}});
      if (n % 2 == 0) {
        eqs.push_back({"22n.alpha1",
                       {{"alpha2", n / 2}, {"beta2", n / 2}, {gn, 1}, {"alpha1", 1}},
                       {{"alpha1", 1}}});
        eqs.push_back({"22n.beta1",
                       {{"alpha2", n / 2}, {"beta2", n / 2}, {gn, 1}, {"beta1", 1}},
                       {{"beta1", 1}}});
      } else {
        eqs.push_back({"22n.alpha1",
                       {{"alpha2", (n - 1) / 2}, {"beta2", (n + 1) / 2}, {gn, 1}, {"alpha1", 1}},
                       {{"beta1", 1}}});
      }
      break;
    }
    case TriangleClass::E233:
      eqs.push_back({"233.const", side("alpha2^6 beta3^4 gamma3^4"), side("1")});
      eqs.push_back({"233.alpha1", side("alpha2^3 beta3^2 gamma3^2 alpha1"), side("alpha1")});
      eqs.push_back({"233.beta1", side("alpha2^2 beta3 gamma3^2 beta1"), side("gamma2")});
      eqs.push_back({"233.gamma1", side("alpha2^2 beta3^2 gamma3 gamma1"), side("beta2")});
      break;
    case TriangleClass::E234:
      eqs.push_back({"234.const", side("alpha2^12 beta3^8 gamma4^6"), side("1")});
      eqs.push_back({"234.alpha1", side("alpha2^6 beta3^4 gamma4^3 alpha1"), side("alpha1")});
      eqs.push_back({"234.gamma2", side("alpha2^6 beta3^4 gamma4^3 gamma2"), side("gamma2")});
      eqs.push_back({"234.beta1", side("alpha2^4 beta3^3 gamma4^2 beta1"), side("beta2")});
      eqs.push_back({"234.gamma1", side("alpha2^3 beta3^2 gamma4^2 gamma1"), side("gamma3")});
      break;
    case TriangleClass::E235:
      eqs.push_back({"235.const", side("alpha2^30 beta3^20 gamma5^12"), side("1")});
      eqs.push_back({"235.alpha1", side("alpha2^15 beta3^10 gamma5^6 alpha1"), side("alpha1")});
      eqs.push_back({"235.beta1", side("alpha2^10 beta3^7 gamma5^4 beta1"), side("beta2")});
      eqs.push_back({"235.gamma1", side("alpha2^6 beta3^4 gamma5^3 gamma1"), side("gamma4")});
      eqs.push_back({"235.gamma2", side("alpha2^12 beta3^8 gamma5^5 gamma2"), side("gamma3")});
      break;
    case TriangleClass::Infinite:
      throw std::domain_error("infinite rank-3 type");
  }
  return eqs;
}

int middle_degree(const TriangleClass& type, const std::map<std::string, int>& s) {
  const std::string aq = "alpha" + std::to_string(type.p);
  const std::string bq = "beta" + std::to_string(type.q);
  const std::string gr = "gamma" + std::to_string(type.r);
  int deg = 0;
  for (const auto& [name, exp] : s)
    if (name != aq && name != bq && name != gr) deg += exp;
  return deg;
}

TriangleLabeling tilde_labeling(const CoxeterMatrix& m, std::array<int, 3> delta) {
  TriangleClass type = triangle_type(m, delta);
  if (!type.finite()) throw std::domain_error("infinite triangle");
  std::vector<Edge> edges{edge_key(delta[0], delta[1]), edge_key(delta[1], delta[2]),
                          edge_key(delta[0], delta[2])};
  std::sort(edges.begin(), edges.end());
  auto pick = [&](int order) {
    for (std::size_t s = 0; s < edges.size(); ++s)
      if (m.order(edges[s].first, edges[s].second) == order) {
        Edge e = edges[s];
        edges.erase(edges.begin() + static_cast<long>(s));
        return e;
      }
    throw std::logic_error("edge of expected order missing");
  };
  Edge alpha = pick(type.p);
  Edge beta = pick(type.q);
  TriangleLabeling lab;
  lab.type = type;
  // j is the shared vertex; i completes alpha, k completes beta.
  if (alpha.first == beta.first || alpha.first == beta.second) {
    lab.j = alpha.first;
    lab.i = alpha.second;
  } else {
    lab.j = alpha.second;
    lab.i = alpha.first;
  }
  lab.k = beta.first == lab.j ? beta.second : beta.first;
  if (m.order(lab.i, lab.k) != type.r) throw std::logic_error("triangle labeling failed");
  return lab;
}

std::map<std::string, Rational> tilde_chart(const CoxeterMatrix& m,
                                            std::array<int, 3> delta,
                                            const SymmetricPoint& e) {
  TriangleLabeling lab = tilde_labeling(m, delta);
  std::map<std::string, Rational> chart;
  for (int k = 1; k <= lab.type.p; ++k)
    chart["alpha" + std::to_string(k)] = e.e(lab.i, lab.j, k);
  for (int k = 1; k <= lab.type.q; ++k)
    chart["beta" + std::to_string(k)] = e.e(lab.j, lab.k, k);
  for (int k = 1; k <= lab.type.r; ++k)
    chart["gamma" + std::to_string(k)] = e.e(lab.k, lab.i, k);
  return chart;
}

TildeVerdict check_tilde_membership(const CoxeterMatrix& m, std::array<int, 3> delta,
                                    const SymmetricPoint& e) {
  TildeVerdict v;
  v.type = triangle_type(m, delta);
  auto chart = tilde_chart(m, delta, e);
  auto eval = [&](const std::map<std::string, int>& s) {
    Rational out = 1;
    for (const auto& [name, exp] : s)
      for (int q = 0; q < exp; ++q) out *= chart.at(name);
    return out;
  };
  for (const TildeEquation& eq : tilde_equations(v.type))
    if (eval(eq.lhs) != eval(eq.rhs)) v.failed.push_back(eq.id);
  v.member = v.failed.empty();
  return v;
}

GlobalVerdict check_global_membership(const CoxeterMatrix& m, const SymmetricPoint& e) {
  check_point_shape(m, e);
  GlobalVerdict g;
  g.member = true;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      for (int k = j + 1; k < m.rank(); ++k) {
        TriangleReport rep;
        rep.delta = {i, j, k};
        bool edges_finite = order_is_finite(m.order(i, j)) &&
                            order_is_finite(m.order(j, k)) &&
                            order_is_finite(m.order(i, k));
        rep.finite = edges_finite && triangle_type(m, rep.delta).finite();
        if (rep.finite) {
          rep.verdict = check_tilde_membership(m, rep.delta, e);
          g.member = g.member && rep.verdict.member;
        }
        g.triangles.push_back(std::move(rep));
      }
  return g;
}

GlobalVerdict check_global_membership(const CoxeterMatrix& m, const ParameterPoint& u) {
  return check_global_membership(m, to_symmetric(u));
}

// ---------------------------------------------------------------------------
// Flat components of the rank-3 locus.

std::vector<LocusComponent> lemma_components(const TriangleClass& type) {
  if (!type.finite()) throw std::domain_error("infinite rank-3 type");
  std::vector<std::string> vars;
  for (int k = 1; k <= type.p; ++k) vars.push_back(tvar(0, k));
  for (int k = 1; k <= type.q; ++k) vars.push_back(tvar(1, k));
  for (int k = 1; k <= type.r; ++k) vars.push_back(tvar(2, k));

  std::vector<LocusComponent> out;
  auto add = [&](LocusComponent::Kind kind, std::vector<std::map<std::string, int>> eqs) {
    out.push_back({kind, type, vars, std::move(eqs)});
  };

  if (type.kind == TriangleClass::Dihedral) {
    const int n = type.r;
    std::vector<std::map<std::string, int>> grp;
    grp.push_back(mono("t12_2 t23_2 / " + tvar(2, n)));
    grp.push_back(mono("t12_1 t23_1 / " + tvar(2, n)));
    if (n % 2 == 0) {
      grp.push_back(mono("t12_2 t23_1 / " + tvar(2, n / 2)));
      grp.push_back(mono("t12_1 t23_2 / " + tvar(2, n / 2)));
    }
    for (int i = 1; 2 * i < n; ++i)
      grp.push_back(mono("t12_1 t12_2 t23_1 t23_2 / " + tvar(2, i) + " " + tvar(2, n - i)));
    add(LocusComponent::Group, std::move(grp));
    if (n % 2 == 0) {
      std::vector<std::map<std::string, int>> spin;
      for (int i = 1; 2 * i <= n; ++i)
        spin.push_back(
            mono("t12_1 t12_2 t23_1 t23_2 / " + tvar(2, i) + " " + tvar(2, n + 1 - i)));
      add(LocusComponent::Spin, std::move(spin));
    }
    return out;
  }

  auto eqs = [&](std::vector<std::string> specs) {
    std::vector<std::map<std::string, int>> es;
    for (const std::string& s : specs) es.push_back(mono(s));
    return es;
  };
  switch (type.kind) {
    case TriangleClass::E233:
      add(LocusComponent::Group, eqs({"t12_2 t23_3 / t13_3",
                                      "t12_2 t23_1 / t13_1",
                                      "t12_2 t23_2 / t13_2",
                                      "t12_1^2 t12_2 t23_1 t23_2 t23_3 / t13_1 t13_2 t13_3"}));
      add(LocusComponent::Spin, eqs({"t12_1 t12_2 t23_1 t23_2 / t13_1 t13_2",
                                     "t12_1 t12_2 t23_1 t23_3 / t13_1 t13_3",
                                     "t12_1 t12_2 t23_2 t23_3 / t13_2 t13_3"}));
      break;
    case TriangleClass::E234:
      add(LocusComponent::Group,
          eqs({"t12_2 t23_3 / t13_4",
               "t12_1 t23_3 / t13_2",
               "t12_1 t12_2 t23_1 t23_2 / t13_2 t13_4",
               "t12_1 t12_2^2 t23_1 t23_2 t23_3 / t13_1 t13_2 t13_3",
               "t12_1^2 t12_2 t23_1 t23_2 t23_3 / t13_1 t13_3 t13_4"}));
      add(LocusComponent::Spin,
          eqs({"t12_1 t12_2 t23_1 t23_3 / t13_1 t13_4",
               "t12_1 t12_2 t23_1 t23_3 / t13_2 t13_3",
               "t12_1^2 t12_2^2 t23_1 t23_2^2 t23_3 / t13_1 t13_2 t13_3 t13_4"}));
      break;
    case TriangleClass::E235:
      add(LocusComponent::Group,
          eqs({"t12_2 t23_3 / t13_5",
               "t12_1^2 t12_2 t23_1 t23_2 t23_3 / t13_1 t13_4 t13_5",
               "t12_1^2 t12_2 t23_1 t23_2 t23_3 / t13_2 t13_3 t13_5",
               "t12_1^2 t12_2^2 t23_1 t23_2 t23_3^2 / t13_1 t13_2 t13_3 t13_4",
               "t12_1^2 t12_2^3 t23_1^2 t23_2^2 t23_3 / t13_1 t13_2 t13_3 t13_4 t13_5"}));
      add(LocusComponent::Spin,
          eqs({"t12_1 t12_2 t23_1 t23_2 / t13_1 t13_5",
               "t12_1 t12_2 t23_1 t23_2 / t13_2 t13_3",
               "t12_1^2 t12_2^2 t23_1 t23_2 t23_3^2 / t13_1 t13_2 t13_3 t13_5",
               "t12_1^3 t12_2^3 t23_1^2 t23_2^2 t23_3^2 / t13_1 t13_2 t13_3 t13_4^2 t13_5"}));
      break;
    default:
      throw std::logic_error("unhandled type");
  }
  return out;
}

namespace {

// Integer basis of the nullspace of the equations' exponent matrix.
std::vector<std::vector<long>> kernel_basis(const LocusComponent& c) {
  const std::size_t nv = c.vars.size();
  std::map<std::string, std::size_t> col;
  for (std::size_t v = 0; v < nv; ++v) col[c.vars[v]] = v;
  std::vector<std::vector<Rational>> rows;
  for (const auto& eq : c.equations) {
    std::vector<Rational> row(nv, Rational(0));
    for (const auto& [name, exp] : eq) row[col.at(name)] = exp;
    rows.push_back(std::move(row));
  }
  // Row-reduce.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t cidx = 0; cidx < nv && rank < rows.size(); ++cidx) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][cidx] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rational inv = 1 / rows[rank][cidx];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == rank || rows[rr][cidx] == 0) continue;
      Rational f = rows[rr][cidx];
      for (std::size_t cc = 0; cc < nv; ++cc) rows[rr][cc] -= f * rows[rank][cc];
    }
    pivot_cols.push_back(cidx);
    ++rank;
  }
  std::vector<bool> is_pivot(nv, false);
  for (std::size_t pc : pivot_cols) is_pivot[pc] = true;

  std::vector<std::vector<long>> basis;
  for (std::size_t f = 0; f < nv; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> vec(nv, Rational(0));
    vec[f] = 1;
    for (std::size_t rr = 0; rr < rank; ++rr) vec[pivot_cols[rr]] = -rows[rr][f];
    mpz_class lcm = 1;
    for (const Rational& x : vec) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
      lcm = l;
    }
    std::vector<long> ivec;
    for (const Rational& x : vec) {
      Rational scaled = x * Rational(lcm);
      ivec.push_back(scaled.get_num().get_si());
    }
    basis.push_back(std::move(ivec));
  }
  return basis;
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return 1;
  Rational b = e > 0 ? base : 1 / base;
  long n = e > 0 ? e : -e;
  Rational out = 1;
  for (long q = 0; q < n; ++q) out *= b;
  return out;
}

ParameterPoint triangle_point_from_values(const TriangleClass& type,
                                          const std::vector<Rational>& tvals) {
  ParameterPoint u;
  std::size_t pos = 0;
  auto take = [&](int count) {
    std::vector<Rational> roots(tvals.begin() + static_cast<long>(pos),
                                tvals.begin() + static_cast<long>(pos) + count);
    pos += static_cast<std::size_t>(count);
    return roots;
  };
  u.set_edge(0, 1, take(type.p));
  u.set_edge(1, 2, take(type.q));
  u.set_edge(0, 2, take(type.r));
  return u;
}

}  // namespace

std::vector<LaurentPoly> component_parametrization(const LocusComponent& c) {
  auto basis = kernel_basis(c);
  std::vector<std::string> svars;
  for (std::size_t v = 0; v < basis.size(); ++v)
    svars.push_back("s" + std::to_string(v + 1));
  std::vector<LaurentPoly> out;
  for (std::size_t j = 0; j < c.vars.size(); ++j) {
    LaurentPoly::Exponents e;
    for (const auto& vec : basis) e.push_back(static_cast<int>(vec[j]));
    out.push_back(LaurentPoly::monomial(svars, std::move(e), Rational(1)));
  }
  return out;
}

ParameterPoint sample_point(const LocusComponent& c, unsigned seed) {
  auto basis = kernel_basis(c);
  std::mt19937 rng(seed);
  std::vector<Rational> s;
  for (std::size_t v = 0; v < basis.size(); ++v)
    s.push_back(frac(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 6)));
  std::vector<Rational> tvals(c.vars.size(), Rational(1));
  for (std::size_t j = 0; j < c.vars.size(); ++j)
    for (std::size_t v = 0; v < basis.size(); ++v)
      tvals[j] *= rational_pow(s[v], basis[v][j]);
  return triangle_point_from_values(c.type, tvals);
}

bool symbolic_containment(const LocusComponent& c) {
  std::vector<LaurentPoly> tvals = component_parametrization(c);
  auto slice = [&](std::size_t from, int count) {
    return std::vector<LaurentPoly>(tvals.begin() + static_cast<long>(from),
                                    tvals.begin() + static_cast<long>(from) + count);
  };
  std::vector<LaurentPoly> t12 = slice(0, c.type.p);
  std::vector<LaurentPoly> t23 = slice(static_cast<std::size_t>(c.type.p), c.type.q);
  std::vector<LaurentPoly> t13 =
      slice(static_cast<std::size_t>(c.type.p + c.type.q), c.type.r);

  std::map<std::string, LaurentPoly> chart;
  for (int k = 1; k <= c.type.p; ++k)
    chart["alpha" + std::to_string(k)] = elementary_symmetric(t12, k);
  for (int k = 1; k <= c.type.q; ++k)
    chart["beta" + std::to_string(k)] = elementary_symmetric(t23, k);
  LaurentPoly top = elementary_symmetric(t13, c.type.r);  // monomial, invertible
  for (int k = 1; k <= c.type.r; ++k)
    chart["gamma" + std::to_string(k)] =
        elementary_symmetric(t13, c.type.r - k) / top;

  auto eval = [&](const std::map<std::string, int>& s) {
    LaurentPoly out = LaurentPoly::constant(tvals.front().vars(), Rational(1));
    for (const auto& [name, exp] : s) out *= chart.at(name).pow(exp);
    return out;
  };
  for (const TildeEquation& eq : tilde_equations(c.type))
    if (!(eval(eq.lhs) == eval(eq.rhs))) return false;
  return true;
}

ParameterPoint random_triangle_point(const TriangleClass& type, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Rational> tvals;
  for (int q = 0; q < type.p + type.q + type.r; ++q)
    tvals.push_back(frac(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5)));
  return triangle_point_from_values(type, tvals);
}

// ---------------------------------------------------------------------------
// Theta and twisted group algebras.

bool theta_membership(const CoxeterMatrix& m, const ThetaPoint& t) {
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      for (int k = j + 1; k < m.rank(); ++k) {
        if (!order_is_finite(m.order(i, j)) || !order_is_finite(m.order(j, k)) ||
            !order_is_finite(m.order(i, k)))
          continue;
        std::array<int, 3> delta{i, j, k};
        if (!triangle_type(m, delta).finite()) continue;
        Rational prod = rational_pow(t.t(i, j), parabolic_index(m, delta, {i, j})) *
                        rational_pow(t.t(j, k), parabolic_index(m, delta, {j, k})) *
                        rational_pow(t.t(k, i), parabolic_index(m, delta, {k, i}));
        if (prod != 1) return false;
      }
  return true;
}

SymmetricPoint theta_to_symmetric(const CoxeterMatrix& m, const ThetaPoint& t) {
  SymmetricPoint e;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      if (!order_is_finite(m.order(i, j))) continue;
      std::vector<Rational> vals(static_cast<std::size_t>(m.order(i, j)), Rational(0));
      vals.back() = t.t(i, j);
      e.set_edge(i, j, std::move(vals));
    }
  return e;
}

TwistedAlgebra::TwistedAlgebra(CoxeterMatrix m, ThetaPoint t)
    : m_(m),
      t_(t),
      group_(m_),
      rewriter_(m_, t_, ScalarRewriter::SquareRule::Delete),
      basis_(group_.even_elements(Coxeter::kAll)) {}

Rational TwistedAlgebra::psi(const Element& x, const Element& y) const {
  Word w = x.normal;
  w.insert(w.end(), y.normal.begin(), y.normal.end());
  return rewriter_.rewrite(w).scalar;
}

Element TwistedAlgebra::product_element(const Element& x, const Element& y) const {
  return group_.multiply(x, y);
}

TwistedAlgebra build_twisted_algebra(const CoxeterMatrix& m, const ThetaPoint& t) {
  if (!is_finite(m)) throw std::domain_error("twisted algebra requires a finite group");
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (order_is_finite(m.order(i, j)) && !t.has_edge(i, j))
        throw std::invalid_argument("theta point missing a finite edge");
  if (!theta_membership(m, t))
    throw std::invalid_argument("weights are not consistent (not in the locus)");
  return TwistedAlgebra(m, t);
}

namespace {

// A scalar multiple of a twisted basis element.
struct TwElem {
  Rational c;
  Element x;
};

TwElem tw_mul(const TwistedAlgebra& a, const TwElem& l, const TwElem& r) {
  return {l.c * r.c * a.psi(l.x, r.x), a.product_element(l.x, r.x)};
}

TwElem tw_inv(const TwistedAlgebra& a, const TwElem& e) {
  Coxeter group(a.matrix());
  Element xinv = group.inverse(e.x);
  return {1 / (e.c * a.psi(e.x, xinv)), xinv};
}

}  // namespace

ThetaPoint eta(const TwistedAlgebra& algebra, int base) {
  const CoxeterMatrix& m = algebra.matrix();
  if (base < 0 || base >= m.rank()) throw std::out_of_range("base vertex out of range");
  Coxeter group(m);
  auto a0 = [&](int j) { return TwElem{Rational(1), group.element({base, j})}; };
  auto a = [&](int i, int j) {
    if (i == base) return a0(j);
    if (j == base) return tw_inv(algebra, a0(i));
    return tw_mul(algebra, tw_inv(algebra, a0(i)), a0(j));
  };
  ThetaPoint out;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      if (!order_is_finite(m.order(i, j))) continue;
      const int mij = m.order(i, j);
      TwElem power{Rational(1), Element{}};
      TwElem aij = a(i, j);
      for (int q = 0; q < mij; ++q) power = tw_mul(algebra, power, aij);
      if (!power.x.is_identity()) throw std::logic_error("a_ij^m is not scalar");
      Rational tij = power.c;
      if (mij % 2 == 0) tij = -tij;  // a_ij^m = (-1)^{m+1} t_ij
      out.set(i, j, tij);
    }
  return out;
}

bool same_Z_orbit(const CoxeterMatrix& m, const ThetaPoint& a, const ThetaPoint& b) {
  const int r = m.rank();
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (order_is_finite(m.order(i, j))) edges.push_back({i, j});
  for (const Edge& e : edges)
    if (!a.has_edge(e.first, e.second) || !b.has_edge(e.first, e.second))
      throw std::invalid_argument("theta point missing a finite edge");

  // Backtracking over the per-vertex rescalings: each vertex value is pinned
  // (up to sign for even powers) by any edge to an assigned vertex.
  std::vector<Rational> zeta(static_cast<std::size_t>(r), Rational(0));
  std::vector<bool> assigned(static_cast<std::size_t>(r), false);

  auto edge_ok = [&](const Edge& e) {
    const int mij = m.order(e.first, e.second);
    Rational ratio = b.t(e.first, e.second) / a.t(e.first, e.second);
    Rational z = zeta[static_cast<std::size_t>(e.first)] /
                 zeta[static_cast<std::size_t>(e.second)];
    return rational_pow(z, mij) == ratio;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t done) -> bool {
    // Find an unassigned vertex adjacent to an assigned one; else start a new
    // component at the first unassigned vertex with zeta = 1.
    if (done == static_cast<std::size_t>(r)) return true;
    int next = -1, from = -1;
    for (const Edge& e : edges) {
      if (assigned[static_cast<std::size_t>(e.first)] &&
          !assigned[static_cast<std::size_t>(e.second)]) {
        next = e.second;
        from = e.first;
        break;
      }
      if (assigned[static_cast<std::size_t>(e.second)] &&
          !assigned[static_cast<std::size_t>(e.first)]) {
        next = e.first;
        from = e.second;
        break;
      }
    }
    std::vector<Rational> candidates;
    if (next < 0) {
      for (int v = 0; v < r; ++v)
        if (!assigned[static_cast<std::size_t>(v)]) {
          next = v;
          break;
        }
      candidates.push_back(Rational(1));
    } else {
      const int mij = m.order(from, next);
      // (zeta_from / zeta_next)^m = ratio(from, next).
      Rational ratio = b.t(from, next) / a.t(from, next);
      Rational target = rational_pow(zeta[static_cast<std::size_t>(from)],
                                     static_cast<long>(mij)) /
                        ratio;
      auto root = rational_nth_root(target, static_cast<unsigned>(mij));
      if (!root) return false;
      candidates.push_back(*root);
      if (mij % 2 == 0 && *root != 0) candidates.push_back(-*root);
    }
    for (const Rational& cand : candidates) {
      zeta[static_cast<std::size_t>(next)] = cand;
      assigned[static_cast<std::size_t>(next)] = true;
      bool consistent = true;
      for (const Edge& e : edges)
        if (assigned[static_cast<std::size_t>(e.first)] &&
            assigned[static_cast<std::size_t>(e.second)] && !edge_ok(e)) {
          consistent = false;
          break;
        }
      if (consistent && place(done + 1)) return true;
      assigned[static_cast<std::size_t>(next)] = false;
    }
    return false;
  };
  return place(0);
}

// ---------------------------------------------------------------------------
// Numeric Clifford check for the spin class.

namespace {

// Product of the subset basis element e_S with the generator e_i, for the
// bilinear form G with G_ii = 1; returns (mask, coeff) terms.
void clifford_mul_gen(unsigned mask, double coeff, int i,
                      const std::vector<std::vector<double>>& g,
                      std::vector<double>& out) {
  if (mask == 0 || static_cast<int>(31 - __builtin_clz(mask)) < i) {
    out[mask | (1u << i)] += coeff;
    return;
  }
  int t = 31 - static_cast<int>(__builtin_clz(mask));
  unsigned rest = mask & ~(1u << t);
  if (t == i) {
    out[rest] += coeff * g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return;
  }
  // e_rest e_t e_i = 2 G_ti e_rest - (e_rest e_i) e_t.
  out[rest] += 2 * g[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] * coeff;
  std::vector<double> tmp(out.size(), 0.0);
  clifford_mul_gen(rest, -coeff, i, g, tmp);
  for (std::size_t s = 0; s < tmp.size(); ++s) {
    if (tmp[s] == 0) continue;
    // Every term of e_rest e_i has top index < t; append e_t directly.
    out[s | (1u << t)] += tmp[s];
  }
}

std::vector<double> clifford_apply_gen(const std::vector<double>& x, int i,
                                       const std::vector<std::vector<double>>& g) {
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t s = 0; s < x.size(); ++s)
    if (x[s] != 0) clifford_mul_gen(static_cast<unsigned>(s), x[s], i, g, out);
  return out;
}

}  // namespace

bool verify_spin_numeric(const CoxeterMatrix& m, double tolerance) {
  const int r = m.rank();
  if (r > 3) throw std::invalid_argument("numeric spin check supports rank <= 3");
  std::vector<std::vector<double>> g(static_cast<std::size_t>(r),
                                     std::vector<double>(static_cast<std::size_t>(r), 0.0));
  const double pi = std::acos(-1.0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) {
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1.0;
        continue;
      }
      int mij = m.order(i, j);
      if (!order_is_finite(mij))
        throw std::domain_error("numeric spin check requires finite orders");
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -std::cos(pi / mij);
    }
  const std::size_t dim = 1u << r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const int mij = m.order(i, j);
      std::vector<double> x(dim, 0.0);
      x[0] = 1.0;
      for (int q = 0; q < mij; ++q) {
        x = clifford_apply_gen(x, i, g);
        x = clifford_apply_gen(x, j, g);
      }
      const double expect = mij % 2 ? 1.0 : -1.0;
      for (std::size_t s = 0; s < dim; ++s) {
        double want = s == 0 ? expect : 0.0;
        if (std::abs(x[s] - want) > tolerance) return false;
      }
    }
  return true;
}

}  // namespace coxflat
