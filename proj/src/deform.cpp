#include "coxflat/deform.hpp"

#include <set>
#include <stdexcept>

#include "coxflat/laurent.hpp"

namespace coxflat {

namespace {

void check_index_pair(int i, int j) {
  if (i == j) throw std::invalid_argument("edge endpoints must differ");
  if (i < 0 || j < 0) throw std::invalid_argument("negative vertex index");
}

}  // namespace

Rational ParameterPoint::t(int i, int j, int k) const {
  const int m = edge_order(i, j);
  if (k < 1 || k > m) throw std::out_of_range("root index out of range");
  if (i < j) return entries.at({i, j})[static_cast<std::size_t>(k - 1)];
  int rk = (m - k) % m;
  if (rk == 0) rk = m;
  return 1 / entries.at({j, i})[static_cast<std::size_t>(rk - 1)];
}

int ParameterPoint::edge_order(int i, int j) const {
  auto it = entries.find(edge_key(i, j));
  if (it == entries.end()) throw std::out_of_range("edge not present");
  return static_cast<int>(it->second.size());
}

bool ParameterPoint::has_edge(int i, int j) const {
  return entries.count(edge_key(i, j)) > 0;
}

void ParameterPoint::set_edge(int i, int j, std::vector<Rational> roots) {
  check_index_pair(i, j);
  if (roots.empty()) throw std::invalid_argument("empty root list");
  for (const Rational& r : roots)
    if (r == 0) throw std::invalid_argument("zero root");
  if (i > j) {
    // Normalize to the i < j orientation via the reversal rule.
    const int m = static_cast<int>(roots.size());
    std::vector<Rational> rev(roots.size());
    for (int k = 1; k <= m; ++k) {
      int rk = (m - k) % m;
      if (rk == 0) rk = m;
      rev[static_cast<std::size_t>(rk - 1)] = 1 / roots[static_cast<std::size_t>(k - 1)];
    }
    roots = std::move(rev);
  }
  entries[edge_key(i, j)] = std::move(roots);
}

Rational SymmetricPoint::e(int i, int j, int k) const {
  const int m = edge_order(i, j);
  if (k < 0 || k > m) throw std::out_of_range("symmetric index out of range");
  if (k == 0) return 1;
  if (i < j) return entries.at({i, j})[static_cast<std::size_t>(k - 1)];
  const auto& fwd = entries.at({j, i});
  Rational top = k == m ? Rational(1) : fwd[static_cast<std::size_t>(m - k - 1)];
  return top / fwd[static_cast<std::size_t>(m - 1)];
}

int SymmetricPoint::edge_order(int i, int j) const {
  auto it = entries.find(edge_key(i, j));
  if (it == entries.end()) throw std::out_of_range("edge not present");
  return static_cast<int>(it->second.size());
}

bool SymmetricPoint::has_edge(int i, int j) const {
  return entries.count(edge_key(i, j)) > 0;
}

void SymmetricPoint::set_edge(int i, int j, std::vector<Rational> e_values) {
  check_index_pair(i, j);
  if (e_values.empty()) throw std::invalid_argument("empty coefficient list");
  if (e_values.back() == 0) throw std::invalid_argument("top coefficient must be invertible");
  if (i > j) {
    // e^{(k)}_{ij} = e^{(m-k)}_{ji} / e^{(m)}_{ji}.
    const int m = static_cast<int>(e_values.size());
    const Rational top = e_values[static_cast<std::size_t>(m - 1)];
    std::vector<Rational> rev(e_values.size());
    for (int k = 1; k <= m; ++k) {
      Rational num = k == m ? Rational(1) : e_values[static_cast<std::size_t>(m - k - 1)];
      rev[static_cast<std::size_t>(k - 1)] = num / top;
    }
    e_values = std::move(rev);
  }
  entries[edge_key(i, j)] = std::move(e_values);
}

ZElement ZElement::inverse() const {
  ZElement out;
  out.zeta.reserve(zeta.size());
  for (const Rational& z : zeta) {
    if (z == 0) throw std::invalid_argument("zero rescaling entry");
    out.zeta.push_back(1 / z);
  }
  return out;
}

SymmetricPoint to_symmetric(const ParameterPoint& u) {
  SymmetricPoint out;
  for (const auto& [edge, roots] : u.entries) {
    std::vector<Rational> e;
    const int m = static_cast<int>(roots.size());
    for (int k = 1; k <= m; ++k) e.push_back(elementary_symmetric(roots, k));
    out.set_edge(edge.first, edge.second, std::move(e));
  }
  return out;
}

ParameterPoint apply_Z(const ParameterPoint& u, const ZElement& z) {
  for (const Rational& zi : z.zeta)
    if (zi == 0) throw std::invalid_argument("zero rescaling entry");
  ParameterPoint out;
  for (const auto& [edge, roots] : u.entries) {
    auto [i, j] = edge;
    if (j >= static_cast<int>(z.zeta.size()))
      throw std::invalid_argument("rescaling element too short for the edge set");
    Rational zij = z.zeta[static_cast<std::size_t>(i)] / z.zeta[static_cast<std::size_t>(j)];
    std::vector<Rational> scaled;
    scaled.reserve(roots.size());
    for (const Rational& t : roots) scaled.push_back(zij * t);
    out.entries[edge] = std::move(scaled);
  }
  return out;
}

namespace {

template <typename Point>
void check_shape(const CoxeterMatrix& m, const Point& p, const char* what) {
  std::set<Edge> expected;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (order_is_finite(m.order(i, j))) expected.insert({i, j});
  for (const auto& [edge, values] : p.entries) {
    if (!expected.count(edge))
      throw std::invalid_argument(std::string(what) + ": entry on a non-finite edge");
    if (static_cast<int>(values.size()) != m.order(edge.first, edge.second))
      throw std::invalid_argument(std::string(what) + ": entry length != edge order");
    expected.erase(edge);
  }
  if (!expected.empty())
    throw std::invalid_argument(std::string(what) + ": missing finite edge entry");
}

}  // namespace

void check_point_shape(const CoxeterMatrix& m, const ParameterPoint& u) {
  check_shape(m, u, "parameter point");
}

void check_point_shape(const CoxeterMatrix& m, const SymmetricPoint& e) {
  check_shape(m, e, "symmetric point");
}

std::string pair_gen_name(int i, int j) {
  return "a" + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

// Generator index of a_{ij} among all ordered pairs in lexicographic order.
int pair_gen_index(int rank, int i, int j) {
  return i * (rank - 1) + (j > i ? j - 1 : j);
}

}  // namespace

Presentation build_A_tilde_plus(const CoxeterMatrix& m, const SymmetricPoint& e) {
  check_point_shape(m, e);
  const int r = m.rank();
  Presentation p;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j) p.gen_names.push_back(pair_gen_name(i, j));
  auto a = [&](int i, int j) { return NcPoly::gen(pair_gen_index(r, i, j)); };

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      p.relations.push_back(a(i, j) * a(j, i) - NcPoly::one());
      for (int k = 0; k < r; ++k)
        if (k != i && k != j)
          p.relations.push_back(a(i, j) * a(j, k) * a(k, i) - NcPoly::one());
      if (order_is_finite(m.order(i, j))) {
        const int mij = m.order(i, j);
        NcPoly rel;
        for (int k = 0; k <= mij; ++k) {
          Rational c = e.e(i, j, k);
          if (k % 2) c = -c;
          rel += a(i, j).pow(mij - k).scaled(c);
        }
        p.relations.push_back(std::move(rel));
      }
    }
  return p;
}

Presentation build_A_plus(const CoxeterMatrix& m, const ParameterPoint& u) {
  return build_A_tilde_plus(m, to_symmetric(u));
}

Presentation build_A_full(const CoxeterMatrix& m, const SymmetricPoint& e) {
  check_point_shape(m, e);
  const int r = m.rank();
  Presentation p;
  for (int i = 0; i < r; ++i) p.gen_names.push_back("s" + std::to_string(i));
  for (int i = 0; i < r; ++i)
    p.relations.push_back(NcPoly::gen(i) * NcPoly::gen(i) - NcPoly::one());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j || !order_is_finite(m.order(i, j))) continue;
      const int mij = m.order(i, j);
      NcPoly sij = NcPoly::gen(i) * NcPoly::gen(j);
      NcPoly rel;
      for (int k = 0; k <= mij; ++k) {
        Rational c = e.e(i, j, k);
        if (k % 2) c = -c;
        rel += sij.pow(mij - k).scaled(c);
      }
      p.relations.push_back(std::move(rel));
    }
  return p;
}

int default_degree_cap(const Coxeter& w) {
  auto counts = w.enumerate(Coxeter::kAll).growth.counts;
  const int longest = static_cast<int>(counts.size()) - 1;
  return 2 * longest + 2;
}

FlatnessRun dim_A_tilde_plus(const CoxeterMatrix& m, const SymmetricPoint& e, int cap,
                             long effort_cap) {
  if (!is_finite(m)) throw std::domain_error("dimension run requires a finite group");
  Coxeter w(m);
  if (cap <= 0) cap = default_degree_cap(w);
  Presentation p = build_A_tilde_plus(m, e);
  FlatnessRun run;
  run.gb = buchberger(p, cap, effort_cap);
  run.dim = dimension(run.gb, p.num_gens());
  run.dim_upper = dimension_upper_bound(run.gb, p.num_gens());
  long order = 0;
  for (long b : w.enumerate(Coxeter::kAll).growth.counts) order += b;
  run.expected = m.rank() >= 2 ? order / 2 : 1;
  return run;
}

FlatnessRun dim_A_plus(const CoxeterMatrix& m, const ParameterPoint& u, int cap,
                       long effort_cap) {
  return dim_A_tilde_plus(m, to_symmetric(u), cap, effort_cap);
}

bool reduce_basis_words(const CoxeterMatrix& m, const FlatnessRun& run) {
  if (run.gb.status != GBStatus::Complete)
    throw std::domain_error("basis-word check requires a complete run");
  Coxeter w(m);
  const int r = m.rank();
  std::vector<NcPoly> forms;
  for (const Element& x : w.even_elements(Coxeter::kAll)) {
    FreeWord word;
    for (std::size_t p = 0; p + 1 < x.normal.size(); p += 2)
      word.push_back(static_cast<char>(
          pair_gen_index(r, x.normal[p], x.normal[p + 1])));
    forms.push_back(reduce(NcPoly::word(word), run.gb.basis));
  }
  // Rank of the normal forms over the standard-word basis.
  std::map<FreeWord, NcPoly, DegLexLess> pivot_rows;
  long rank = 0;
  for (NcPoly f : forms) {
    while (!f.is_zero()) {
      auto it = pivot_rows.find(f.leading_word());
      if (it == pivot_rows.end()) break;
      f -= it->second.scaled(f.leading_coeff() / it->second.leading_coeff());
    }
    if (f.is_zero()) return false;
    pivot_rows[f.leading_word()] = f;
    ++rank;
  }
  return rank == run.expected;
}

}  // namespace coxflat
