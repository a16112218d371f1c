#include "coxflat/hecke.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace coxflat {

Rational HeckeParams::f_coef(int i, int j, int l) const {
  auto it = f.find(edge_key(i, j));
  if (it == f.end()) return 0;
  if (l < 1 || static_cast<std::size_t>(l) > it->second.size()) return 0;
  return it->second[static_cast<std::size_t>(l - 1)];
}

void validate_hecke_params(const CoxeterMatrix& m, const HeckeParams& p) {
  const int r = m.rank();
  if (static_cast<int>(p.u.size()) != r || static_cast<int>(p.v.size()) != r)
    throw std::invalid_argument("u and v need one value per vertex");
  for (const auto& [edge, vals] : p.f) {
    auto [i, j] = edge;
    if (i < 0 || j >= r || i >= j) throw std::invalid_argument("bad f edge");
    if (!order_is_finite(m.order(i, j)))
      throw std::invalid_argument("f on an infinite edge");
    if (static_cast<int>(vals.size()) != hecke_f_count(m.order(i, j)))
      throw std::invalid_argument("wrong number of f levels on an edge");
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int mij = m.order(i, j);
      if (order_is_finite(mij) && mij % 2 == 1 && (p.u[i] != p.u[j] || p.v[i] != p.v[j]))
        throw std::invalid_argument("condition (1) violated: odd edge (" +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    ") needs equal u and v");
    }
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      for (int k = i + 1; k < r; ++k) {
        if (i == j || k == j) continue;
        if (m.order(i, j) == 3 && m.order(j, k) == 3 && m.order(i, k) == 2 &&
            p.f_coef(i, j, 1) != p.f_coef(j, k, 1))
          throw std::invalid_argument(
              "condition (2) violated: edges (" + std::to_string(i) + "," +
              std::to_string(j) + ") and (" + std::to_string(j) + "," +
              std::to_string(k) + ") need equal f^(1)");
      }
}

NcPoly braid_poly(int k, int x, int y) {
  if (k < 0) throw std::invalid_argument("negative braid index");
  if (k == 0) return NcPoly();
  FreeWord xy, yx;
  for (int q = 0; q < k; ++q) {
    xy.push_back(static_cast<char>(q % 2 ? y : x));
    yx.push_back(static_cast<char>(q % 2 ? x : y));
  }
  return NcPoly::word(xy) - NcPoly::word(yx);
}

Presentation build_hecke_unchecked(const CoxeterMatrix& m, const HeckeParams& p) {
  const int r = m.rank();
  Presentation pres;
  for (int i = 0; i < r; ++i) pres.gen_names.push_back("T" + std::to_string(i + 1));
  for (int i = 0; i < r; ++i) {
    FreeWord ii(2, static_cast<char>(i));
    pres.relations.push_back(NcPoly::word(ii) -
                             NcPoly::gen(i).scaled(p.u[static_cast<std::size_t>(i)]) +
                             NcPoly::constant(p.v[static_cast<std::size_t>(i)]));
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int mij = m.order(i, j);
      if (!order_is_finite(mij)) continue;
      NcPoly rel = braid_poly(mij, i, j);
      for (int l = 1; l <= hecke_f_count(mij); ++l)
        rel += braid_poly(mij - 2 * l, i, j).scaled(p.f_coef(i, j, l));
      pres.relations.push_back(std::move(rel));
    }
  return pres;
}

Presentation build_hecke(const CoxeterMatrix& m, const HeckeParams& p) {
  validate_hecke_params(m, p);
  return build_hecke_unchecked(m, p);
}

HeckeRun hecke_freeness_run(const CoxeterMatrix& m, const HeckeParams& p, int cap) {
  if (!is_finite(m)) throw std::domain_error("freeness run requires a finite group");
  Coxeter w(m);
  if (cap <= 0) cap = default_degree_cap(w);
  Presentation pres = build_hecke_unchecked(m, p);
  HeckeRun run;
  run.gb = buchberger(pres, cap);
  run.dim = dimension(run.gb, pres.num_gens());
  Enumeration all = w.enumerate(Coxeter::kAll);
  for (long b : all.growth.counts) run.expected += b;
  if (run.gb.status == GBStatus::Complete) {
    // Rank of the reduced T_w over the standard-word basis.
    std::map<FreeWord, NcPoly, DegLexLess> pivot_rows;
    long rank = 0;
    for (const Element& x : all.elements) {
      FreeWord word(x.normal.begin(), x.normal.end());
      NcPoly f = reduce(NcPoly::word(word), run.gb.basis);
      while (!f.is_zero()) {
        auto it = pivot_rows.find(f.leading_word());
        if (it == pivot_rows.end()) break;
        f -= it->second.scaled(f.leading_coeff() / it->second.leading_coeff());
      }
      if (f.is_zero()) break;
      pivot_rows[f.leading_word()] = f;
      ++rank;
    }
    run.basis_free = rank == run.expected;
  }
  return run;
}

bool verify_freeness(const CoxeterMatrix& m, const HeckeParams& p, int cap) {
  HeckeRun run = hecke_freeness_run(m, p, cap);
  if (run.gb.status != GBStatus::Complete && run.dim.kind == Dimension::Unknown)
    throw InconclusiveError("freeness undecided at the degree cap");
  return run.free_module();
}

HeckeParams random_hecke_params(const CoxeterMatrix& m, unsigned seed) {
  const int r = m.rank();
  std::mt19937 rng(seed);
  auto rq = [&](bool nonzero) {
    long num = static_cast<long>(rng() % 7) - 3;
    if (nonzero && num == 0) num = 4;
    return frac(num, 1 + static_cast<long>(rng() % 3));
  };

  // Vertices joined by an odd edge share (u, v); merge the classes first.
  std::vector<int> parent(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int mij = m.order(i, j);
      if (order_is_finite(mij) && mij % 2 == 1)
        parent[static_cast<std::size_t>(find(i))] = find(j);
    }
  HeckeParams p;
  p.u.resize(static_cast<std::size_t>(r));
  p.v.resize(static_cast<std::size_t>(r));
  std::map<int, std::pair<Rational, Rational>> class_uv;
  for (int i = 0; i < r; ++i) {
    int root = find(i);
    auto [it, inserted] = class_uv.emplace(root, std::pair<Rational, Rational>{});
    if (inserted) it->second = {rq(false), rq(true)};
    p.u[static_cast<std::size_t>(i)] = it->second.first;
    p.v[static_cast<std::size_t>(i)] = it->second.second;
  }

  // f^{(1)} classes merged by the (3,3,2) triangles; higher levels are free.
  std::map<Edge, Edge> edge_parent;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (order_is_finite(m.order(i, j))) edge_parent[{i, j}] = {i, j};
  std::function<Edge(Edge)> efind = [&](Edge e) {
    while (edge_parent.at(e) != e) e = edge_parent.at(e);
    return e;
  };
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      for (int k = i + 1; k < r; ++k) {
        if (i == j || k == j) continue;
        if (m.order(i, j) == 3 && m.order(j, k) == 3 && m.order(i, k) == 2)
          edge_parent[efind(edge_key(i, j))] = efind(edge_key(j, k));
      }
  std::map<Edge, Rational> class_f1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int mij = m.order(i, j);
      if (!order_is_finite(mij) || hecke_f_count(mij) == 0) continue;
      std::vector<Rational> vals;
      Edge root = efind({i, j});
      auto [it, inserted] = class_f1.emplace(root, Rational());
      if (inserted) it->second = rq(false);
      vals.push_back(it->second);
      for (int l = 2; l <= hecke_f_count(mij); ++l) vals.push_back(rq(false));
      p.f[{i, j}] = std::move(vals);
    }
  return p;
}

bool hecke_edge_conditions(const CoxeterMatrix& m, const SymmetricPoint& e) {
  check_point_shape(m, e);
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      if (!order_is_finite(m.order(i, j))) continue;
      const int mij = m.order(i, j);
      Rational top = e.e(i, j, mij);
      if (top * top != 1) return false;
      for (int k = 1; k < mij; ++k)
        if (e.e(i, j, k) != top * e.e(i, j, mij - k)) return false;
    }
  return true;
}

SymmetricPoint hecke_distinguished_point(const CoxeterMatrix& m) {
  SymmetricPoint e;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      if (!order_is_finite(m.order(i, j))) continue;
      const int mij = m.order(i, j);
      std::vector<Rational> vals(static_cast<std::size_t>(mij), Rational(0));
      vals.back() = mij % 2 ? 1 : -1;
      e.set_edge(i, j, std::move(vals));
    }
  return e;
}

}  // namespace coxflat
