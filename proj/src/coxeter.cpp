#include "coxflat/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "coxflat/rational.hpp"

namespace coxflat {

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  orders_.assign(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  names_.resize(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) names_[static_cast<std::size_t>(i)] = "s" + std::to_string(i + 1);
}

CoxeterMatrix CoxeterMatrix::with_default(int rank, int m) {
  CoxeterMatrix M(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) M.set_order(i, j, m);
  return M;
}

CoxeterMatrix CoxeterMatrix::type_A(int n) {
  CoxeterMatrix M = with_default(n);
  for (int i = 0; i + 1 < n; ++i) M.set_order(i, i + 1, 3);
  return M;
}

CoxeterMatrix CoxeterMatrix::type_B(int n) {
  CoxeterMatrix M = type_A(n);
  if (n >= 2) M.set_order(n - 2, n - 1, 4);
  return M;
}

CoxeterMatrix CoxeterMatrix::type_D(int n) {
  if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
  CoxeterMatrix M = with_default(n);
  for (int i = 0; i + 2 < n; ++i) M.set_order(i, i + 1, 3);
  M.set_order(n - 3, n - 1, 3);
  return M;
}

CoxeterMatrix CoxeterMatrix::type_E(int n) {
  if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
  CoxeterMatrix M = with_default(n);
  for (int i = 0; i + 2 < n; ++i) M.set_order(i, i + 1, 3);
  M.set_order(2, n - 1, 3);  // branch node at the third vertex of the chain
  return M;
}

CoxeterMatrix CoxeterMatrix::type_F4() {
  CoxeterMatrix M = with_default(4);
  M.set_order(0, 1, 3);
  M.set_order(1, 2, 4);
  M.set_order(2, 3, 3);
  return M;
}

CoxeterMatrix CoxeterMatrix::type_H(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("H_n needs n in {3,4}");
  CoxeterMatrix M = with_default(n);
  M.set_order(0, 1, 5);
  for (int i = 1; i + 1 < n; ++i) M.set_order(i, i + 1, 3);
  return M;
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) {
  CoxeterMatrix M(2);
  M.set_order(0, 1, m);
  return M;
}

CoxeterMatrix CoxeterMatrix::dihedral_times_A1(int m) {
  CoxeterMatrix M = with_default(3);
  M.set_order(0, 1, m);
  return M;
}

CoxeterMatrix CoxeterMatrix::affine_A2() { return with_default(3, 3); }

CoxeterMatrix CoxeterMatrix::triangle(int p, int q, int r) {
  CoxeterMatrix M(3);
  M.set_order(0, 1, p);
  M.set_order(1, 2, q);
  M.set_order(0, 2, r);
  return M;
}

void CoxeterMatrix::set_order(int i, int j, int m) {
  if (i == j) throw std::invalid_argument("no diagonal entries in a Coxeter matrix");
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_) throw std::out_of_range("vertex index");
  if (m != kInfiniteOrder && m < 2) throw std::invalid_argument("order must be >= 2 or infinite");
  orders_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m;
  orders_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = m;
}

int CoxeterMatrix::order(int i, int j) const {
  if (i == j) throw std::invalid_argument("no diagonal entries in a Coxeter matrix");
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_) throw std::out_of_range("vertex index");
  int m = orders_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  if (m == 0) throw std::logic_error("order m_ij not set");
  return m;
}

bool CoxeterMatrix::is_set(int i, int j) const {
  return orders_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0;
}

bool CoxeterMatrix::all_set() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (!is_set(i, j)) return false;
  return true;
}

void CoxeterMatrix::set_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != rank_) throw std::invalid_argument("name count mismatch");
  names_ = std::move(names);
}

int CoxeterMatrix::vertex_by_name(const std::string& name) const {
  for (int i = 0; i < rank_; ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

// ---------------------------------------------------------------------------

Coxeter::Coxeter(CoxeterMatrix m, std::size_t braid_cap)
    : m_(std::move(m)), braid_cap_(braid_cap) {
  if (!m_.all_set()) throw std::invalid_argument("Coxeter matrix has unset entries");
}

void Coxeter::braid_neighbors(const Word& w, std::vector<Word>& out) const {
  out.clear();
  const int n = static_cast<int>(w.size());
  for (int p = 0; p + 1 < n; ++p) {
    int a = w[static_cast<std::size_t>(p)], b = w[static_cast<std::size_t>(p + 1)];
    if (a == b) continue;
    int m = m_.order(a, b);
    if (!order_is_finite(m) || p + m > n) continue;
    bool alt = true;
    for (int k = 2; k < m && alt; ++k)
      alt = w[static_cast<std::size_t>(p + k)] == (k % 2 == 0 ? a : b);
    if (!alt) continue;
    Word v = w;
    for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(p + k)] = (k % 2 == 0 ? b : a);
    out.push_back(std::move(v));
  }
}

namespace {
int find_adjacent_pair(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] == w[p + 1]) return static_cast<int>(p);
  return -1;
}
}  // namespace

Word Coxeter::nf_word(const Word& w) const {
  for (int a : w)
    if (a < 0 || a >= m_.rank()) throw std::out_of_range("unknown vertex index in word");

  Word cur = w;
  while (true) {
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = memo_.find(cur);
      if (it != memo_.end()) return it->second;
    }
    int p = find_adjacent_pair(cur);
    if (p >= 0) {
      cur.erase(cur.begin() + p, cur.begin() + p + 2);
      continue;
    }
    // cur has no s_i s_i pair; search its braid class for one.
    std::set<Word> visited{cur};
    std::deque<Word> queue{cur};
    std::vector<Word> nbrs;
    bool deleted = false;
    while (!queue.empty()) {
      Word v = std::move(queue.front());
      queue.pop_front();
      braid_neighbors(v, nbrs);
      for (Word& u : nbrs) {
        if (visited.count(u)) continue;
        int q = find_adjacent_pair(u);
        if (q >= 0) {
          u.erase(u.begin() + q, u.begin() + q + 2);
          cur = std::move(u);
          deleted = true;
          break;
        }
        if (visited.size() >= braid_cap_)
          throw InconclusiveError("braid-class exploration cap exceeded");
        queue.push_back(u);
        visited.insert(std::move(u));
      }
      if (deleted) break;
    }
    if (deleted) continue;
    // Whole class reduced: the ShortLex normal form is its lex-least word.
    const Word& best = *visited.begin();
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      for (const Word& v : visited) memo_.emplace(v, best);
    }
    return best;
  }
}

bool Coxeter::is_reduced(const Word& w) const { return nf_word(w).size() == w.size(); }

Element Coxeter::normal_form(const Word& w) const { return Element{nf_word(w)}; }

Element Coxeter::element(std::initializer_list<int> letters) const {
  return normal_form(Word(letters));
}

Element Coxeter::multiply(const Element& x, const Element& y) const {
  Word w = x.normal;
  w.insert(w.end(), y.normal.begin(), y.normal.end());
  return normal_form(w);
}

Element Coxeter::inverse(const Element& x) const {
  Word w(x.normal.rbegin(), x.normal.rend());
  return normal_form(w);
}

Enumeration Coxeter::enumerate(int max_length) const {
  const bool all = max_length == kAll;
  if (all && !is_finite(m_))
    throw std::domain_error("enumerate(\"all\") requires a finite Coxeter matrix");
  if (!all && max_length < 0) throw std::invalid_argument("negative length bound");

  Enumeration result;
  std::set<Word> level{Word{}};
  int n = 0;
  while (!level.empty() && (all || n <= max_length)) {
    result.growth.counts.push_back(static_cast<long>(level.size()));
    for (const Word& w : level) result.elements.push_back(Element{w});
    if (!all && n == max_length) break;
    std::set<Word> next;
    for (const Word& w : level)
      for (int s = 0; s < m_.rank(); ++s) {
        Word v = w;
        v.push_back(s);
        Word nf = nf_word(v);
        if (static_cast<int>(nf.size()) == n + 1) next.insert(std::move(nf));
      }
    level = std::move(next);
    ++n;
  }
  result.complete = level.empty();
  return result;
}

std::vector<Element> Coxeter::even_elements(int max_length) const {
  Enumeration e = enumerate(max_length);
  std::vector<Element> out;
  for (Element& x : e.elements)
    if (x.is_even()) out.push_back(std::move(x));
  return out;
}

// ---------------------------------------------------------------------------

std::string TriangleClass::str() const {
  switch (kind) {
    case Infinite: return "infinite";
    case Dihedral: return "(2,2," + std::to_string(r) + ")";
    case E233: return "(2,3,3)";
    case E234: return "(2,3,4)";
    case E235: return "(2,3,5)";
  }
  return "?";
}

TriangleClass classify_triangle(int p, int q, int r) {
  std::array<int, 3> o{p, q, r};
  std::sort(o.begin(), o.end());
  TriangleClass c;
  c.p = o[0];
  c.q = o[1];
  c.r = o[2];
  if (!order_is_finite(o[2])) return c;
  // 1/p + 1/q + 1/r > 1, exactly.
  Rational s = Rational(1, o[0]) + Rational(1, o[1]) + Rational(1, o[2]);
  if (s <= 1) return c;
  if (o[0] == 2 && o[1] == 2) {
    c.kind = TriangleClass::Dihedral;
  } else if (o[0] == 2 && o[1] == 3 && o[2] == 3) {
    c.kind = TriangleClass::E233;
  } else if (o[0] == 2 && o[1] == 3 && o[2] == 4) {
    c.kind = TriangleClass::E234;
  } else if (o[0] == 2 && o[1] == 3 && o[2] == 5) {
    c.kind = TriangleClass::E235;
  }
  return c;
}

TriangleClass triangle_type(const CoxeterMatrix& m, std::array<int, 3> delta) {
  if (delta[0] == delta[1] || delta[0] == delta[2] || delta[1] == delta[2])
    throw std::invalid_argument("triangle vertices must be distinct");
  return classify_triangle(m.order(delta[0], delta[1]), m.order(delta[1], delta[2]),
                           m.order(delta[0], delta[2]));
}

long finite_rank3_order(int p, int q, int r) {
  TriangleClass c = classify_triangle(p, q, r);
  if (!c.finite()) throw std::domain_error("infinite rank-3 type");
  Rational s = Rational(1, c.p) + Rational(1, c.q) + Rational(1, c.r) - 1;
  Rational order = Rational(4) / s;
  return static_cast<long>(order.get_num().get_si());
}

long parabolic_index(const CoxeterMatrix& m, std::array<int, 3> delta,
                     std::pair<int, int> edge) {
  TriangleClass c = triangle_type(m, delta);
  if (!c.finite()) throw std::domain_error("infinite triangle");
  int mij = m.order(edge.first, edge.second);
  if (!order_is_finite(mij)) throw std::domain_error("infinite edge");
  return finite_rank3_order(c.p, c.q, c.r) / (2L * mij);
}

// ---------------------------------------------------------------------------

namespace {

// Arm lengths of a tree with exactly one degree-3 vertex; empty on failure.
std::vector<int> branch_arms(const std::vector<int>& comp,
                             const std::map<int, std::vector<int>>& adj, int center) {
  std::vector<int> arms;
  for (int start : adj.at(center)) {
    int len = 1, prev = center, cur = start;
    while (true) {
      const auto& nb = adj.at(cur);
      if (nb.size() > 2) return {};  // second branch point
      int next = -1;
      for (int x : nb)
        if (x != prev) next = x;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  (void)comp;
  return arms;
}

bool finite_component(const std::vector<int>& comp, const CoxeterMatrix& m) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return true;

  std::map<int, std::vector<int>> adj;
  std::vector<std::pair<std::pair<int, int>, int>> labeled;  // edges with m > 3
  int edges = 0;
  for (int a : comp) adj[a];
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = i + 1; j < comp.size(); ++j) {
      int mij = m.order(comp[i], comp[j]);
      if (mij == 2) continue;
      if (!order_is_finite(mij)) return false;
      ++edges;
      adj[comp[i]].push_back(comp[j]);
      adj[comp[j]].push_back(comp[i]);
      if (mij > 3) labeled.push_back({{comp[i], comp[j]}, mij});
    }
  if (edges != n - 1) return false;  // cycle (affine A~)
  if (labeled.size() > 1) return false;

  int max_deg = 0, branch = -1, branches = 0;
  for (auto& [v, nb] : adj) {
    max_deg = std::max(max_deg, static_cast<int>(nb.size()));
    if (nb.size() >= 3) {
      ++branches;
      branch = v;
    }
  }
  if (max_deg > 3 || branches > 1) return false;

  if (branches == 1) {
    if (!labeled.empty()) return false;
    std::vector<int> arms = branch_arms(comp, adj, branch);
    if (arms.size() != 3) return false;
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return false;
    if (arms[1] == 1) return true;                      // D_n
    return arms[1] == 2 && arms[2] <= 4;                // E6, E7, E8
  }

  // A path. All labels 3: type A.
  if (labeled.empty()) return true;
  auto [e, label] = labeled[0];
  bool end_edge = adj[e.first].size() == 1 || adj[e.second].size() == 1;
  if (n == 2) return true;  // I2(m), any m
  if (label == 4) {
    if (end_edge) return true;  // B_n
    // F4: path of 4 vertices with the 4 on the middle edge.
    return n == 4 && adj[e.first].size() == 2 && adj[e.second].size() == 2;
  }
  if (label == 5) return end_edge && n <= 4;  // H3, H4
  return false;
}

}  // namespace

bool is_finite(const CoxeterMatrix& m) {
  if (!m.all_set()) throw std::invalid_argument("Coxeter matrix has unset entries");
  std::vector<int> color(static_cast<std::size_t>(m.rank()), -1);
  int ncomp = 0;
  for (int i = 0; i < m.rank(); ++i) {
    if (color[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> comp{i};
    color[static_cast<std::size_t>(i)] = ncomp;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int j = 0; j < m.rank(); ++j) {
        if (j == comp[head] || color[static_cast<std::size_t>(j)] >= 0) continue;
        if (m.order(comp[head], j) != 2) {
          color[static_cast<std::size_t>(j)] = ncomp;
          comp.push_back(j);
        }
      }
    if (!finite_component(comp, m)) return false;
    ++ncomp;
  }
  return true;
}

}  // namespace coxflat
