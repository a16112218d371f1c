#include "coxflat/ncalg.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace coxflat {

NcPoly NcPoly::constant(Rational c) {
  NcPoly p;
  if (c != 0) p.terms_[FreeWord()] = std::move(c);
  return p;
}

NcPoly NcPoly::gen(int i) {
  NcPoly p;
  p.terms_[FreeWord(1, static_cast<char>(i))] = Rational(1);
  return p;
}

NcPoly NcPoly::word(FreeWord w, Rational c) {
  NcPoly p;
  if (c != 0) p.terms_[std::move(w)] = std::move(c);
  return p;
}

const FreeWord& NcPoly::leading_word() const {
  if (terms_.empty()) throw std::logic_error("leading word of zero");
  return terms_.rbegin()->first;
}

const Rational& NcPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading coeff of zero");
  return terms_.rbegin()->second;
}

int NcPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

void NcPoly::add_term(const FreeWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly r;
  for (const auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r = *this;
  r += o;
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly r = *this;
  r -= o;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  NcPoly r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(w1 + w2, c1 * c2);
  return r;
}

NcPoly NcPoly::scaled(const Rational& c) const {
  NcPoly r;
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.terms_[w] = k * c;
  return r;
}

NcPoly NcPoly::monic() const {
  if (terms_.empty()) throw std::logic_error("monic of zero");
  return scaled(Rational(1) / leading_coeff());
}

NcPoly NcPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  NcPoly r = one();
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

NcPoly NcPoly::framed(const FreeWord& left, const FreeWord& right) const {
  NcPoly r;
  for (const auto& [w, c] : terms_) r.terms_[left + w + right] = c;
  return r;
}

std::string NcPoly::str(const std::vector<std::string>& gen_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << rational_str(c);
    for (char g : w) os << "*" << gen_names.at(static_cast<std::size_t>(g));
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Aho-Corasick index over the basis leading words, for fast factor lookup.

namespace {

class FactorIndex {
 public:
  FactorIndex(int alphabet, const std::vector<const FreeWord*>& patterns)
      : alphabet_(alphabet) {
    nodes_.push_back(Node(alphabet));
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const FreeWord& w = *patterns[p];
      if (w.empty()) {
        empty_pattern_ = static_cast<int>(p);
        continue;
      }
      int cur = 0;
      for (char ch : w) {
        int c = ch;
        if (nodes_[static_cast<std::size_t>(cur)].next[static_cast<std::size_t>(c)] < 0) {
          nodes_[static_cast<std::size_t>(cur)].next[static_cast<std::size_t>(c)] =
              static_cast<int>(nodes_.size());
          nodes_.push_back(Node(alphabet));
        }
        cur = nodes_[static_cast<std::size_t>(cur)].next[static_cast<std::size_t>(c)];
      }
      if (nodes_[static_cast<std::size_t>(cur)].hit < 0)
        nodes_[static_cast<std::size_t>(cur)].hit = static_cast<int>(p);
    }
    // BFS failure links; goto-style transitions filled in place.
    std::deque<int> bfs;
    for (int c = 0; c < alphabet_; ++c) {
      int v = nodes_[0].next[static_cast<std::size_t>(c)];
      if (v < 0) {
        nodes_[0].next[static_cast<std::size_t>(c)] = 0;
      } else {
        nodes_[static_cast<std::size_t>(v)].fail = 0;
        bfs.push_back(v);
      }
    }
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      int fu = nodes_[static_cast<std::size_t>(u)].fail;
      if (nodes_[static_cast<std::size_t>(u)].hit < 0)
        nodes_[static_cast<std::size_t>(u)].hit = nodes_[static_cast<std::size_t>(fu)].hit;
      for (int c = 0; c < alphabet_; ++c) {
        int v = nodes_[static_cast<std::size_t>(u)].next[static_cast<std::size_t>(c)];
        int fv = nodes_[static_cast<std::size_t>(fu)].next[static_cast<std::size_t>(c)];
        if (v < 0) {
          nodes_[static_cast<std::size_t>(u)].next[static_cast<std::size_t>(c)] = fv;
        } else {
          nodes_[static_cast<std::size_t>(v)].fail = fv;
          bfs.push_back(v);
        }
      }
    }
  }

  // First pattern occurrence scanning left to right: (pattern idx, end pos).
  std::pair<int, int> match(const FreeWord& w) const {
    if (empty_pattern_ >= 0) return {empty_pattern_, 0};
    int state = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      state = nodes_[static_cast<std::size_t>(state)].next[static_cast<std::size_t>(w[i])];
      int hit = nodes_[static_cast<std::size_t>(state)].hit;
      if (hit >= 0) return {hit, static_cast<int>(i) + 1};
    }
    return {-1, -1};
  }

 private:
  struct Node {
    explicit Node(int alphabet) : next(static_cast<std::size_t>(alphabet), -1) {}
    std::vector<int> next;
    int fail = 0;
    int hit = -1;
  };
  int alphabet_;
  int empty_pattern_ = -1;
  std::vector<Node> nodes_;
};

// Full normal form against an indexed monic basis.
NcPoly reduce_indexed(const NcPoly& p, const std::vector<NcPoly>& basis,
                      const std::vector<bool>& active, const FactorIndex& index) {
  NcPoly work = p;
  NcPoly result;
  while (!work.is_zero()) {
    const FreeWord w = work.leading_word();
    const Rational c = work.leading_coeff();
    auto [b, end] = index.match(w);
    if (b < 0 || !active[static_cast<std::size_t>(b)]) {
      // An index hit on an inactive element can happen transiently between
      // basis updates; fall back to a scan in that case.
      int found = -1, pos = -1;
      if (b >= 0) {
        for (std::size_t g = 0; g < basis.size() && found < 0; ++g) {
          if (!active[g]) continue;
          auto at = w.find(basis[g].leading_word());
          if (at != FreeWord::npos) {
            found = static_cast<int>(g);
            pos = static_cast<int>(at);
          }
        }
      }
      if (found < 0) {
        result.add_term(w, c);
        work.add_term(w, -c);
        continue;
      }
      b = found;
      end = pos + static_cast<int>(basis[static_cast<std::size_t>(b)].leading_word().size());
    }
    const NcPoly& g = basis[static_cast<std::size_t>(b)];
    const std::size_t len = g.leading_word().size();
    FreeWord left = w.substr(0, static_cast<std::size_t>(end) - len);
    FreeWord right = w.substr(static_cast<std::size_t>(end));
    work -= g.framed(left, right).scaled(c);
  }
  return result;
}

struct EffortExceeded {};

// Scale to coprime integer coefficients with a positive leading coefficient.
NcPoly primitive_part(const NcPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& [w, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& [w, c] : p.terms()) {
    mpz_class n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_coeff() < 0) scale = -scale;
  return p.scaled(scale);
}

// Full normal form up to a positive scalar, against a basis of primitive
// integer polynomials. Cross-multiplied eliminations keep every intermediate
// integral (no per-operation rational gcds), and the content is stripped
// after each step; this is what keeps collapsing quotients tractable. With a
// budget, each step costs the operand term counts weighted by coefficient
// limb sizes; exhaustion throws EffortExceeded.
NcPoly reduce_fraction_free(const NcPoly& p, const std::vector<NcPoly>& basis,
                            const std::vector<bool>& active, const FactorIndex& index,
                            long* effort_left) {
  NcPoly work = primitive_part(p);
  while (!work.is_zero()) {
    // Highest reducible term; terms above it are irreducible and stay put.
    int b = -1, end = -1;
    FreeWord target;
    Rational c;
    for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
      const FreeWord& w = it->first;
      auto [bb, ee] = index.match(w);
      if (bb >= 0 && !active[static_cast<std::size_t>(bb)]) {
        // Transient index hit on an inactive element; fall back to a scan.
        bb = -1;
        for (std::size_t g = 0; g < basis.size() && bb < 0; ++g) {
          if (!active[g]) continue;
          auto at = w.find(basis[g].leading_word());
          if (at != FreeWord::npos) {
            bb = static_cast<int>(g);
            ee = static_cast<int>(at + basis[g].leading_word().size());
          }
        }
      }
      if (bb >= 0) {
        b = bb;
        end = ee;
        target = w;
        c = it->second;
        break;
      }
    }
    if (b < 0) break;
    const NcPoly& g = basis[static_cast<std::size_t>(b)];
    const Rational& cg = g.leading_coeff();
    if (effort_left) {
      const long limbs = static_cast<long>(mpz_size(c.get_num().get_mpz_t()) +
                                           mpz_size(cg.get_num().get_mpz_t()));
      *effort_left -=
          static_cast<long>(g.terms().size() + work.terms().size()) * (1 + limbs);
      if (*effort_left < 0) throw EffortExceeded{};
    }
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), c.get_num().get_mpz_t(), cg.get_num().get_mpz_t());
    Rational scale_work(cg.get_num() / d, 1);
    Rational scale_g(c.get_num() / d, 1);
    const std::size_t len = g.leading_word().size();
    FreeWord left = target.substr(0, static_cast<std::size_t>(end) - len);
    FreeWord right = target.substr(static_cast<std::size_t>(end));
    work = work.scaled(scale_work) - g.framed(left, right).scaled(scale_g);
    work = primitive_part(work);
  }
  return work;
}

}  // namespace

NcPoly reduce(const NcPoly& p, const std::vector<NcPoly>& basis) {
  std::vector<const FreeWord*> lws;
  int alphabet = 1;
  for (const NcPoly& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("zero element in reduction basis");
    lws.push_back(&g.leading_word());
    for (char c : g.leading_word()) alphabet = std::max(alphabet, c + 1);
  }
  for (const auto& [w, c] : p.terms())
    for (char ch : w) alphabet = std::max(alphabet, ch + 1);
  FactorIndex index(alphabet, lws);
  std::vector<NcPoly> monic;
  monic.reserve(basis.size());
  for (const NcPoly& g : basis) monic.push_back(g.monic());
  return reduce_indexed(p, monic, std::vector<bool>(basis.size(), true), index);
}

// ---------------------------------------------------------------------------
// Buchberger completion.

namespace {

struct Task {
  int degree;
  FreeWord overlap;  // tie-break key; the S-polynomial's expected leading word
  long seq;
  // Overlap task when gi >= 0; otherwise a raw polynomial to process.
  int gi = -1, gj = -1;
  int cut = 0;  // overlap length
  NcPoly poly;

  bool operator<(const Task& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (overlap != o.overlap) return DegLexLess()(overlap, o.overlap);
    return seq < o.seq;
  }
};

}  // namespace

GroebnerResult buchberger(const Presentation& p, int degree_cap, long effort_cap) {
  const int alphabet = std::max(1, p.num_gens());
  for (const NcPoly& r : p.relations)
    if (!r.is_zero() && r.degree() > degree_cap)
      throw std::invalid_argument("degree_cap below a relation degree");

  std::vector<NcPoly> basis;
  std::vector<bool> active;
  std::set<Task> queue;
  long seq = 0;

  auto rebuild_index = [&]() {
    std::vector<const FreeWord*> lws;
    for (const NcPoly& g : basis) lws.push_back(&g.leading_word());
    return FactorIndex(alphabet, lws);
  };
  FactorIndex index = rebuild_index();

  auto push_poly = [&](NcPoly q) {
    if (q.is_zero()) return;
    Task t;
    t.degree = q.degree();
    t.overlap = q.leading_word();
    t.seq = seq++;
    t.poly = std::move(q);
    queue.insert(std::move(t));
  };

  auto push_overlaps = [&](int i, int j) {
    const FreeWord& wi = basis[static_cast<std::size_t>(i)].leading_word();
    const FreeWord& wj = basis[static_cast<std::size_t>(j)].leading_word();
    const int li = static_cast<int>(wi.size()), lj = static_cast<int>(wj.size());
    for (int k = 1; k < std::min(li, lj); ++k) {
      if (wi.compare(static_cast<std::size_t>(li - k), static_cast<std::size_t>(k), wj, 0,
                     static_cast<std::size_t>(k)) != 0)
        continue;
      Task t;
      t.overlap = wi + wj.substr(static_cast<std::size_t>(k));
      t.degree = static_cast<int>(t.overlap.size());
      t.seq = seq++;
      t.gi = i;
      t.gj = j;
      t.cut = k;
      queue.insert(std::move(t));
    }
  };

  auto add_element = [&](NcPoly h) {
    h = primitive_part(h);
    const FreeWord& lw = h.leading_word();
    basis.push_back(std::move(h));
    active.push_back(true);
    const int hi = static_cast<int>(basis.size()) - 1;
    // Deactivate elements whose leading word became reducible; their content
    // is requeued so nothing is lost.
    for (int g = 0; g < hi; ++g) {
      if (!active[static_cast<std::size_t>(g)]) continue;
      if (basis[static_cast<std::size_t>(g)].leading_word().find(lw) != FreeWord::npos) {
        active[static_cast<std::size_t>(g)] = false;
        push_poly(basis[static_cast<std::size_t>(g)]);
      }
    }
    index = rebuild_index();
    for (int g = 0; g < hi; ++g) {
      if (!active[static_cast<std::size_t>(g)]) continue;
      push_overlaps(hi, g);
      push_overlaps(g, hi);
    }
    push_overlaps(hi, hi);
  };

  for (const NcPoly& r : p.relations) push_poly(r);

  long effort_left = effort_cap;
  long* budget = effort_cap >= 0 ? &effort_left : nullptr;
  GroebnerResult result;
  while (!queue.empty()) {
    Task t = *queue.begin();
    queue.erase(queue.begin());
    if (t.degree > degree_cap) {
      result.status = GBStatus::Truncated;
      result.truncated_at = t.degree;
      break;
    }
    NcPoly s;
    if (t.gi < 0) {
      s = std::move(t.poly);
    } else {
      if (!active[static_cast<std::size_t>(t.gi)] || !active[static_cast<std::size_t>(t.gj)])
        continue;
      const NcPoly& gi = basis[static_cast<std::size_t>(t.gi)];
      const NcPoly& gj = basis[static_cast<std::size_t>(t.gj)];
      const FreeWord& wi = gi.leading_word();
      const FreeWord& wj = gj.leading_word();
      FreeWord right = wj.substr(static_cast<std::size_t>(t.cut));
      FreeWord left = wi.substr(0, wi.size() - static_cast<std::size_t>(t.cut));
      // Cross-multiplied S-polynomial: leading terms cancel exactly for the
      // primitive (non-monic) basis elements.
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), gi.leading_coeff().get_num().get_mpz_t(),
              gj.leading_coeff().get_num().get_mpz_t());
      Rational ci(gj.leading_coeff().get_num() / d, 1);
      Rational cj(gi.leading_coeff().get_num() / d, 1);
      s = gi.framed(FreeWord(), right).scaled(ci) - gj.framed(left, FreeWord()).scaled(cj);
    }
    try {
      NcPoly h = reduce_fraction_free(s, basis, active, index, budget);
      if (!h.is_zero()) add_element(std::move(h));
    } catch (const EffortExceeded&) {
      result.status = GBStatus::Aborted;
      result.truncated_at = t.degree;
      break;
    }
  }

  // Canonical reduced basis from the surviving active elements.
  std::vector<NcPoly> final_basis;
  for (std::size_t g = 0; g < basis.size(); ++g)
    if (active[g]) final_basis.push_back(basis[g]);
  std::sort(final_basis.begin(), final_basis.end(),
            [](const NcPoly& a, const NcPoly& b) {
              return DegLexLess()(a.leading_word(), b.leading_word());
            });
  // Drop leading-word multiples, then reduce tails.
  std::vector<NcPoly> minimal;
  for (const NcPoly& g : final_basis) {
    bool covered = false;
    for (const NcPoly& h : minimal)
      if (g.leading_word().find(h.leading_word()) != FreeWord::npos) {
        covered = true;
        break;
      }
    if (!covered) minimal.push_back(g);
  }
  // An aborted run keeps the partial basis as-is: every element is still in
  // the ideal (sound for upper bounds), but tail reduction against huge
  // coefficients is exactly the work the budget refused.
  if (result.status != GBStatus::Aborted) {
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      minimal[i] = minimal[i].monic();
      std::vector<NcPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      NcPoly lead = NcPoly::word(minimal[i].leading_word());
      NcPoly tail = minimal[i] - lead;
      if (others.empty())
        minimal[i] = lead + tail;
      else
        minimal[i] = lead + reduce(tail, others);
    }
  }
  result.basis = std::move(minimal);
  return result;
}

std::vector<FreeWord> GroebnerResult::leading_words() const {
  std::vector<FreeWord> lws;
  lws.reserve(basis.size());
  for (const NcPoly& g : basis) lws.push_back(g.leading_word());
  return lws;
}

// ---------------------------------------------------------------------------
// Standard words via the factor-avoidance automaton.

namespace {

// Deterministic automaton on words avoiding the given factors. States are
// the live prefixes of the factor set.
struct AvoidAutomaton {
  std::vector<std::vector<int>> next;  // state x letter -> state, -1 = dead
  int start = 0;

  AvoidAutomaton(const std::vector<FreeWord>& factors, int alphabet) {
    std::set<FreeWord> prefixes;
    prefixes.insert(FreeWord());
    for (const FreeWord& f : factors)
      for (std::size_t k = 0; k + 1 <= f.size(); ++k) prefixes.insert(f.substr(0, k));
    std::unordered_set<std::string> factor_set(factors.begin(), factors.end());

    std::map<FreeWord, int> ids;
    std::vector<FreeWord> words;
    auto intern = [&](const FreeWord& w) {
      auto [it, inserted] = ids.emplace(w, static_cast<int>(words.size()));
      if (inserted) {
        words.push_back(w);
        next.emplace_back(static_cast<std::size_t>(alphabet), -2);  // -2 = unexplored
      }
      return it->second;
    };
    if (factor_set.count(FreeWord())) {  // unit ideal: everything dead
      intern(FreeWord());
      for (auto& row : next) std::fill(row.begin(), row.end(), -1);
      dead_start = true;
      return;
    }
    start = intern(FreeWord());
    for (std::size_t s = 0; s < words.size(); ++s)
      for (int c = 0; c < alphabet; ++c) {
        FreeWord w = words[s] + static_cast<char>(c);
        // Dead if some factor is a suffix of w.
        bool dead = false;
        for (const FreeWord& f : factors)
          if (f.size() <= w.size() &&
              w.compare(w.size() - f.size(), f.size(), f) == 0) {
            dead = true;
            break;
          }
        if (dead) {
          next[s][static_cast<std::size_t>(c)] = -1;
          continue;
        }
        // Longest suffix of w that is a live prefix.
        for (std::size_t k = 0; k <= w.size(); ++k) {
          FreeWord suf = w.substr(k);
          if (prefixes.count(suf)) {
            next[s][static_cast<std::size_t>(c)] = intern(suf);
            break;
          }
        }
      }
  }

  bool dead_start = false;

  bool has_cycle() const {
    if (dead_start) return false;
    std::vector<int> color(next.size(), 0);
    std::vector<std::pair<int, int>> stack{{start, 0}};
    color[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      auto& [u, ci] = stack.back();
      if (ci == static_cast<int>(next[static_cast<std::size_t>(u)].size())) {
        color[static_cast<std::size_t>(u)] = 2;
        stack.pop_back();
        continue;
      }
      int v = next[static_cast<std::size_t>(u)][static_cast<std::size_t>(ci++)];
      if (v < 0) continue;
      if (color[static_cast<std::size_t>(v)] == 1) return true;
      if (color[static_cast<std::size_t>(v)] == 0) {
        color[static_cast<std::size_t>(v)] = 1;
        stack.emplace_back(v, 0);
      }
    }
    return false;
  }

  // Counts of accepted words per degree 0..max_degree (max_degree < 0 means
  // run until a degree has no words; only valid for acyclic automata).
  std::vector<long> count_by_degree(int max_degree) const {
    std::vector<long> counts;
    if (dead_start) {
      counts.assign(static_cast<std::size_t>(std::max(0, max_degree) + 1), 0);
      if (max_degree < 0) counts.assign(1, 0);
      return counts;
    }
    std::vector<long> cur(next.size(), 0);
    cur[static_cast<std::size_t>(start)] = 1;
    for (int d = 0;; ++d) {
      long total = 0;
      for (long x : cur) total += x;
      counts.push_back(total);
      if (max_degree >= 0 && d == max_degree) break;
      if (max_degree < 0 && total == 0) {
        counts.pop_back();
        break;
      }
      std::vector<long> nxt(next.size(), 0);
      for (std::size_t s = 0; s < next.size(); ++s) {
        if (cur[s] == 0) continue;
        for (int v : next[s])
          if (v >= 0) nxt[static_cast<std::size_t>(v)] += cur[s];
      }
      cur = std::move(nxt);
    }
    return counts;
  }
};

}  // namespace

Dimension dimension(const GroebnerResult& r, int num_gens) {
  const int alphabet = std::max(0, num_gens);
  AvoidAutomaton aut(r.leading_words(), alphabet);
  if (r.status != GBStatus::Complete) {
    Dimension d;
    d.kind = Dimension::Unknown;
    long total = 0;
    for (long x : aut.count_by_degree(std::max(0, r.truncated_at - 1))) total += x;
    d.value = total;
    return d;
  }
  if (aut.has_cycle()) return Dimension{Dimension::Infinite, 0};
  long total = 0;
  for (long x : aut.count_by_degree(-1)) total += x;
  return Dimension{Dimension::Finite, total};
}

Dimension dimension_upper_bound(const GroebnerResult& r, int num_gens) {
  const int alphabet = std::max(0, num_gens);
  AvoidAutomaton aut(r.leading_words(), alphabet);
  if (aut.has_cycle()) return Dimension{Dimension::Infinite, 0};
  long total = 0;
  for (long x : aut.count_by_degree(-1)) total += x;
  return Dimension{Dimension::Finite, total};
}

std::vector<FreeWord> standard_words(const GroebnerResult& r, int num_gens, int max_degree) {
  std::vector<FreeWord> lws = r.leading_words();
  auto is_standard_ext = [&](const FreeWord& w) {
    for (const FreeWord& f : lws)
      if (f.size() <= w.size() && w.compare(w.size() - f.size(), f.size(), f) == 0)
        return false;
    return true;
  };
  std::vector<FreeWord> out;
  std::vector<FreeWord> level;
  for (const FreeWord& f : lws)
    if (f.empty()) return out;
  level.push_back(FreeWord());
  for (int d = 0; d <= max_degree && !level.empty(); ++d) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<FreeWord> nxt;
    if (d == max_degree) break;
    for (const FreeWord& w : level)
      for (int c = 0; c < num_gens; ++c) {
        FreeWord v = w + static_cast<char>(c);
        if (is_standard_ext(v)) nxt.push_back(std::move(v));
      }
    level = std::move(nxt);
  }
  return out;
}

std::vector<long> standard_word_counts(const GroebnerResult& r, int num_gens, int max_degree) {
  AvoidAutomaton aut(r.leading_words(), std::max(0, num_gens));
  return aut.count_by_degree(max_degree);
}

std::vector<long> hilbert_function(const Presentation& p, int n) {
  for (const NcPoly& r : p.relations) {
    if (r.is_zero()) continue;
    std::size_t deg = r.leading_word().size();
    for (const auto& [w, c] : r.terms())
      if (w.size() != deg) throw std::invalid_argument("inhomogeneous relation");
  }
  GroebnerResult gb = buchberger(p, n);
  return standard_word_counts(gb, p.num_gens(), n);
}

}  // namespace coxflat
