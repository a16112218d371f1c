#include "coxflat/rewrite.hpp"

#include <deque>
#include <stdexcept>

namespace coxflat {

Rational ThetaPoint::t(int i, int j) const {
  auto it = entries.find(edge_key(i, j));
  if (it == entries.end()) throw std::out_of_range("theta edge not present");
  return i < j ? it->second : 1 / it->second;
}

void ThetaPoint::set(int i, int j, Rational value) {
  if (i == j) throw std::invalid_argument("edge endpoints must differ");
  if (value == 0) throw std::invalid_argument("zero theta weight");
  entries[edge_key(i, j)] = i < j ? std::move(value) : 1 / value;
}

ScalarRewriter::ScalarRewriter(CoxeterMatrix m, ThetaPoint t, SquareRule rule,
                               std::size_t braid_cap)
    : m_(std::move(m)), t_(std::move(t)), rule_(rule), braid_cap_(braid_cap) {}

ScalarRewriter::Result ScalarRewriter::rewrite(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  Result r = rewrite_uncached(w);
  std::lock_guard<std::mutex> lock(mutex_);
  memo_[w] = r;
  return r;
}

ScalarRewriter::Result ScalarRewriter::rewrite_uncached(const Word& w) const {
  if (w.empty()) return {Rational(1), {}};

  // Close the braid class of w, tracking c_v with w = c_v * v. Words in a
  // class share a length, so plain lexicographic map order is ShortLex.
  std::map<Word, Rational> cls;
  cls[w] = 1;
  std::deque<const Word*> queue;
  queue.push_back(&cls.begin()->first);
  while (!queue.empty()) {
    const Word x = *queue.front();
    queue.pop_front();
    const Rational cx = cls.at(x);
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (p + 1 >= x.size()) break;
      int a = x[p], b = x[p + 1];
      if (a == b) continue;
      int m = m_.order(a, b);
      if (!order_is_finite(m) || p + static_cast<std::size_t>(m) > x.size()) continue;
      bool alternating = true;
      for (int q = 0; q < m; ++q)
        if (x[p + static_cast<std::size_t>(q)] != (q % 2 ? b : a)) {
          alternating = false;
          break;
        }
      if (!alternating) continue;
      Word y = x;
      for (int q = 0; q < m; ++q) y[p + static_cast<std::size_t>(q)] = q % 2 ? a : b;
      Rational factor = t_.has_edge(a, b) ? t_.t(b, a) : Rational(1);
      if (m % 2 == 0) factor = -factor;
      Rational cy = cx * factor;
      auto [it, inserted] = cls.emplace(std::move(y), cy);
      if (!inserted) {
        if (it->second != cy)
          throw std::invalid_argument("inconsistent rewriting weights");
      } else {
        if (cls.size() > braid_cap_) throw InconclusiveError("braid class cap exceeded");
        queue.push_back(&it->first);
      }
    }
  }

  // Delete (or annihilate on) the leftmost pair of the least deletable word.
  for (const auto& [v, cv] : cls) {
    for (std::size_t p = 0; p + 1 < v.size(); ++p) {
      if (v[p] != v[p + 1]) continue;
      if (rule_ == SquareRule::Annihilate) return {Rational(0), {}};
      Word shorter;
      shorter.reserve(v.size() - 2);
      shorter.insert(shorter.end(), v.begin(), v.begin() + static_cast<long>(p));
      shorter.insert(shorter.end(), v.begin() + static_cast<long>(p) + 2, v.end());
      Result sub = rewrite(shorter);
      return {cv * sub.scalar, sub.normal};
    }
  }

  // Reduced: the class minimum is the normal form.
  const auto& [min_word, c_min] = *cls.begin();
  return {c_min, min_word};
}

}  // namespace coxflat
