#pragma once

#include <map>
#include <mutex>

#include "coxflat/coxeter.hpp"
#include "coxflat/deform.hpp"

namespace coxflat {

// Scalar weights t_{ij} per finite edge, with t_{ji} = t_{ij}^{-1}.
struct ThetaPoint {
  std::map<Edge, Rational> entries;

  Rational t(int i, int j) const;
  bool has_edge(int i, int j) const { return entries.count(edge_key(i, j)) > 0; }
  void set(int i, int j, Rational value);

  bool operator==(const ThetaPoint& o) const { return entries == o.entries; }
};

// Rewrites s-letter words to ShortLex normal form while accumulating a
// scalar: each braid move replacing the i-first alternating word of length
// m_{ij} by the j-first one contributes a factor (-1)^{m_{ij}+1} t_{ij}.
// Adjacent equal pairs are deleted at no cost (Delete) or kill the word
// (Annihilate, for the nil quotients of the graded algebras).
class ScalarRewriter {
 public:
  enum class SquareRule { Delete, Annihilate };

  ScalarRewriter(CoxeterMatrix m, ThetaPoint t, SquareRule rule,
                 std::size_t braid_cap = 1'000'000);

  struct Result {
    Rational scalar;  // 0 means the word vanishes (Annihilate only)
    Word normal;

    bool operator==(const Result& o) const {
      return scalar == o.scalar && normal == o.normal;
    }
  };

  // w = scalar * normal in the twisted/graded algebra. Throws
  // std::invalid_argument when two rewriting paths disagree (the weights are
  // not a consistent system) and InconclusiveError at the braid cap.
  Result rewrite(const Word& w) const;

  const CoxeterMatrix& matrix() const { return m_; }
  const ThetaPoint& theta() const { return t_; }

 private:
  Result rewrite_uncached(const Word& w) const;

  CoxeterMatrix m_;
  ThetaPoint t_;
  SquareRule rule_;
  std::size_t braid_cap_;
  mutable std::mutex mutex_;
  mutable std::map<Word, Result> memo_;
};

}  // namespace coxflat
