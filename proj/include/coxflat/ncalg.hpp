#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxflat/rational.hpp"

namespace coxflat {

// A word in the free monoid; each char is a generator index.
using FreeWord = std::string;

// Degree-compatible order: total degree, then lex in declaration order.
struct DegLexLess {
  bool operator()(const FreeWord& a, const FreeWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Noncommutative polynomial over Q with deglex-ordered terms.
class NcPoly {
 public:
  using TermMap = std::map<FreeWord, Rational, DegLexLess>;

  NcPoly() = default;
  static NcPoly constant(Rational c);
  static NcPoly one() { return constant(Rational(1)); }
  static NcPoly gen(int i);
  static NcPoly word(FreeWord w, Rational c = Rational(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const FreeWord& leading_word() const;
  const Rational& leading_coeff() const;
  int degree() const;  // -1 for zero

  NcPoly operator-() const;
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

  NcPoly scaled(const Rational& c) const;
  NcPoly monic() const;
  NcPoly pow(int n) const;
  // a * p * b with words a, b.
  NcPoly framed(const FreeWord& left, const FreeWord& right) const;

  void add_term(const FreeWord& w, const Rational& c);

  std::string str(const std::vector<std::string>& gen_names) const;

 private:
  TermMap terms_;
};

struct Presentation {
  std::vector<std::string> gen_names;
  std::vector<NcPoly> relations;

  int num_gens() const { return static_cast<int>(gen_names.size()); }
};

enum class GBStatus { Complete, Truncated, Aborted };

struct GroebnerResult {
  std::vector<NcPoly> basis;  // monic, interreduced, sorted by leading word
  GBStatus status = GBStatus::Complete;
  int truncated_at = -1;  // first unprocessed obstruction degree when Truncated

  std::vector<FreeWord> leading_words() const;
};

// Overlap completion in deglex order, obstructions processed by increasing
// degree. Complete iff the obstruction queue empties below the cap.
// A nonnegative effort_cap bounds the total reduction work (elimination
// steps weighted by coefficient size); when exceeded the run returns
// status Aborted with the partial basis accumulated so far (every element
// lies in the ideal, but tails are not interreduced and coefficients are
// coprime integers rather than monic).
GroebnerResult buchberger(const Presentation& p, int degree_cap, long effort_cap = -1);

// Full normal form of p modulo a monic basis.
NcPoly reduce(const NcPoly& p, const std::vector<NcPoly>& basis);

struct Dimension {
  enum Kind { Finite, Infinite, Unknown } kind = Unknown;
  long value = 0;  // count when Finite; degree-bounded lower bound when Unknown

  bool operator==(const Dimension& o) const { return kind == o.kind && value == o.value; }
};

Dimension dimension(const GroebnerResult& r, int num_gens);

// Exact upper bound from any (possibly truncated or aborted) basis: words
// avoiding the leading words span the quotient, so an acyclic automaton
// gives a valid Finite bound even without completion.
Dimension dimension_upper_bound(const GroebnerResult& r, int num_gens);

// Words with no basis leading word as a factor, up to the given degree.
std::vector<FreeWord> standard_words(const GroebnerResult& r, int num_gens, int max_degree);
std::vector<long> standard_word_counts(const GroebnerResult& r, int num_gens, int max_degree);

// Exact graded dimensions 0..N; throws on an inhomogeneous relation.
std::vector<long> hilbert_function(const Presentation& p, int n);

// Text DSL: `gens: a, b; rel: a*b - 1; rel: (a - 3/2)^2;`
Presentation parse_presentation(const std::string& text);
NcPoly parse_nc_poly(const std::string& expr, const std::vector<std::string>& gen_names);
std::string format_presentation(const Presentation& p);

}  // namespace coxflat
