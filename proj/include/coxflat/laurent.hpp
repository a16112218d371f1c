#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxflat/rational.hpp"

namespace coxflat {

// Multivariate Laurent polynomial over Q. All operands of a binary
// operation must share the same variable context (same names, same order).
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  LaurentPoly() = default;  // zero over the empty variable set
  explicit LaurentPoly(std::vector<std::string> vars);

  static LaurentPoly constant(std::vector<std::string> vars, Rational c);
  static LaurentPoly variable(std::vector<std::string> vars, const std::string& name,
                              int power = 1);
  static LaurentPoly monomial(std::vector<std::string> vars, Exponents e, Rational c);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const;

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly pow(int n) const;  // negative n allowed for monomials
  LaurentPoly inverse() const;   // monomials only

  // Division by an exact divisor is not needed; division by a unit is.
  LaurentPoly operator/(const LaurentPoly& o) const { return *this * o.inverse(); }

  Rational evaluate(const std::map<std::string, Rational>& point) const;

  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_compatible(const LaurentPoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

// e_k of the given values; e_0 = 1. Throws if k is out of range.
Rational elementary_symmetric(const std::vector<Rational>& xs, int k);
LaurentPoly elementary_symmetric(const std::vector<LaurentPoly>& xs, int k);

}  // namespace coxflat
