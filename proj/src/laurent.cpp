#include "coxflat/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace coxflat {

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, Rational c) {
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, const std::string& name,
                                  int power) {
  LaurentPoly p(std::move(vars));
  auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
  if (it == p.vars_.end()) throw std::invalid_argument("unknown variable: " + name);
  Exponents e(p.vars_.size(), 0);
  e[static_cast<std::size_t>(it - p.vars_.begin())] = power;
  p.terms_[e] = Rational(1);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponents e, Rational c) {
  LaurentPoly p(std::move(vars));
  if (e.size() != p.vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  if (c != 0) p.terms_[std::move(e)] = std::move(c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable context mismatch");
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(e1);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_monomial()) throw std::domain_error("inverse of a non-monomial Laurent polynomial");
  const auto& [e, c] = *terms_.begin();
  Exponents ne(e);
  for (int& x : ne) x = -x;
  return monomial(vars_, std::move(ne), Rational(1) / c);
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  LaurentPoly r = constant(vars_, Rational(1));
  LaurentPoly base = *this;
  for (int k = n; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    if (k > 1) base = base * base;
  }
  return r;
}

Rational LaurentPoly::evaluate(const std::map<std::string, Rational>& point) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end()) throw std::invalid_argument("unbound variable: " + vars_[i]);
      if (it->second == 0 && e[i] < 0) throw std::domain_error("zero to a negative power");
      Rational v(1);
      Rational base = it->second;
      int n = e[i] < 0 ? -e[i] : e[i];
      for (int j = 0; j < n; ++j) v *= base;
      if (e[i] < 0) v = Rational(1) / v;
      term *= v;
    }
    total += term;
  }
  return total;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(c);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i] != 0) os << "*" << vars_[i] << "^" << e[i];
  }
  return os.str();
}

namespace {

// e_0..e_k via the usual one-pass DP.
template <class T>
T elementary_symmetric_impl(const std::vector<T>& xs, int k, T one, T zero) {
  if (k < 0 || static_cast<std::size_t>(k) > xs.size())
    throw std::invalid_argument("elementary_symmetric: k out of range");
  std::vector<T> e(static_cast<std::size_t>(k) + 1, zero);
  e[0] = one;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j)
      e[static_cast<std::size_t>(j)] =
          e[static_cast<std::size_t>(j)] + xs[i] * e[static_cast<std::size_t>(j - 1)];
  return e[static_cast<std::size_t>(k)];
}

}  // namespace

Rational elementary_symmetric(const std::vector<Rational>& xs, int k) {
  return elementary_symmetric_impl(xs, k, Rational(1), Rational(0));
}

LaurentPoly elementary_symmetric(const std::vector<LaurentPoly>& xs, int k) {
  if (xs.empty()) {
    if (k == 0) return LaurentPoly::constant({}, Rational(1));
    throw std::invalid_argument("elementary_symmetric: k out of range");
  }
  LaurentPoly one = LaurentPoly::constant(xs[0].vars(), Rational(1));
  LaurentPoly zero(xs[0].vars());
  return elementary_symmetric_impl(xs, k, one, zero);
}

}  // namespace coxflat
