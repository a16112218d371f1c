#include "coxflat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace coxflat {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto slash = t.find('/');
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw std::invalid_argument("malformed rational: '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> rational_nth_root(const Rational& q, unsigned n) {
  if (n == 0) throw std::invalid_argument("0th root");
  if (q == 0) return Rational(0);
  bool neg = q < 0;
  if (neg && n % 2 == 0) return std::nullopt;
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace coxflat
