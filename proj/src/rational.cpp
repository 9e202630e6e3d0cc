#include "qsh/rational.hpp"

#include "qsh/errors.hpp"

namespace qsh {

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(Integer(strip_plus(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw ParseError("not a rational: '" + std::string(text) + "'");
  Integer d(strip_plus(den));
  if (d == 0) throw DivisionByZero();
  Rational r(Integer(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

Rational ratio(long p, long q) {
  if (q == 0) throw DivisionByZero();
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace qsh
