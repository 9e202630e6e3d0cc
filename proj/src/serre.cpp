#include "qsh/serre.hpp"

#include "qsh/errors.hpp"
#include "qsh/perm.hpp"
#include "qsh/shuffle.hpp"

namespace qsh {

namespace {

RatFunc root(int i) { return RatFunc::lambda("1", i); }

void check_n(int n, int limit) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (n > limit) throw LimitExceeded("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
}

}  // namespace

const VarId& b_var() {
  static const VarId v = VarId::param("b");
  return v;
}

RatFunc s_direct(int n, const RatFunc& b, const RatFunc& hbar, int limit) {
  check_n(n, limit);
  const RatFunc bh = b * hbar;
  std::vector<RatFunc> inner;
  for (int p = 0; p <= n; ++p) {
    RatFunc term(Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(p))));
    if (p % 2) term = -term;
    for (int i = 1; i <= p; ++i) term *= root(i) - bh;
    for (int j = p + 1; j <= n; ++j) term *= root(j) + bh;
    inner.push_back(term);
  }
  RatFunc kernel = sum(inner);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) kernel *= (root(i) - root(j) + hbar) / (root(j) - root(i));
  return symmetrize(kernel, full_symmetric_group("1", n));
}

RatFunc s_recursive(int n, const RatFunc& b, const RatFunc& hbar) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  RatFunc s = RatFunc(2L) * hbar * b;
  for (int m = 2; m <= n; ++m) {
    const long sign = (m + 1) % 2 == 0 ? 1 : -1;
    s *= RatFunc(2L * sign * m) * hbar * (b - RatFunc(ratio(m - 1, 2)));
  }
  return s;
}

RatFunc residue_identity_difference(int n, bool plus, const RatFunc& b, const RatFunc& hbar, int limit) {
  check_n(n, limit);
  const RatFunc bh = b * hbar;
  std::vector<RatFunc> terms;
  RatFunc roots_sum;
  for (int j = 1; j <= n; ++j) {
    roots_sum += root(j);
    RatFunc term = plus ? root(j) + bh : root(j) - bh;
    for (int i = 1; i <= n; ++i) {
      if (i == j) continue;
      const RatFunc lij = root(i) - root(j);
      term *= plus ? (lij + hbar) / (-lij) : (hbar - lij) / lij;
    }
    terms.push_back(term);
  }
  const RatFunc nbh = RatFunc(static_cast<long>(n)) * bh;
  const RatFunc pairs = RatFunc(Rational(binomial(static_cast<unsigned long>(n), 2))) * hbar;
  RatFunc rhs = plus ? nbh + roots_sum - pairs : -nbh + roots_sum + pairs;
  if (n % 2 == 0) rhs = -rhs;
  return sum(terms) - rhs;
}

bool lambda_free(const RatFunc& f) {
  for (const auto& v : f.vars())
    if (v.is_lambda()) return false;
  return true;
}

}  // namespace qsh
