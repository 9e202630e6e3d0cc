#include "qsh/yangian.hpp"

#include "qsh/errors.hpp"
#include "qsh/laurent.hpp"
#include "qsh/serre.hpp"
#include "qsh/shuffle.hpp"

namespace qsh {

namespace {

RatFunc hbar() { return RatFunc::variable(hbar_var()); }

ShuffleSetup yangian_setup(const Quiver& Q, const std::string& k, const std::string& l, bool full_hbar) {
  if (Q.has_loops()) throw EdgeLoopRejected("Yangian relations need a quiver without edge loops");
  if (!Q.has_vertex(k) || !Q.has_vertex(l)) throw InvalidInput("unknown vertex");
  return ShuffleSetup::case2(FormalGroupLaw::additive(), Q, full_hbar);
}

ShuffleElement gen(const std::string& vertex, const RatFunc& f) { return ShuffleElement{DimVector::unit(vertex), f}; }

RelationCheck verdict(const RatFunc& difference, std::string note = {}) {
  RelationCheck r;
  r.verified = difference.is_zero();
  r.witness = RatFunc(difference.num());
  r.note = std::move(note);
  return r;
}

// [x^n] of the polynomial-in-x expansion of a series known to order n + 1.
RatFunc coefficient_at_infinity(const RatFunc& f, const VarId& x, int n) {
  return LaurentTail::expand_at_infinity(f, x, n + 1)[n];
}

}  // namespace

const VarId& u_var() {
  static const VarId v = VarId::param("u");
  return v;
}

const VarId& v_var() {
  static const VarId v = VarId::param("v");
  return v;
}

namespace {

// Left minus right side of the generating-series relation.
RatFunc quadratic_difference(const ShuffleSetup& s, const std::string& k, const std::string& l) {
  const RatFunc u = RatFunc::variable(u_var()), v = RatFunc::variable(v_var()), h = hbar();
  const RatFunc half_c = RatFunc(static_cast<long>(s.quiver.cartan_entry(k, l))) * h / RatFunc(2L);
  const auto xk = gen(k, h / (u - RatFunc::lambda(k, 1)));
  const auto xl = gen(l, h / (v - RatFunc::lambda(l, 1)));
  const auto one_k = gen(k, RatFunc(1L)), one_l = gen(l, RatFunc(1L));
  auto mul = [&](const ShuffleElement& a, const ShuffleElement& b) { return twisted_product(s, a, b).f; };
  const RatFunc lhs = (u - v - half_c) * mul(xk, xl) - (u - v + half_c) * mul(xl, xk);
  const RatFunc rhs = h * sum({mul(one_k, xl), -mul(xl, one_k), -mul(xk, one_l), mul(one_l, xk)});
  return lhs - rhs;
}

}  // namespace

RelationCheck check_quadratic(const Quiver& Q, const std::string& k, const std::string& l, bool full_hbar) {
  const ShuffleSetup s = yangian_setup(Q, k, l, full_hbar);
  return verdict(quadratic_difference(s, k, l));
}

RelationCheck check_quadratic_coefficients(const Quiver& Q, const std::string& k, const std::string& l,
                                           int max_power, bool full_hbar) {
  const ShuffleSetup s = yangian_setup(Q, k, l, full_hbar);
  if (max_power < 0) throw InvalidInput("max_power must be non-negative");
  const RatFunc h = hbar();
  const RatFunc half_c = RatFunc(static_cast<long>(Q.cartan_entry(k, l))) * h / RatFunc(2L);
  auto x = [](const std::string& vertex, int r) {
    return gen(vertex, RatFunc(Poly::variable(VarId::lambda(vertex, 1), static_cast<unsigned>(r))));
  };
  auto mul = [&](const ShuffleElement& a, const ShuffleElement& b) { return twisted_product(s, a, b).f; };
  auto bracket = [&](const ShuffleElement& a, const ShuffleElement& b) { return mul(a, b) - mul(b, a); };

  // The series difference, expanded in u^{-1} and then v^{-1}: with w = 1/u,
  // the u^{-r-1} coefficient sits at index r + 1 of the expansion at u = ∞.
  const RatFunc series = quadratic_difference(s, k, l);
  for (int r = 0; r <= max_power; ++r) {
    const RatFunc in_v = coefficient_at_infinity(series, u_var(), r + 1);
    for (int t = 0; t <= max_power; ++t) {
      const RatFunc coeff = coefficient_at_infinity(in_v, v_var(), t + 1);
      const RatFunc direct = bracket(x(k, r + 1), x(l, t)) - bracket(x(k, r), x(l, t + 1)) -
                             half_c * (mul(x(k, r), x(l, t)) + mul(x(l, t), x(k, r)));
      if (!direct.is_zero())
        return verdict(direct, "generator identity fails at r = " + std::to_string(r) + ", s = " + std::to_string(t));
      if (coeff != h * h * direct)
        return verdict(coeff - h * h * direct,
                       "series coefficient disagrees at r = " + std::to_string(r) + ", s = " + std::to_string(t));
    }
  }
  return verdict(RatFunc());
}

RelationCheck check_serre(const Quiver& Q, const std::string& k, const std::string& l, bool full_hbar) {
  const ShuffleSetup s = yangian_setup(Q, k, l, full_hbar);
  if (k == l) throw InvalidInput("the Serre relation needs distinct vertices");
  const int a = -Q.cartan_entry(k, l);
  if (a == 0) return verdict(RatFunc(), "vertices are not adjacent; the relation is vacuous");

  const auto xk = gen(k, RatFunc(1L)), xl = gen(l, RatFunc(1L));
  std::vector<ShuffleElement> powers{ShuffleElement{DimVector(), RatFunc(1L)}};
  for (int p = 1; p <= a + 1; ++p) powers.push_back(twisted_product(s, powers.back(), xk));
  std::vector<RatFunc> terms;
  for (int p = 0; p <= a + 1; ++p) {
    const auto left = twisted_product(s, powers[static_cast<std::size_t>(p)], xl);
    RatFunc t = twisted_product(s, left, powers[static_cast<std::size_t>(a + 1 - p)]).f;
    t *= RatFunc(Rational(binomial(static_cast<unsigned long>(a + 1), static_cast<unsigned long>(p))));
    terms.push_back(p % 2 ? -t : t);
  }
  const RatFunc direct = sum(terms);
  if (!direct.is_zero()) return verdict(direct, "direct twisted products do not cancel");
  const RatFunc reduced = s_direct(a + 1, RatFunc(ratio(a, 2)), hbar(), std::max(a + 1, kSerreDefaultLimit));
  if (!reduced.is_zero()) return verdict(reduced, "reduced identity S(a+1, a/2) does not vanish");
  return verdict(RatFunc(), "a = " + std::to_string(a) + ": both routes vanish");
}

RelationCheck power_formula_check(int n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (n > kSerreDefaultLimit) throw LimitExceeded("n exceeds " + std::to_string(kSerreDefaultLimit));
  const ShuffleSetup s = ShuffleSetup::case2(FormalGroupLaw::additive(), Quiver::preset("A1"));
  const auto x = gen("1", RatFunc(1L));
  ShuffleElement power = x;
  for (int p = 2; p <= n; ++p) power = twisted_product(s, power, x);

  RatFunc kernel(1L);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const RatFunc lij = RatFunc::lambda("1", i) - RatFunc::lambda("1", j);
      kernel *= (lij + hbar()) / -lij;
    }
  RatFunc closed = symmetrize(kernel, full_symmetric_group("1", n));
  if ((n * (n + 1) / 2 - 1) % 2) closed = -closed;
  return verdict(power.f - closed);
}

}  // namespace qsh
