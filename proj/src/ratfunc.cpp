#include "qsh/ratfunc.hpp"

#include <algorithm>

#include "qsh/errors.hpp"
#include "qsh/gcd.hpp"

namespace qsh {

namespace {

Poly divide(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("RatFunc: inexact division by a gcd");
  return std::move(*q);
}

}  // namespace

RatFunc RatFunc::normalized(Poly num, Poly den) {
  if (num.is_zero()) return RatFunc();
  const Rational lc = den.leading_coefficient();
  if (lc != 1) {
    const Rational s = 1 / lc;
    num = num.scaled(s);
    den = den.scaled(s);
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc RatFunc::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RatFunc();
  if (den.is_constant()) return RatFunc(num.scaled(1 / den.constant_term()));
  const Poly g = gcd(num, den);
  if (g.is_one()) return normalized(num, den);
  return normalized(divide(num, g), divide(den, g));
}

std::vector<VarId> RatFunc::vars() const {
  std::vector<VarId> out;
  std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(), den_.vars().end(),
                 std::back_inserter(out));
  return out;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc::fraction(a.num_ + b.num_, a.den_);
  if (b.is_poly()) return RatFunc::normalized(a.num_ + b.num_ * a.den_, a.den_);
  if (a.is_poly()) return RatFunc::normalized(a.num_ * b.den_ + b.num_, b.den_);
  const Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) return RatFunc::normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  const Poly bd = divide(a.den_, g), dd = divide(b.den_, g);
  Poly n = a.num_ * dd + b.num_ * bd;
  if (n.is_zero()) return RatFunc();
  const Poly h = gcd(n, g);
  if (h.is_one()) return RatFunc::normalized(std::move(n), bd * b.den_);
  return RatFunc::normalized(divide(n, h), bd * divide(b.den_, h));
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ * b.num_);
  const Poly g1 = a.num_.is_constant() || b.is_poly() ? Poly(1L) : gcd(a.num_, b.den_);
  const Poly g2 = b.num_.is_constant() || a.is_poly() ? Poly(1L) : gcd(b.num_, a.den_);
  Poly n1 = g1.is_one() ? a.num_ : divide(a.num_, g1);
  Poly d2 = g1.is_one() ? b.den_ : divide(b.den_, g1);
  Poly n2 = g2.is_one() ? b.num_ : divide(b.num_, g2);
  Poly d1 = g2.is_one() ? a.den_ : divide(a.den_, g2);
  return RatFunc::normalized(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return normalized(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), 0);
}

namespace {

RatFunc substitute_poly(const Poly& p, const std::map<VarId, RatFunc>& values) {
  const auto& vars = p.vars();
  std::vector<const RatFunc*> image(vars.size(), nullptr);
  bool any = false;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    auto it = values.find(vars[k]);
    if (it != values.end()) {
      image[k] = &it->second;
      any = true;
    }
  }
  if (!any) return RatFunc(p);
  std::vector<std::vector<RatFunc>> powers(vars.size());
  auto power = [&](std::size_t k, unsigned e) -> const RatFunc& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(RatFunc(1L));
    while (cache.size() <= e) cache.push_back(cache.back() * *image[k]);
    return cache[e];
  };
  std::vector<RatFunc> terms;
  terms.reserve(p.num_terms());
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    auto row = p.exponents(t);
    std::vector<VarId> kept_vars;
    std::vector<Poly::Exponent> kept_exps;
    RatFunc term(p.coeff(t));
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (!row[k]) continue;
      if (image[k]) {
        term *= power(k, row[k]);
      } else {
        kept_vars.push_back(vars[k]);
        kept_exps.push_back(row[k]);
      }
    }
    if (!kept_vars.empty()) term *= RatFunc(Poly::from_terms(kept_vars, kept_exps, {Rational(1)}));
    terms.push_back(std::move(term));
  }
  return sum(terms);
}

}  // namespace

RatFunc RatFunc::substitute(const std::map<VarId, RatFunc>& values) const {
  const RatFunc d = substitute_poly(den_, values);
  if (d.is_zero()) throw EvaluationPole("substitution makes the denominator vanish");
  return substitute_poly(num_, values) / d;
}

RatFunc RatFunc::rename(const std::function<VarId(const VarId&)>& f) const {
  Poly n = num_.rename(f);
  if (is_poly()) return RatFunc(std::move(n));
  Poly d = den_.rename(f);
  std::vector<VarId> images;
  for (const auto& v : vars()) images.push_back(f(v));
  std::sort(images.begin(), images.end());
  // An injective renaming keeps the pair coprime but may move the leading term.
  if (std::adjacent_find(images.begin(), images.end()) == images.end()) return normalized(std::move(n), std::move(d));
  return fraction(n, d);
}

std::string RatFunc::str() const {
  if (is_poly()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc sum(const std::vector<RatFunc>& terms) {
  std::vector<const RatFunc*> nonzero;
  for (const auto& t : terms)
    if (!t.is_zero()) nonzero.push_back(&t);
  if (nonzero.empty()) return RatFunc();
  if (nonzero.size() == 1) return *nonzero[0];
  Poly common(1L);
  for (const auto* t : nonzero) {
    const Poly& d = t->den();
    if (d.is_one() || d == common) continue;
    if (common.is_one()) {
      common = d;
      continue;
    }
    if (common.divisible_by(d)) continue;
    if (auto q = d.divide_exact(common)) {
      common = d;
      continue;
    }
    const Poly g = gcd(common, d);
    common = common * divide(d, g);
  }
  Poly n;
  for (const auto* t : nonzero) n += t->den() == common ? t->num() : t->num() * divide(common, t->den());
  // Symmetrized sums are usually polynomial.
  if (auto q = n.divide_exact(common)) return RatFunc(std::move(*q));
  return RatFunc::fraction(n, common);
}

}  // namespace qsh
