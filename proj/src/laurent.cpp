#include "qsh/laurent.hpp"

#include <algorithm>

#include "qsh/errors.hpp"

namespace qsh {

LaurentTail::LaurentTail(int order) {
  if (order < 1) throw InvalidInput("series order must be positive");
  coeffs_.resize(static_cast<std::size_t>(order));
}

LaurentTail::LaurentTail(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("series order must be positive");
}

LaurentTail LaurentTail::constant(const RatFunc& c, int order) {
  LaurentTail s(order);
  s.coeffs_[0] = c;
  return s;
}

LaurentTail LaurentTail::expand_at_infinity(const RatFunc& f, const VarId& z, int order) {
  LaurentTail s(order);
  const auto p = f.num().coefficients_in(z);
  const auto q = f.den().coefficients_in(z);
  const std::size_t dq = q.size() - 1;
  if (p.size() - 1 > dq) throw InvalidInput("expansion at infinity needs a proper rational function");
  // With w = 1/z, f = P(w)/Q(w) where a_i = p_{dq-i}, b_i = q_{dq-i}.
  auto a = [&](std::size_t i) { return i <= dq && dq - i < p.size() ? RatFunc(p[dq - i]) : RatFunc(); };
  auto b = [&](std::size_t i) { return i <= dq ? RatFunc(q[dq - i]) : RatFunc(); };
  const RatFunc b0_inv = b(0).inverse();
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
    std::vector<RatFunc> terms{a(i)};
    for (std::size_t j = 1; j <= std::min(i, dq); ++j) terms.push_back(-(b(j) * s.coeffs_[i - j]));
    s.coeffs_[i] = sum(terms) * b0_inv;
  }
  return s;
}

LaurentTail operator+(const LaurentTail& a, const LaurentTail& b) {
  LaurentTail s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return s;
}

LaurentTail operator-(const LaurentTail& a, const LaurentTail& b) {
  LaurentTail s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return s;
}

LaurentTail operator*(const LaurentTail& a, const LaurentTail& b) {
  LaurentTail s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
    std::vector<RatFunc> terms;
    for (std::size_t j = 0; j <= i; ++j)
      if (!a.coeffs_[j].is_zero() && !b.coeffs_[i - j].is_zero()) terms.push_back(a.coeffs_[j] * b.coeffs_[i - j]);
    s.coeffs_[i] = sum(terms);
  }
  return s;
}

LaurentTail LaurentTail::scaled(const RatFunc& c) const {
  LaurentTail s = *this;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

LaurentTail LaurentTail::inverse() const {
  const RatFunc c0_inv = coeffs_[0].inverse();
  LaurentTail s(order());
  s.coeffs_[0] = c0_inv;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    std::vector<RatFunc> terms;
    for (std::size_t j = 1; j <= i; ++j) terms.push_back(coeffs_[j] * s.coeffs_[i - j]);
    s.coeffs_[i] = -(sum(terms) * c0_inv);
  }
  return s;
}

LaurentTail LaurentTail::rename(const std::function<VarId(const VarId&)>& f) const {
  LaurentTail s = *this;
  for (auto& x : s.coeffs_) x = x.rename(f);
  return s;
}

LaurentTail LaurentTail::substitute(const std::map<VarId, RatFunc>& values) const {
  LaurentTail s = *this;
  for (auto& x : s.coeffs_) x = x.substitute(values);
  return s;
}

}  // namespace qsh
