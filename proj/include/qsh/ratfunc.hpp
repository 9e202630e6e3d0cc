#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsh/poly.hpp"

namespace qsh {

// Canonical rational function over ℚ: gcd(num, den) = 1 and den has leading
// coefficient 1 in the grlex order. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1L) {}
  RatFunc(const Poly& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const Rational& c) : num_(c), den_(1L) {}
  explicit RatFunc(long c) : num_(c), den_(1L) {}
  static RatFunc variable(const VarId& v) { return RatFunc(Poly::variable(v)); }
  static RatFunc param(const std::string& name) { return variable(VarId::param(name)); }
  static RatFunc lambda(const std::string& vertex, int slot) { return variable(VarId::lambda(vertex, slot)); }
  // Reduces num/den to canonical form. Throws DivisionByZero for den = 0.
  static RatFunc fraction(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Only meaningful when is_constant().
  Rational constant_value() const { return num_.constant_term(); }
  bool contains(const VarId& v) const { return num_.contains(v) || den_.contains(v); }
  std::vector<VarId> vars() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  // Simultaneous substitution of variables by rational functions.
  // Throws EvaluationPole when the denominator vanishes.
  RatFunc substitute(const std::map<VarId, RatFunc>& values) const;
  RatFunc rename(const std::function<VarId(const VarId&)>& f) const;

  // "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string str() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

 private:
  RatFunc(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc normalized(Poly num, Poly den);

  Poly num_;
  Poly den_;
};

// Sum over a common denominator with a single final reduction.
RatFunc sum(const std::vector<RatFunc>& terms);

}  // namespace qsh
