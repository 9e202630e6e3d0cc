#pragma once

#include <map>
#include <string>
#include <utility>

#include "qsh/ratfunc.hpp"

namespace qsh {

// A formal group law F(x, y): additive x + y, multiplicative x + y - βxy, or
// x + y + Σ_{i,j≥1} a_ij x^i y^j truncated at total degree N.
class FormalGroupLaw {
 public:
  enum class Kind { Additive, Multiplicative, Truncated };
  using Coeffs = std::map<std::pair<int, int>, Rational>;

  static FormalGroupLaw additive();
  static FormalGroupLaw multiplicative(RatFunc beta);
  // Only a_ij with i, j ≥ 1 and i + j < order are kept. Throws InvalidInput
  // when the coefficients are not symmetric or the law is not associative
  // modulo degree `order`.
  static FormalGroupLaw truncated(const Coeffs& coeffs, int order);

  Kind kind() const { return kind_; }
  const RatFunc& beta() const { return beta_; }
  const Coeffs& coeffs() const { return coeffs_; }
  int order() const { return order_; }

  // a +_F b. For truncated laws both inputs must be polynomials without
  // constant term (NotTruncatable otherwise) and the result is cut at degree N.
  RatFunc sum(const RatFunc& a, const RatFunc& b) const;
  // -_F a.
  RatFunc inverse(const RatFunc& a) const;
  // a -_F b.
  RatFunc difference(const RatFunc& a, const RatFunc& b) const;
  // t +_F ... +_F t (m times); negative m uses the inverse.
  RatFunc multiple(int m, const RatFunc& t) const;
  // (a - b, g) with a -_F b = (a - b)·g and g a unit.
  std::pair<RatFunc, RatFunc> unit_factor(const RatFunc& a, const RatFunc& b) const;

  // Truncated laws only: the cut-off of a power series in the substituted
  // variables, and the inverse of a series with constant term 1.
  Poly truncate(const Poly& p) const { return p.truncated(static_cast<unsigned>(order_)); }
  Poly unit_inverse(const Poly& g) const;

  std::string str() const;

 private:
  FormalGroupLaw() = default;
  Poly require_nilpotent(const RatFunc& a) const;
  Poly series_sum(const Poly& a, const Poly& b) const;
  Poly series_inverse(const Poly& a) const;

  Kind kind_ = Kind::Additive;
  RatFunc beta_;
  Coeffs coeffs_;
  int order_ = 0;
  // Truncated laws: u(x, y) with F(x, ι(y)) = (x - y)·u(x, y), in the private
  // parameters of x_var/y_var.
  Poly unit_series_;
};

}  // namespace qsh
