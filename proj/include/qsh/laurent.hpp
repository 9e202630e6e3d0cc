#pragma once

#include <vector>

#include "qsh/ratfunc.hpp"

namespace qsh {

// c_0 + c_1 z^-1 + ... + c_{N-1} z^-(N-1) + O(z^-N) with rational-function
// coefficients. Arithmetic is exact modulo z^-N.
class LaurentTail {
 public:
  explicit LaurentTail(int order);
  explicit LaurentTail(std::vector<RatFunc> coeffs);
  static LaurentTail constant(const RatFunc& c, int order);

  // Expansion of f at z = ∞. f must be a rational function of z whose
  // numerator degree in z does not exceed the denominator degree.
  static LaurentTail expand_at_infinity(const RatFunc& f, const VarId& z, int order);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const RatFunc& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }

  friend LaurentTail operator+(const LaurentTail& a, const LaurentTail& b);
  friend LaurentTail operator-(const LaurentTail& a, const LaurentTail& b);
  friend LaurentTail operator*(const LaurentTail& a, const LaurentTail& b);
  LaurentTail scaled(const RatFunc& c) const;
  // Requires c_0 ≠ 0; throws DivisionByZero otherwise.
  LaurentTail inverse() const;
  LaurentTail rename(const std::function<VarId(const VarId&)>& f) const;
  LaurentTail substitute(const std::map<VarId, RatFunc>& values) const;

  friend bool operator==(const LaurentTail&, const LaurentTail&) = default;

 private:
  std::vector<RatFunc> coeffs_;
};

}  // namespace qsh
