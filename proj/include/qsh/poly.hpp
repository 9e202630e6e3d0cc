#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsh/rational.hpp"
#include "qsh/var.hpp"

namespace qsh {

// Sparse multivariate polynomial over ℚ in canonical form.
//
// Terms are stored in descending graded-lexicographic order over the fixed
// VarId order (the first variable in VarId order is the most significant).
// Only variables that occur with a positive exponent are listed, and no zero
// coefficient is stored, so two polynomials are equal iff their storage is.
class Poly {
 public:
  using Exponent = std::uint16_t;

  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}
  static Poly variable(const VarId& v, unsigned exponent = 1);

  // Builds a canonical polynomial from raw terms. `vars` must be distinct;
  // `exps` is row-major with vars.size() entries per term.
  static Poly from_terms(std::vector<VarId> vars, std::vector<Exponent> exps, std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool is_one() const;
  std::size_t num_terms() const { return coeffs_.size(); }
  const std::vector<VarId>& vars() const { return vars_; }
  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * vars_.size(), vars_.size()};
  }
  const Rational& coeff(std::size_t term) const { return coeffs_[term]; }
  // Coefficient of the grlex-largest term; zero for the zero polynomial.
  Rational leading_coefficient() const;
  Rational constant_term() const;
  unsigned total_degree() const;
  unsigned degree_in(const VarId& v) const;
  bool contains(const VarId& v) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned e) const;

  // Exact division; nullopt when `d` does not divide *this. Throws DivisionByZero.
  std::optional<Poly> divide_exact(const Poly& d) const;
  bool divisible_by(const Poly& d) const { return divide_exact(d).has_value(); }

  // Scaled so the leading coefficient is 1 (zero stays zero).
  Poly monic() const;
  // Drops every term of total degree >= bound.
  Poly truncated(unsigned bound) const;
  // Rational content made integral and primitive: *this == c * result with
  // result having coprime integer coefficients and positive leading coefficient.
  std::pair<Rational, Poly> integer_primitive() const;

  // Groups terms by their exponents on `vars` (which need not occur).
  // Each entry is (exponents on vars, coefficient polynomial in the rest).
  std::vector<std::pair<std::vector<Exponent>, Poly>> coefficients_wrt(const std::vector<VarId>& vars) const;
  // result[e] is the coefficient of v^e.
  std::vector<Poly> coefficients_in(const VarId& v) const;

  // Applies a variable renaming; colliding images multiply together.
  Poly rename(const std::function<VarId(const VarId&)>& f) const;

  // Canonical text: terms in descending monomial order, coefficients "p/q".
  std::string str() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  std::vector<VarId> vars_;
  std::vector<Exponent> exps_;
  std::vector<Rational> coeffs_;
};

// -1, 0 or 1 comparing two exponent rows of equal length in grlex order.
int compare_grlex(std::span<const Poly::Exponent> a, std::span<const Poly::Exponent> b);

}  // namespace qsh
