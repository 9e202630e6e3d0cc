#pragma once

#include <string>

#include "qsh/quiver.hpp"
#include "qsh/ratfunc.hpp"

namespace qsh {

struct RelationCheck {
  bool verified = false;
  // Zero when verified; otherwise the numerator of the failing difference.
  RatFunc witness;
  std::string note;
};

// Spectral parameters of the generating series x_k(u) = Σ_r x_{k,r} u^{-r-1}.
const VarId& u_var();
const VarId& v_var();

// The quadratic relation
//   (u - v - ħc/2) x_k(u) x_l(v) - (u - v + ħc/2) x_l(v) x_k(u)
//     = ħ([x_{k,0}, x_l(v)] - [x_k(u), x_{l,0}])
// in the twisted shuffle algebra, with x_k(u) = ħ/(u - λ^{(k)}), additive law
// and case-2 weights at t1 = t2 = ħ/2 (ħ with full_hbar). Throws
// EdgeLoopRejected when the quiver has loops.
RelationCheck check_quadratic(const Quiver& Q, const std::string& k, const std::string& l, bool full_hbar = false);

// The same relation coefficient by coefficient: for r, s ≤ max_power, the
// u^{-r-1} v^{-s-1} coefficient of the series identity, and the polynomial
// identity [x_{k,r+1}, x_{l,s}] - [x_{k,r}, x_{l,s+1}] = ħc/2 {x_{k,r}, x_{l,s}}
// computed directly with generators (λ^{(k)})^r.
RelationCheck check_quadratic_coefficients(const Quiver& Q, const std::string& k, const std::string& l,
                                           int max_power = 2, bool full_hbar = false);

// Σ_p (-1)^p C(a+1, p) x_k^p x_l x_k^{a+1-p} = 0 with a = -c_kl, by direct
// twisted products, and 𝕊(a+1, a/2, ħ) = 0. Non-adjacent pairs are
// vacuously verified with a note.
RelationCheck check_serre(const Quiver& Q, const std::string& k, const std::string& l, bool full_hbar = false);

// x_{k,0}^n = (-1)^{n(n+1)/2 - 1} Σ_{σ ∈ 𝔖_n} σ(∏_{i<j} (λ_ij + ħ)/λ_ji)
// in the twisted algebra of a single vertex without loops.
RelationCheck power_formula_check(int n);

}  // namespace qsh
