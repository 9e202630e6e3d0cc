#pragma once

#include "qsh/ratfunc.hpp"

namespace qsh {

// Default cap on n for the direct (n+1)·n!-term evaluation.
inline constexpr int kSerreDefaultLimit = 6;

const VarId& b_var();

// 𝕊(n, b, ħ) = Σ_{σ∈𝔖_n} σ( Σ_p (-1)^p C(n,p) ∏_{i≤p}(λ_i - bħ) ∏_{j>p}(λ_j + bħ)
//                             ∏_{i<j} (λ_ij + ħ)/λ_ji ), λ_ij = λ_i - λ_j.
// Throws LimitExceeded when n > limit.
RatFunc s_direct(int n, const RatFunc& b, const RatFunc& hbar, int limit = kSerreDefaultLimit);
// 𝕊(1) = 2ħb, 𝕊(n) = 𝕊(n-1)·(-1)^{n+1}·2ħn·(b - (n-1)/2).
RatFunc s_recursive(int n, const RatFunc& b, const RatFunc& hbar);

// Left minus right side of
//   plus:  Σ_j (λ_j + bħ) ∏_{i≠j} (λ_ij + ħ)/λ_ji = -(-1)^n ( nbħ + Σλ_i - ħ C(n,2))
//   minus: Σ_j (λ_j - bħ) ∏_{i≠j} (λ_ji + ħ)/λ_ij = -(-1)^n (-nbħ + Σλ_i + ħ C(n,2))
RatFunc residue_identity_difference(int n, bool plus, const RatFunc& b, const RatFunc& hbar,
                                    int limit = kSerreDefaultLimit);

bool lambda_free(const RatFunc& f);

}  // namespace qsh
