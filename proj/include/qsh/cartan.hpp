#pragma once

#include <string>

#include "qsh/fgl.hpp"
#include "qsh/laurent.hpp"
#include "qsh/quiver.hpp"

namespace qsh {

enum class WeightCase { Case1, Case2 };

struct CartanSeries {
  std::string vertex;
  WeightCase wcase;
  LaurentTail tail;
};

// The spectral variable z of the Cartan series.
const VarId& z_var();

// Φ̂_k(z, v) expanded at z = ∞ modulo z^-order. Case 1 keeps t1, t2 symbolic;
// Case 2 uses (c_ki)_F ħ/2. Only the additive and multiplicative laws are
// supported (NotTruncatable otherwise); Case 2 rejects loops at k.
CartanSeries phi_hat(const FormalGroupLaw& F, const Quiver& Q, const std::string& k, const DimVector& v, WeightCase c,
                     int order);

// Φ̂_k(z, v1) · Φ̂_k(z, v2) = Φ̂_k(z, v1 + v2), with v2's roots shifted past v1's.
bool phi_hat_multiplicativity_check(const FormalGroupLaw& F, const Quiver& Q, const std::string& k,
                                    const DimVector& v1, const DimVector& v2, WeightCase c, int order);

// [z^-1] of g·(Φ̂_k(z, e_j) - 1) minus c_kj·ħ·g for g = (λ^{(j)})^s, additive
// law, Case 2. Zero when the relation [h_k0, x_js] = c_kj x_js holds.
RatFunc cartan_commutator_leading(const Quiver& Q, const std::string& k, const std::string& j, int s, int order);

}  // namespace qsh
