#pragma once

#include "qsh/poly.hpp"

namespace qsh {

// Greatest common divisor in ℚ[vars], scaled to leading coefficient 1.
// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qsh
