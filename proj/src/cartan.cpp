#include "qsh/cartan.hpp"

#include "qsh/errors.hpp"
#include "qsh/shuffle.hpp"

namespace qsh {

const VarId& z_var() {
  static const VarId v = VarId::param("z");
  return v;
}

namespace {

RatFunc rational_factor(const FormalGroupLaw& F, const Quiver& Q, const std::string& k, const DimVector& v,
                        WeightCase c) {
  const RatFunc z = RatFunc::variable(z_var());
  const RatFunc t1 = RatFunc::param("t1"), t2 = RatFunc::param("t2");
  const RatFunc half_hbar = RatFunc::variable(hbar_var()) / RatFunc(2L);
  RatFunc num(1L), den(1L);
  for (const auto& [vertex, n] : v.entries()) {
    if (!Q.has_vertex(vertex)) throw InvalidInput("unknown vertex '" + vertex + "'");
    const int a_ik = Q.arrow_count(vertex, k), a_ki = Q.arrow_count(k, vertex);
    RatFunc shift;
    if (c == WeightCase::Case2) shift = F.multiple(Q.cartan_entry(k, vertex), half_hbar);
    for (int j = 1; j <= n; ++j) {
      const RatFunc w = F.difference(z, RatFunc::lambda(vertex, j));
      if (c == WeightCase::Case2) {
        num *= F.sum(w, shift);
        den *= F.difference(w, shift);
      } else if (vertex == k) {
        num *= F.sum(F.sum(w, t1), t2);
        den *= F.difference(F.difference(w, t1), t2);
      } else {
        num *= F.difference(w, t1).pow(a_ik) * F.difference(w, t2).pow(a_ki);
        den *= F.sum(w, t2).pow(a_ik) * F.sum(w, t1).pow(a_ki);
      }
    }
  }
  return num / den;
}

}  // namespace

CartanSeries phi_hat(const FormalGroupLaw& F, const Quiver& Q, const std::string& k, const DimVector& v, WeightCase c,
                     int order) {
  if (F.kind() == FormalGroupLaw::Kind::Truncated)
    throw NotTruncatable("Cartan series support the additive and multiplicative laws only");
  if (!Q.has_vertex(k)) throw InvalidInput("unknown vertex '" + k + "'");
  if (c == WeightCase::Case2 && Q.has_loop_at(k)) throw EdgeLoopRejected("Case-2 Cartan series reject loops at " + k);
  const RatFunc f = rational_factor(F, Q, k, v, c);
  return CartanSeries{k, c, LaurentTail::expand_at_infinity(f, z_var(), order)};
}

bool phi_hat_multiplicativity_check(const FormalGroupLaw& F, const Quiver& Q, const std::string& k,
                                    const DimVector& v1, const DimVector& v2, WeightCase c, int order) {
  const LaurentTail a = phi_hat(F, Q, k, v1, c, order).tail;
  const LaurentTail b = phi_hat(F, Q, k, v2, c, order).tail.rename([&](const VarId& x) {
    return x.is_lambda() ? VarId::lambda(x.vertex(), x.slot() + v1[x.vertex()]) : x;
  });
  return a * b == phi_hat(F, Q, k, v1 + v2, c, order).tail;
}

RatFunc cartan_commutator_leading(const Quiver& Q, const std::string& k, const std::string& j, int s, int order) {
  if (Q.has_loops()) throw EdgeLoopRejected("the commutator check needs a quiver without edge loops");
  if (order < 2) throw InvalidInput("the commutator check needs series order >= 2");
  if (s < 0) throw InvalidInput("power must be non-negative");
  const CartanSeries phi =
      phi_hat(FormalGroupLaw::additive(), Q, k, DimVector::unit(j), WeightCase::Case2, order);
  const RatFunc g(Poly::variable(VarId::lambda(j, 1), static_cast<unsigned>(s)));
  const RatFunc expected = RatFunc(static_cast<long>(Q.cartan_entry(k, j))) * RatFunc::variable(hbar_var()) * g;
  return g * phi.tail[1] - expected;
}

}  // namespace qsh
