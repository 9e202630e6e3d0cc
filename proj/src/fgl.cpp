#include "qsh/fgl.hpp"

#include "qsh/errors.hpp"

namespace qsh {

namespace {

const VarId& x_var() {
  static const VarId v = VarId::param("fgl_x");
  return v;
}
const VarId& y_var() {
  static const VarId v = VarId::param("fgl_y");
  return v;
}
const VarId& z_var() {
  static const VarId v = VarId::param("fgl_z");
  return v;
}

}  // namespace

FormalGroupLaw FormalGroupLaw::additive() { return FormalGroupLaw(); }

FormalGroupLaw FormalGroupLaw::multiplicative(RatFunc beta) {
  FormalGroupLaw F;
  F.kind_ = Kind::Multiplicative;
  F.beta_ = std::move(beta);
  return F;
}

FormalGroupLaw FormalGroupLaw::truncated(const Coeffs& coeffs, int order) {
  if (order < 2) throw InvalidInput("truncated formal group law needs order >= 2");
  FormalGroupLaw F;
  F.kind_ = Kind::Truncated;
  F.order_ = order;
  for (const auto& [ij, c] : coeffs) {
    const auto [i, j] = ij;
    if (i < 1 || j < 1) throw InvalidInput("truncated law coefficients need i, j >= 1");
    if (c == 0 || i + j >= order) continue;
    auto mirror = coeffs.find({j, i});
    if (mirror == coeffs.end() || mirror->second != c)
      throw InvalidInput("truncated law is not commutative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    F.coeffs_[ij] = c;
  }
  const Poly x = Poly::variable(x_var()), y = Poly::variable(y_var()), z = Poly::variable(z_var());
  if (F.series_sum(x, F.series_sum(y, z)) != F.series_sum(F.series_sum(x, y), z))
    throw InvalidInput("truncated law is not associative modulo degree " + std::to_string(order));

  // F(x, ι(y)) vanishes on x = y degree by degree, so its cut-off is divisible by x - y.
  const Poly d = F.series_sum(x, F.series_inverse(y));
  auto u = d.divide_exact(x - y);
  if (!u) throw std::logic_error("truncated law difference is not divisible by x - y");
  F.unit_series_ = *u;
  return F;
}

Poly FormalGroupLaw::require_nilpotent(const RatFunc& a) const {
  if (!a.is_poly() || a.num().constant_term() != 0)
    throw NotTruncatable("truncated formal group law needs polynomial arguments without constant term, got " + a.str());
  return a.num();
}

Poly FormalGroupLaw::series_sum(const Poly& a, const Poly& b) const {
  Poly out = a + b;
  if (coeffs_.empty()) return truncate(out);
  const unsigned n = static_cast<unsigned>(order_);
  std::vector<Poly> pa{Poly(1L)}, pb{Poly(1L)};
  for (const auto& [ij, c] : coeffs_) {
    const auto [i, j] = ij;
    while (pa.size() <= static_cast<std::size_t>(i)) pa.push_back((pa.back() * a).truncated(n));
    while (pb.size() <= static_cast<std::size_t>(j)) pb.push_back((pb.back() * b).truncated(n));
    out += (pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)]).truncated(n).scaled(c);
  }
  return truncate(out);
}

Poly FormalGroupLaw::series_inverse(const Poly& a) const {
  // ι = -a - Σ a_ij a^i ι^j; each pass fixes one more degree.
  Poly iota = -a;
  for (int pass = 0; pass < order_; ++pass) {
    Poly next = -a;
    Poly correction = series_sum(a, iota) - a - iota;
    next -= correction;
    iota = truncate(next);
  }
  return iota;
}

Poly FormalGroupLaw::unit_inverse(const Poly& g) const {
  if (g.constant_term() != 1) throw NotTruncatable("unit series must have constant term 1");
  const Poly h = Poly(1L) - g;
  Poly out(1L), power(1L);
  for (int k = 1; k < order_; ++k) {
    power = truncate(power * h);
    if (power.is_zero()) break;
    out += power;
  }
  return truncate(out);
}

RatFunc FormalGroupLaw::sum(const RatFunc& a, const RatFunc& b) const {
  switch (kind_) {
    case Kind::Additive:
      return a + b;
    case Kind::Multiplicative:
      return a + b - beta_ * a * b;
    case Kind::Truncated:
      return RatFunc(series_sum(require_nilpotent(a), require_nilpotent(b)));
  }
  return {};
}

RatFunc FormalGroupLaw::inverse(const RatFunc& a) const {
  switch (kind_) {
    case Kind::Additive:
      return -a;
    case Kind::Multiplicative:
      return -a / (RatFunc(1L) - beta_ * a);
    case Kind::Truncated:
      return RatFunc(series_inverse(require_nilpotent(a)));
  }
  return {};
}

RatFunc FormalGroupLaw::difference(const RatFunc& a, const RatFunc& b) const {
  switch (kind_) {
    case Kind::Additive:
      return a - b;
    case Kind::Multiplicative:
      return (a - b) / (RatFunc(1L) - beta_ * b);
    case Kind::Truncated:
      return sum(a, inverse(b));
  }
  return {};
}

RatFunc FormalGroupLaw::multiple(int m, const RatFunc& t) const {
  if (m == 0) return RatFunc();
  if (m < 0) return inverse(multiple(-m, t));
  if (kind_ == Kind::Additive) return t * RatFunc(static_cast<long>(m));
  RatFunc acc = t;
  for (int k = 1; k < m; ++k) acc = sum(acc, t);
  return acc;
}

std::pair<RatFunc, RatFunc> FormalGroupLaw::unit_factor(const RatFunc& a, const RatFunc& b) const {
  switch (kind_) {
    case Kind::Additive:
      return {a - b, RatFunc(1L)};
    case Kind::Multiplicative:
      return {a - b, (RatFunc(1L) - beta_ * b).inverse()};
    case Kind::Truncated: {
      const Poly pa = require_nilpotent(a), pb = require_nilpotent(b);
      RatFunc g = RatFunc(unit_series_).substitute({{x_var(), RatFunc(pa)}, {y_var(), RatFunc(pb)}});
      return {a - b, RatFunc(truncate(g.num()))};
    }
  }
  return {};
}

std::string FormalGroupLaw::str() const {
  switch (kind_) {
    case Kind::Additive:
      return "additive";
    case Kind::Multiplicative:
      return "multiplicative(beta=" + beta_.str() + ")";
    case Kind::Truncated: {
      std::string out = "truncated(order=" + std::to_string(order_);
      for (const auto& [ij, c] : coeffs_)
        out += ", a" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "=" + to_string(c);
      return out + ")";
    }
  }
  return {};
}

}  // namespace qsh
