#include "qsh/gcd.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>

#include "qsh/errors.hpp"

// Brown's dense modular algorithm: reduce modulo word-size primes, compute
// the gcd over Z_p recursively by evaluating out one variable at a time and
// interpolating, then recombine the images by Chinese remaindering and
// confirm by trial division over ℚ.

namespace qsh {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Exp = Poly::Exponent;
using Mono = std::vector<Exp>;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<u64>& primes() {
  static const std::vector<u64> list = [] {
    std::vector<u64> out;
    for (u64 n = (1ULL << 62) - 1; out.size() < 256; n -= 2)
      if (is_prime(n)) out.push_back(n);
    return out;
  }();
  return list;
}

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p - b); }
  u64 neg(u64 a) const { return a ? p - a : 0; }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, p); }
  u64 inv(u64 a) const { return powmod(a, p - 2, p); }
};

// Dense univariate polynomial over Z_p, low degree first, no trailing zeros.
using UPoly = std::vector<u64>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 u_eval(const UPoly& a, u64 x, const Field& F) {
  u64 r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = F.add(F.mul(r, x), *it);
  return r;
}

UPoly u_mul(const UPoly& a, const UPoly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

UPoly u_scale(const UPoly& a, u64 c, const Field& F) {
  if (c == 0) return {};
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

UPoly u_add(const UPoly& a, const UPoly& b, const Field& F) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

// a = q*b + r; b nonzero.
void u_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r, const Field& F) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const u64 lead_inv = F.inv(b.back());
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const u64 c = F.mul(r.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
    trim(r);
  }
  trim(q);
}

UPoly u_monic(const UPoly& a, const Field& F) {
  if (a.empty() || a.back() == 1) return a;
  return u_scale(a, F.inv(a.back()), F);
}

UPoly u_gcd(UPoly a, UPoly b, const Field& F) {
  while (!b.empty()) {
    UPoly q, r;
    u_divmod(a, b, q, r, F);
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(a, F);
}

UPoly u_div(const UPoly& a, const UPoly& b, const Field& F) {
  UPoly q, r;
  u_divmod(a, b, q, r, F);
  return q;
}

// Sparse polynomial over Z_p; keys are full-length exponent vectors, so the
// map order is lex with variable 0 most significant, largest first.
using SPoly = std::map<Mono, u64, std::greater<Mono>>;
// Coefficients in one distinguished variable: the key has that entry zeroed.
using RPoly = std::map<Mono, UPoly, std::greater<Mono>>;

bool is_constant(const SPoly& a) {
  return a.size() == 1 && std::all_of(a.begin()->first.begin(), a.begin()->first.end(), [](Exp e) { return e == 0; });
}

bool uses(const SPoly& a, int v) {
  return std::any_of(a.begin(), a.end(), [v](const auto& t) { return t.first[v] != 0; });
}

RPoly to_rec(const SPoly& a, int v) {
  RPoly out;
  for (const auto& [m, c] : a) {
    Mono key = m;
    const Exp e = key[v];
    key[v] = 0;
    UPoly& u = out[key];
    if (u.size() <= e) u.resize(e + 1, 0);
    u[e] = c;
  }
  return out;
}

SPoly from_rec(const RPoly& a, int v) {
  SPoly out;
  for (const auto& [m, u] : a)
    for (std::size_t e = 0; e < u.size(); ++e)
      if (u[e]) {
        Mono key = m;
        key[v] = static_cast<Exp>(e);
        out.emplace(std::move(key), u[e]);
      }
  return out;
}

SPoly evaluate(const RPoly& a, u64 x, const Field& F) {
  SPoly out;
  for (const auto& [m, u] : a)
    if (u64 c = u_eval(u, x, F)) out.emplace(m, c);
  return out;
}

SPoly upoly_as_spoly(const UPoly& u, int v, std::size_t n) {
  SPoly out;
  for (std::size_t e = 0; e < u.size(); ++e)
    if (u[e]) {
      Mono m(n, 0);
      m[v] = static_cast<Exp>(e);
      out.emplace(std::move(m), u[e]);
    }
  return out;
}

SPoly s_mul(const SPoly& a, const SPoly& b, const Field& F) {
  SPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = static_cast<Exp>(ma[k] + mb[k]);
      u64& slot = out[m];
      slot = F.add(slot, F.mul(ca, cb));
      if (slot == 0) out.erase(m);
    }
  return out;
}

// True iff b divides a exactly.
bool s_divides(const SPoly& a, const SPoly& b, const Field& F) {
  SPoly rem = a;
  const Mono& lead = b.begin()->first;
  const u64 lead_inv = F.inv(b.begin()->second);
  const std::size_t n = lead.size();
  Mono q(n), key(n);
  while (!rem.empty()) {
    auto it = rem.begin();
    for (std::size_t k = 0; k < n; ++k) {
      if (it->first[k] < lead[k]) return false;
      q[k] = static_cast<Exp>(it->first[k] - lead[k]);
    }
    const u64 c = F.mul(it->second, lead_inv);
    rem.erase(it);
    for (auto jt = std::next(b.begin()); jt != b.end(); ++jt) {
      for (std::size_t k = 0; k < n; ++k) key[k] = static_cast<Exp>(q[k] + jt->first[k]);
      u64& slot = rem[key];
      slot = F.sub(slot, F.mul(c, jt->second));
      if (slot == 0) rem.erase(key);
    }
  }
  return true;
}

// gcd over Z_p of nonzero polynomials in variables 0..k-1, up to a unit.
SPoly pgcd(const SPoly& A, const SPoly& B, int k, const Field& F) {
  const std::size_t n = A.begin()->first.size();
  if (k == 0 || is_constant(A) || is_constant(B)) return {{Mono(n, 0), 1}};
  const int v = k - 1;
  const bool in_a = uses(A, v), in_b = uses(B, v);
  if (!in_a && !in_b) return pgcd(A, B, v, F);
  RPoly ra = to_rec(A, v), rb = to_rec(B, v);

  if (k == 1) return upoly_as_spoly(u_gcd(ra.begin()->second, rb.begin()->second, F), v, n);

  auto content = [&](const RPoly& r) {
    UPoly c;
    for (const auto& [m, u] : r) {
      c = u_gcd(c, u, F);
      if (c.size() == 1) break;
    }
    return c;
  };
  const UPoly ca = content(ra), cb = content(rb);
  const UPoly c = u_gcd(ca, cb, F);
  if (ca.size() > 1)
    for (auto& [m, u] : ra) u = u_div(u, ca, F);
  if (cb.size() > 1)
    for (auto& [m, u] : rb) u = u_div(u, cb, F);

  const UPoly& lca = ra.begin()->second;
  const UPoly& lcb = rb.begin()->second;
  const UPoly g = u_gcd(lca, lcb, F);
  int da = 0, db = 0;
  for (const auto& [m, u] : ra) da = std::max(da, deg(u));
  for (const auto& [m, u] : rb) db = std::max(db, deg(u));
  const int bound = std::min(da, db) + deg(g);
  const SPoly a_pp = from_rec(ra, v), b_pp = from_rec(rb, v);

  auto finish = [&](RPoly h) -> std::optional<SPoly> {
    const UPoly ch = content(h);
    if (ch.size() > 1)
      for (auto& [m, u] : h) u = u_div(u, ch, F);
    SPoly hs = from_rec(h, v);
    if (!s_divides(a_pp, hs, F) || !s_divides(b_pp, hs, F)) return std::nullopt;
    return s_mul(hs, upoly_as_spoly(c, v, n), F);
  };

  RPoly h;
  UPoly q;
  Mono lm;
  int points = 0;
  for (u64 x = 1;; ++x) {
    if (x >= F.p) throw LimitExceeded("modular gcd ran out of evaluation points");
    if (u_eval(lca, x, F) == 0 || u_eval(lcb, x, F) == 0) continue;
    SPoly img = pgcd(evaluate(ra, x, F), evaluate(rb, x, F), v, F);
    if (is_constant(img)) return upoly_as_spoly(c, v, n);
    const u64 scale = F.mul(u_eval(g, x, F), F.inv(img.begin()->second));
    for (auto& [m, cf] : img) cf = F.mul(cf, scale);

    bool changed = true;
    if (points == 0 || img.begin()->first < lm) {
      h.clear();
      for (const auto& [m, cf] : img) h[m] = UPoly{cf};
      q = UPoly{F.neg(x), 1};
      lm = img.begin()->first;
      points = 1;
    } else if (img.begin()->first > lm) {
      continue;
    } else {
      changed = false;
      const u64 q_inv = F.inv(u_eval(q, x, F));
      for (const auto& [m, cf] : img) h.try_emplace(m);
      for (auto it = h.begin(); it != h.end();) {
        auto found = img.find(it->first);
        const u64 target = found == img.end() ? 0 : found->second;
        const u64 d = F.mul(F.sub(target, u_eval(it->second, x, F)), q_inv);
        if (d) {
          changed = true;
          it->second = u_add(it->second, u_scale(q, d, F), F);
        }
        it = it->second.empty() ? h.erase(it) : std::next(it);
      }
      q = u_mul(q, UPoly{F.neg(x), 1}, F);
      ++points;
    }
    if (!changed || points > bound) {
      if (auto r = finish(h)) return *r;
      if (points > bound) points = 0;
    }
  }
}

Mono lex_leading(const std::vector<Mono>& monos, std::size_t& index) {
  index = 0;
  for (std::size_t t = 1; t < monos.size(); ++t)
    if (monos[t] > monos[index]) index = t;
  return monos[index];
}

// Both inputs nonconstant with integer coprime coefficients.
Poly modular_gcd(const Poly& a, const Poly& b) {
  std::vector<VarId> vars;
  std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(), std::back_inserter(vars));
  const std::size_t n = vars.size();
  auto expand = [&](const Poly& p) {
    std::vector<std::size_t> col;
    for (const auto& v : p.vars())
      col.push_back(static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
    std::vector<Mono> monos(p.num_terms(), Mono(n, 0));
    for (std::size_t t = 0; t < p.num_terms(); ++t) {
      auto row = p.exponents(t);
      for (std::size_t k = 0; k < col.size(); ++k) monos[t][col[k]] = row[k];
    }
    return monos;
  };
  const auto ma = expand(a), mb = expand(b);
  std::size_t ia, ib;
  lex_leading(ma, ia);
  lex_leading(mb, ib);
  const Integer lca = a.coeff(ia).get_num(), lcb = b.coeff(ib).get_num();
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), lca.get_mpz_t(), lcb.get_mpz_t());

  auto reduce = [&](const Poly& p, const std::vector<Mono>& monos, const Field& F) {
    SPoly out;
    for (std::size_t t = 0; t < p.num_terms(); ++t) {
      u64 c = mpz_fdiv_ui(p.coeff(t).get_num_mpz_t(), F.p);
      if (c) out.emplace(monos[t], c);
    }
    return out;
  };

  std::map<Mono, Integer, std::greater<Mono>> acc;
  Integer modulus = 0;
  Mono lm;
  for (u64 p : primes()) {
    const Field F{p};
    if (mpz_fdiv_ui(lca.get_mpz_t(), p) == 0 || mpz_fdiv_ui(lcb.get_mpz_t(), p) == 0) continue;
    SPoly img = pgcd(reduce(a, ma, F), reduce(b, mb, F), static_cast<int>(n), F);
    if (is_constant(img)) return Poly(1L);
    const u64 scale = F.mul(mpz_fdiv_ui(gamma.get_mpz_t(), p), F.inv(img.begin()->second));
    for (auto& [m, cf] : img) cf = F.mul(cf, scale);

    if (modulus == 0 || img.begin()->first < lm) {
      acc.clear();
      for (const auto& [m, cf] : img) acc[m] = Integer(static_cast<unsigned long>(cf));
      modulus = static_cast<unsigned long>(p);
      lm = img.begin()->first;
    } else if (img.begin()->first > lm) {
      continue;
    } else {
      const u64 m_inv = F.inv(mpz_fdiv_ui(modulus.get_mpz_t(), p));
      for (const auto& [m, cf] : img) acc.try_emplace(m, 0);
      for (auto it = acc.begin(); it != acc.end();) {
        auto found = img.find(it->first);
        const u64 target = found == img.end() ? 0 : found->second;
        const u64 d = F.mul(F.sub(target, mpz_fdiv_ui(it->second.get_mpz_t(), p)), m_inv);
        it->second += modulus * static_cast<unsigned long>(d);
        it = it->second == 0 ? acc.erase(it) : std::next(it);
      }
      modulus *= static_cast<unsigned long>(p);
    }

    const Integer half = modulus / 2;
    std::vector<Exp> exps;
    std::vector<Rational> coeffs;
    for (const auto& [m, cf] : acc) {
      exps.insert(exps.end(), m.begin(), m.end());
      coeffs.emplace_back(cf > half ? Integer(cf - modulus) : cf);
    }
    Poly candidate = Poly::from_terms(vars, std::move(exps), std::move(coeffs)).integer_primitive().second;
    if (a.divisible_by(candidate) && b.divisible_by(candidate)) return candidate;
  }
  throw LimitExceeded("modular gcd exhausted its prime table");
}

// Splits p = monomial * rest with rest having no monomial factor.
std::pair<Mono, Poly> split_monomial(const Poly& p) {
  const std::size_t nv = p.vars().size();
  Mono low(nv, 0xFFFF);
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    auto row = p.exponents(t);
    for (std::size_t k = 0; k < nv; ++k) low[k] = std::min(low[k], row[k]);
  }
  if (std::all_of(low.begin(), low.end(), [](Exp e) { return e == 0; })) return {low, p};
  std::vector<Exp> exps;
  std::vector<Rational> coeffs;
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    auto row = p.exponents(t);
    for (std::size_t k = 0; k < nv; ++k) exps.push_back(static_cast<Exp>(row[k] - low[k]));
    coeffs.push_back(p.coeff(t));
  }
  return {low, Poly::from_terms(p.vars(), std::move(exps), std::move(coeffs))};
}

Poly gcd_core(const Poly& a, const Poly& b);

// gcd(a, b) where some variables occur only in a: it divides every
// coefficient of a with respect to those variables.
std::optional<Poly> eliminate_private_vars(const Poly& a, const Poly& b) {
  std::vector<VarId> only;
  for (const auto& v : a.vars())
    if (!b.contains(v)) only.push_back(v);
  if (only.empty()) return std::nullopt;
  Poly g = b;
  for (auto& [key, c] : a.coefficients_wrt(only)) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly gcd_core(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(1L);
  if (a.monic() == b.monic()) return a;
  if (auto g = eliminate_private_vars(a, b)) return *g;
  if (auto g = eliminate_private_vars(b, a)) return *g;
  const Poly& small = a.num_terms() <= b.num_terms() ? a : b;
  const Poly& large = a.num_terms() <= b.num_terms() ? b : a;
  if (large.divisible_by(small)) return small;
  return modular_gcd(a.integer_primitive().second, b.integer_primitive().second);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1L);
  auto [ea, ra] = split_monomial(a);
  auto [eb, rb] = split_monomial(b);
  Poly mono(1L);
  for (std::size_t k = 0; k < a.vars().size(); ++k) {
    const VarId& v = a.vars()[k];
    auto it = std::lower_bound(b.vars().begin(), b.vars().end(), v);
    if (it == b.vars().end() || !(*it == v)) continue;
    const Exp e = std::min(ea[k], eb[static_cast<std::size_t>(it - b.vars().begin())]);
    if (e) mono *= Poly::variable(v, e);
  }
  return (mono * gcd_core(ra, rb)).monic();
}

}  // namespace qsh
