#include "qsh/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qsh/errors.hpp"

namespace qsh {

namespace {

using Exp = Poly::Exponent;

unsigned row_degree(std::span<const Exp> row) {
  unsigned d = 0;
  for (Exp e : row) d += e;
  return d;
}

// Union of two sorted variable lists plus the column each input maps to.
struct Alignment {
  std::vector<VarId> vars;
  std::vector<std::size_t> col_a, col_b;
};

Alignment align(const std::vector<VarId>& a, const std::vector<VarId>& b) {
  Alignment out;
  out.vars.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.col_a.push_back(out.vars.size());
      out.vars.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.col_b.push_back(out.vars.size());
      out.vars.push_back(b[j++]);
    } else {
      out.col_a.push_back(out.vars.size());
      out.col_b.push_back(out.vars.size());
      out.vars.push_back(a[i++]);
      ++j;
    }
  }
  return out;
}

std::vector<Exp> remap(const std::vector<Exp>& exps, std::size_t nold, std::size_t nterms,
                       const std::vector<std::size_t>& cols, std::size_t nnew) {
  if (nold == nnew) return exps;
  std::vector<Exp> out(nterms * nnew, 0);
  for (std::size_t t = 0; t < nterms; ++t)
    for (std::size_t k = 0; k < nold; ++k) out[t * nnew + cols[k]] = exps[t * nold + k];
  return out;
}

Exp checked_add(unsigned a, unsigned b) {
  const unsigned s = a + b;
  if (s > 0xFFFFu) throw LimitExceeded("exponent overflow");
  return static_cast<Exp>(s);
}

}  // namespace

int compare_grlex(std::span<const Exp> a, std::span<const Exp> b) {
  const unsigned da = row_degree(a), db = row_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  return 0;
}

Poly::Poly(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

Poly Poly::variable(const VarId& v, unsigned exponent) {
  Poly p;
  if (exponent == 0) return Poly(1L);
  if (exponent > 0xFFFFu) throw LimitExceeded("exponent overflow");
  p.vars_.push_back(v);
  p.exps_.push_back(static_cast<Exp>(exponent));
  p.coeffs_.emplace_back(1);
  return p;
}

Poly Poly::from_terms(std::vector<VarId> vars, std::vector<Exp> exps, std::vector<Rational> coeffs) {
  const std::size_t nv = vars.size(), nt = coeffs.size();
  if (exps.size() != nv * nt) throw std::logic_error("Poly::from_terms: shape mismatch");

  if (!std::is_sorted(vars.begin(), vars.end())) {
    std::vector<std::size_t> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return vars[x] < vars[y]; });
    std::vector<VarId> sorted_vars;
    sorted_vars.reserve(nv);
    for (auto k : order) sorted_vars.push_back(vars[k]);
    std::vector<Exp> sorted_exps(exps.size());
    for (std::size_t t = 0; t < nt; ++t)
      for (std::size_t k = 0; k < nv; ++k) sorted_exps[t * nv + k] = exps[t * nv + order[k]];
    vars = std::move(sorted_vars);
    exps = std::move(sorted_exps);
  }
  for (std::size_t k = 1; k < nv; ++k)
    if (vars[k - 1] == vars[k]) throw std::logic_error("Poly::from_terms: duplicate variable");

  auto row = [&](std::size_t t) { return std::span<const Exp>(exps.data() + t * nv, nv); };
  std::vector<unsigned> deg(nt);
  for (std::size_t t = 0; t < nt; ++t) deg[t] = row_degree(row(t));
  std::vector<std::size_t> idx(nt);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (deg[x] != deg[y]) return deg[x] > deg[y];
    auto rx = row(x), ry = row(y);
    return std::lexicographical_compare(ry.begin(), ry.end(), rx.begin(), rx.end());
  });

  Poly out;
  out.exps_.reserve(exps.size());
  out.coeffs_.reserve(nt);
  std::size_t i = 0;
  while (i < nt) {
    Rational sum = coeffs[idx[i]];
    std::size_t j = i + 1;
    while (j < nt && deg[idx[j]] == deg[idx[i]] && std::ranges::equal(row(idx[j]), row(idx[i]))) sum += coeffs[idx[j++]];
    if (sum != 0) {
      auto r = row(idx[i]);
      out.exps_.insert(out.exps_.end(), r.begin(), r.end());
      out.coeffs_.push_back(std::move(sum));
    }
    i = j;
  }

  // Drop variables that no longer occur.
  std::vector<bool> used(nv, false);
  const std::size_t nout = out.coeffs_.size();
  for (std::size_t t = 0; t < nout; ++t)
    for (std::size_t k = 0; k < nv; ++k)
      if (out.exps_[t * nv + k]) used[k] = true;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < nv; ++k)
    if (used[k]) keep.push_back(k);
  if (keep.size() == nv) {
    out.vars_ = std::move(vars);
    return out;
  }
  std::vector<Exp> compact(nout * keep.size());
  for (std::size_t t = 0; t < nout; ++t)
    for (std::size_t k = 0; k < keep.size(); ++k) compact[t * keep.size() + k] = out.exps_[t * nv + keep[k]];
  for (auto k : keep) out.vars_.push_back(vars[k]);
  out.exps_ = std::move(compact);
  return out;
}

bool Poly::is_one() const { return vars_.empty() && coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Poly::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.front(); }

Rational Poly::constant_term() const {
  if (coeffs_.empty()) return 0;
  // The constant term, if present, is the grlex-smallest one.
  auto last = exponents(coeffs_.size() - 1);
  return row_degree(last) == 0 ? coeffs_.back() : Rational(0);
}

unsigned Poly::total_degree() const { return coeffs_.empty() ? 0 : row_degree(exponents(0)); }

unsigned Poly::degree_in(const VarId& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || !(*it == v)) return 0;
  const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
  unsigned d = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) d = std::max<unsigned>(d, exps_[t * vars_.size() + k]);
  return d;
}

bool Poly::contains(const VarId& v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Alignment al = align(a.vars_, b.vars_);
  const std::size_t nv = al.vars.size();
  const auto ea = remap(a.exps_, a.vars_.size(), a.num_terms(), al.col_a, nv);
  const auto eb = remap(b.exps_, b.vars_.size(), b.num_terms(), al.col_b, nv);
  std::vector<Exp> exps;
  std::vector<Rational> coeffs;
  exps.reserve(ea.size() + eb.size());
  coeffs.reserve(a.num_terms() + b.num_terms());
  auto ra = [&](std::size_t t) { return std::span<const Exp>(ea.data() + t * nv, nv); };
  auto rb = [&](std::size_t t) { return std::span<const Exp>(eb.data() + t * nv, nv); };
  std::size_t i = 0, j = 0;
  bool cancelled = false;
  while (i < a.num_terms() || j < b.num_terms()) {
    int c;
    if (i == a.num_terms())
      c = -1;
    else if (j == b.num_terms())
      c = 1;
    else
      c = compare_grlex(ra(i), rb(j));
    if (c > 0) {
      exps.insert(exps.end(), ra(i).begin(), ra(i).end());
      coeffs.push_back(a.coeffs_[i++]);
    } else if (c < 0) {
      exps.insert(exps.end(), rb(j).begin(), rb(j).end());
      coeffs.push_back(b.coeffs_[j++]);
    } else {
      Rational s = a.coeffs_[i] + b.coeffs_[j];
      if (s != 0) {
        exps.insert(exps.end(), ra(i).begin(), ra(i).end());
        coeffs.push_back(std::move(s));
      } else {
        cancelled = true;
      }
      ++i;
      ++j;
    }
  }
  if (!cancelled && al.col_a.size() + al.col_b.size() >= nv) {
    // Every variable still occurs.
    Poly out;
    out.vars_ = al.vars;
    out.exps_ = std::move(exps);
    out.coeffs_ = std::move(coeffs);
    return out;
  }
  return Poly::from_terms(al.vars, std::move(exps), std::move(coeffs));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b.scaled(a.coeffs_[0]);
  if (b.is_constant()) return a.scaled(b.coeffs_[0]);
  const Alignment al = align(a.vars_, b.vars_);
  const std::size_t nv = al.vars.size();
  const auto ea = remap(a.exps_, a.vars_.size(), a.num_terms(), al.col_a, nv);
  const auto eb = remap(b.exps_, b.vars_.size(), b.num_terms(), al.col_b, nv);
  const std::size_t na = a.num_terms(), nb = b.num_terms();
  std::vector<Exp> exps(na * nb * nv);
  std::vector<Rational> coeffs(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t t = i * nb + j;
      for (std::size_t k = 0; k < nv; ++k) exps[t * nv + k] = checked_add(ea[i * nv + k], eb[j * nv + k]);
      coeffs[t] = a.coeffs_[i] * b.coeffs_[j];
    }
  if (na == 1 || nb == 1) {
    // Multiplying by a single term preserves the order.
    Poly out;
    out.vars_ = al.vars;
    out.exps_ = std::move(exps);
    out.coeffs_ = std::move(coeffs);
    return out;
  }
  return Poly::from_terms(al.vars, std::move(exps), std::move(coeffs));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0 || is_zero()) return Poly();
  Poly out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (is_zero()) return Poly();
  if (d.is_constant()) return scaled(1 / d.coeffs_[0]);
  const std::size_t nv = vars_.size();
  std::vector<std::size_t> cols;
  for (const auto& v : d.vars_) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || !(*it == v)) return std::nullopt;
    cols.push_back(static_cast<std::size_t>(it - vars_.begin()));
  }
  if (d.total_degree() > total_degree()) return std::nullopt;
  const auto dd = remap(d.exps_, d.vars_.size(), d.num_terms(), cols, nv);
  auto drow = [&](std::size_t t) { return std::span<const Exp>(dd.data() + t * nv, nv); };

  auto divides_row = [&](std::span<const Exp> big, std::span<const Exp> small) {
    for (std::size_t k = 0; k < nv; ++k)
      if (small[k] > big[k]) return false;
    return true;
  };
  // The leading and trailing terms of a product are products of leading and
  // trailing terms.
  if (!divides_row(exponents(0), drow(0))) return std::nullopt;
  if (!divides_row(exponents(num_terms() - 1), drow(d.num_terms() - 1))) return std::nullopt;

  auto greater = [](const std::vector<Exp>& x, const std::vector<Exp>& y) { return compare_grlex(x, y) > 0; };
  std::map<std::vector<Exp>, Rational, decltype(greater)> rem(greater);
  for (std::size_t t = 0; t < num_terms(); ++t) {
    auto r = exponents(t);
    rem.emplace(std::vector<Exp>(r.begin(), r.end()), coeffs_[t]);
  }
  const Rational& lc = d.coeffs_[0];
  std::vector<Exp> qexps;
  std::vector<Rational> qcoeffs;
  std::vector<Exp> qm(nv), key(nv);
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!divides_row(it->first, drow(0))) return std::nullopt;
    for (std::size_t k = 0; k < nv; ++k) qm[k] = static_cast<Exp>(it->first[k] - drow(0)[k]);
    const Rational qc = it->second / lc;
    rem.erase(it);
    for (std::size_t t = 1; t < d.num_terms(); ++t) {
      for (std::size_t k = 0; k < nv; ++k) key[k] = static_cast<Exp>(qm[k] + dd[t * nv + k]);
      Rational delta = qc * d.coeffs_[t];
      auto [pos, inserted] = rem.try_emplace(key, -delta);
      if (!inserted) {
        pos->second -= delta;
        if (pos->second == 0) rem.erase(pos);
      }
    }
    qexps.insert(qexps.end(), qm.begin(), qm.end());
    qcoeffs.push_back(qc);
  }
  return Poly::from_terms(vars_, std::move(qexps), std::move(qcoeffs));
}

Poly Poly::monic() const {
  if (is_zero() || coeffs_[0] == 1) return *this;
  return scaled(1 / coeffs_[0]);
}

Poly Poly::truncated(unsigned bound) const {
  std::vector<Exp> exps;
  std::vector<Rational> coeffs;
  for (std::size_t t = 0; t < num_terms(); ++t) {
    auto r = exponents(t);
    if (row_degree(r) >= bound) continue;
    exps.insert(exps.end(), r.begin(), r.end());
    coeffs.push_back(coeffs_[t]);
  }
  return from_terms(vars_, std::move(exps), std::move(coeffs));
}

std::pair<Rational, Poly> Poly::integer_primitive() const {
  if (is_zero()) return {Rational(0), Poly()};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : coeffs_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (coeffs_[0] < 0) content = -content;
  return {content, scaled(1 / content)};
}

std::vector<std::pair<std::vector<Exp>, Poly>> Poly::coefficients_wrt(const std::vector<VarId>& which) const {
  const std::size_t nv = vars_.size();
  std::vector<int> sel_col(nv, -1);
  for (std::size_t k = 0; k < nv; ++k) {
    auto it = std::find(which.begin(), which.end(), vars_[k]);
    if (it != which.end()) sel_col[k] = static_cast<int>(it - which.begin());
  }
  std::vector<VarId> rest;
  for (std::size_t k = 0; k < nv; ++k)
    if (sel_col[k] < 0) rest.push_back(vars_[k]);
  struct Bucket {
    std::vector<Exp> exps;
    std::vector<Rational> coeffs;
  };
  std::map<std::vector<Exp>, Bucket> buckets;
  std::vector<Exp> key(which.size());
  for (std::size_t t = 0; t < num_terms(); ++t) {
    std::fill(key.begin(), key.end(), 0);
    auto r = exponents(t);
    auto& bucket = [&]() -> Bucket& {
      for (std::size_t k = 0; k < nv; ++k)
        if (sel_col[k] >= 0) key[static_cast<std::size_t>(sel_col[k])] = r[k];
      return buckets[key];
    }();
    for (std::size_t k = 0; k < nv; ++k)
      if (sel_col[k] < 0) bucket.exps.push_back(r[k]);
    bucket.coeffs.push_back(coeffs_[t]);
  }
  std::vector<std::pair<std::vector<Exp>, Poly>> out;
  out.reserve(buckets.size());
  for (auto& [k, b] : buckets) out.emplace_back(k, from_terms(rest, std::move(b.exps), std::move(b.coeffs)));
  return out;
}

std::vector<Poly> Poly::coefficients_in(const VarId& v) const {
  std::vector<Poly> out(degree_in(v) + 1);
  for (auto& [k, c] : coefficients_wrt({v})) out[k[0]] = std::move(c);
  return out;
}

Poly Poly::rename(const std::function<VarId(const VarId&)>& f) const {
  if (vars_.empty()) return *this;
  std::vector<VarId> images;
  images.reserve(vars_.size());
  for (const auto& v : vars_) images.push_back(f(v));
  std::vector<VarId> uniq = images;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq == vars_ && images == vars_) return *this;
  std::vector<std::size_t> col(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k)
    col[k] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), images[k]) - uniq.begin());
  const std::size_t nv = uniq.size();
  std::vector<Exp> exps(num_terms() * nv, 0);
  for (std::size_t t = 0; t < num_terms(); ++t)
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      auto& slot = exps[t * nv + col[k]];
      slot = checked_add(slot, exps_[t * vars_.size() + k]);
    }
  return from_terms(std::move(uniq), std::move(exps), coeffs_);
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < num_terms(); ++t) {
    Rational c = coeffs_[t];
    const bool negative = c < 0;
    if (negative) c = -c;
    std::string mono;
    auto r = exponents(t);
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (!r[k]) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[k].str();
      if (r[k] > 1) mono += "^" + std::to_string(r[k]);
    }
    std::string term;
    if (mono.empty())
      term = to_string(c);
    else if (c == 1)
      term = mono;
    else
      term = to_string(c) + "*" + mono;
    if (t == 0)
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace qsh
