#include "qsh/shuffle.hpp"

#include <algorithm>
#include <map>

#include "qsh/errors.hpp"

namespace qsh {

namespace {

RatFunc lam(const std::string& vertex, int slot) { return RatFunc::lambda(vertex, slot); }

bool is_truncated(const FormalGroupLaw& F) { return F.kind() == FormalGroupLaw::Kind::Truncated; }

// A kernel written as series / den, where den is a product of plain
// differences of Chern roots and series carries everything else.
struct Kernel {
  RatFunc series{1L};
  Poly den{1L};
};

void absorb(const FormalGroupLaw& F, Kernel& k, const RatFunc& factor) {
  k.series *= factor;
  if (is_truncated(F)) {
    if (!k.series.is_poly()) throw NotTruncatable("truncated-law products need polynomial arguments");
    k.series = RatFunc(F.truncate(k.series.num()));
  }
}

// Multiplies the kernel by 1/(a -_F b) = g^{-1}/(a - b).
void divide_by_difference(const FormalGroupLaw& F, Kernel& k, const RatFunc& a, const RatFunc& b) {
  auto [linear, unit] = F.unit_factor(a, b);
  k.den *= linear.num();
  if (is_truncated(F))
    absorb(F, k, RatFunc(F.unit_inverse(unit.num())));
  else
    k.series /= unit;
}

// Extends each permutation by the identity on slots it does not cover but f uses.
std::vector<SlotPermutation> cover_slots(const std::vector<SlotPermutation>& perms, const RatFunc& f) {
  if (perms.empty()) return perms;
  std::map<std::string, int> need;
  for (const auto& v : f.vars())
    if (v.is_lambda()) need[v.vertex()] = std::max(need[v.vertex()], v.slot());
  bool extend = false;
  for (const auto& [vertex, m] : need) {
    auto it = perms.front().images().find(vertex);
    if (it != perms.front().images().end() && static_cast<int>(it->second.size()) < m) extend = true;
  }
  if (!extend) return perms;
  std::vector<SlotPermutation> out;
  for (const auto& p : perms) {
    auto images = p.images();
    for (auto& [vertex, img] : images) {
      auto it = need.find(vertex);
      if (it == need.end()) continue;
      for (int s = static_cast<int>(img.size()) + 1; s <= it->second; ++s) img.push_back(s);
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

RatFunc sum_over(const std::vector<SlotPermutation>& perms, const RatFunc& kernel) {
  std::vector<RatFunc> terms;
  terms.reserve(perms.size());
  for (const auto& p : cover_slots(perms, kernel)) terms.push_back(permute_vars(kernel, p));
  return sum(terms);
}

RatFunc finish_sum(const FormalGroupLaw& F, const std::vector<SlotPermutation>& perms, const Kernel& k) {
  RatFunc total = sum_over(perms, RatFunc::fraction(k.series.num(), k.den * k.series.den()));
  if (is_truncated(F)) {
    // The series part is known modulo degree N; dividing by den loses deg(den) of that.
    if (!total.is_poly()) throw NotTruncatable("truncated-law product did not reduce to a polynomial");
    const int valid = F.order() - static_cast<int>(k.den.total_degree());
    if (valid <= 0) return RatFunc();
    total = RatFunc(total.num().truncated(static_cast<unsigned>(valid)));
  }
  return total;
}

void check_poles(const FormalGroupLaw& F, const ShuffleElement& a, const ShuffleElement& b, const ShuffleElement& r) {
  if (F.kind() != FormalGroupLaw::Kind::Additive || r.f.is_poly()) return;
  if (!a.f.is_poly() || !b.f.is_poly()) return;
  for (const auto& [vertex, n] : r.dim.entries())
    for (int s = 1; s <= n; ++s)
      for (int t = s + 1; t <= n; ++t)
        if (r.f.den().divisible_by((lam(vertex, s) - lam(vertex, t)).num()))
          throw PoleNotCancelled("product keeps the pole L" + vertex + "_" + std::to_string(s) + " - L" + vertex + "_" +
                                 std::to_string(t) + ": " + r.f.str());
}

Kernel fac1_kernel(const ShuffleSetup& s, const DimVector& v1, const DimVector& v2) {
  Kernel k;
  for (const auto& [vertex, n1] : v1.entries()) {
    const int n2 = v2[vertex];
    for (int i = 1; i <= n1; ++i)
      for (int j = 1; j <= n2; ++j) {
        const RatFunc x1 = lam(vertex, i), x2 = lam(vertex, n1 + j);
        absorb(s.law, k, s.law.sum(s.law.sum(s.law.difference(x1, x2), s.t1), s.t2));
        divide_by_difference(s.law, k, x2, x1);
      }
  }
  return k;
}

void absorb_fac2(const ShuffleSetup& s, const DimVector& v1, const DimVector& v2, Kernel& k) {
  std::map<int, RatFunc> m1, m2;
  auto multiple = [&](std::map<int, RatFunc>& cache, int m, const RatFunc& t) -> const RatFunc& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, s.law.multiple(m, t)).first;
    return it->second;
  };
  for (const auto& h : s.quiver.arrows()) {
    const int out1 = v1[h.out], inc1 = v1[h.inc];
    for (int i = 1; i <= out1; ++i)
      for (int j = 1; j <= v2[h.inc]; ++j)
        absorb(s.law, k,
               s.law.sum(s.law.difference(lam(h.inc, inc1 + j), lam(h.out, i)), multiple(m1, h.m_h, s.t1)));
    for (int i = 1; i <= inc1; ++i)
      for (int j = 1; j <= v2[h.out]; ++j)
        absorb(s.law, k,
               s.law.sum(s.law.difference(lam(h.out, out1 + j), lam(h.inc, i)), multiple(m2, h.m_hstar, s.t2)));
  }
}

void check_element(const ShuffleElement& e) {
  for (const auto& v : e.f.vars())
    if (v.is_lambda() && v.slot() > e.dim[v.vertex()])
      throw InvalidInput("element of dimension " + e.dim.str() + " uses " + v.str());
}

}  // namespace

const VarId& hbar_var() {
  static const VarId v = VarId::param("hbar");
  return v;
}

ShuffleSetup ShuffleSetup::symbolic(FormalGroupLaw law, Quiver quiver) {
  return ShuffleSetup{std::move(law), std::move(quiver), RatFunc::param("t1"), RatFunc::param("t2")};
}

ShuffleSetup ShuffleSetup::case2(FormalGroupLaw law, const Quiver& quiver, bool full_hbar) {
  const RatFunc t = full_hbar ? RatFunc::variable(hbar_var()) : RatFunc::variable(hbar_var()) / RatFunc(2L);
  return ShuffleSetup{std::move(law), quiver.case2_weights(), t, t};
}

RatFunc offset_slots(const RatFunc& f, const DimVector& by) {
  if (by.is_zero()) return f;
  return f.rename([&](const VarId& v) {
    if (!v.is_lambda()) return v;
    return VarId::lambda(v.vertex(), v.slot() + by[v.vertex()]);
  });
}

RatFunc fac1(const ShuffleSetup& s, const DimVector& v1, const DimVector& v2) {
  const Kernel k = fac1_kernel(s, v1, v2);
  return k.series / RatFunc(k.den);
}

RatFunc fac2(const ShuffleSetup& s, const DimVector& v1, const DimVector& v2) {
  Kernel k;
  absorb_fac2(s, v1, v2, k);
  return k.series;
}

ShuffleElement shuffle_product(const ShuffleSetup& s, const ShuffleElement& a, const ShuffleElement& b) {
  check_element(a);
  check_element(b);
  Kernel k = fac1_kernel(s, a.dim, b.dim);
  absorb(s.law, k, a.f * offset_slots(b.f, a.dim));
  absorb_fac2(s, a.dim, b.dim, k);
  ShuffleElement r{a.dim + b.dim, finish_sum(s.law, shuffles(a.dim, b.dim), k)};
  check_poles(s.law, a, b, r);
  return r;
}

ShuffleElement twisted_product(const ShuffleSetup& s, const ShuffleElement& a, const ShuffleElement& b) {
  ShuffleElement r = shuffle_product(s, a, b);
  if (s.quiver.twist_sign(a.dim, b.dim) < 0) r.f = -r.f;
  return r;
}

ShuffleElement coha_formal_product(const ShuffleSetup& s, const ShuffleElement& a, const ShuffleElement& b) {
  check_element(a);
  check_element(b);
  Kernel k;
  absorb(s.law, k, a.f * offset_slots(b.f, a.dim));
  for (const auto& h : s.quiver.arrows()) {
    const int inc1 = a.dim[h.inc];
    for (int i = 1; i <= a.dim[h.out]; ++i)
      for (int j = 1; j <= b.dim[h.inc]; ++j) absorb(s.law, k, s.law.difference(lam(h.inc, inc1 + j), lam(h.out, i)));
  }
  for (const auto& [vertex, n1] : a.dim.entries())
    for (int i = 1; i <= n1; ++i)
      for (int j = 1; j <= b.dim[vertex]; ++j) divide_by_difference(s.law, k, lam(vertex, n1 + j), lam(vertex, i));
  ShuffleElement r{a.dim + b.dim, finish_sum(s.law, shuffles(a.dim, b.dim), k)};
  check_poles(s.law, a, b, r);
  return r;
}

RatFunc flag_pushforward(const FormalGroupLaw& F, const RatFunc& f, const std::vector<int>& blocks,
                         const std::string& vertex) {
  for (int b : blocks)
    if (b < 0) throw InvalidInput("negative block size");
  Kernel k;
  absorb(F, k, f);
  int start = 0;
  for (std::size_t A = 0; A < blocks.size(); ++A) {
    int other = start + blocks[A];
    for (std::size_t B = A + 1; B < blocks.size(); ++B) {
      for (int j = start + 1; j <= start + blocks[A]; ++j)
        for (int i = other + 1; i <= other + blocks[B]; ++i) divide_by_difference(F, k, lam(vertex, i), lam(vertex, j));
      other += blocks[B];
    }
    start += blocks[A];
  }
  return finish_sum(F, block_shuffles(vertex, blocks), k);
}

RatFunc grass_pushforward(const FormalGroupLaw& F, const RatFunc& f, int r, int n, const std::string& vertex) {
  if (r < 0 || r > n) throw InvalidInput("grass_pushforward needs 0 <= r <= n");
  return flag_pushforward(F, f, {r, n - r}, vertex);
}

RatFunc proj_pushforward(const FormalGroupLaw& F, const RatFunc& f, const VarId& t, int n, const std::string& vertex) {
  if (n < 1) throw InvalidInput("proj_pushforward needs n >= 1");
  std::vector<RatFunc> terms;
  for (int i = 1; i <= n; ++i) {
    Kernel k;
    RatFunc value = f.substitute({{t, F.inverse(lam(vertex, i))}});
    absorb(F, k, value);
    for (int j = 1; j <= n; ++j)
      if (j != i) divide_by_difference(F, k, lam(vertex, j), lam(vertex, i));
    terms.push_back(RatFunc::fraction(k.series.num(), k.den * k.series.den()));
  }
  RatFunc total = sum(terms);
  if (is_truncated(F)) {
    if (!total.is_poly()) throw NotTruncatable("truncated-law pushforward did not reduce to a polynomial");
    const int valid = F.order() - (n - 1);
    total = valid <= 0 ? RatFunc() : RatFunc(total.num().truncated(static_cast<unsigned>(valid)));
  }
  return total;
}

ShuffleSetup ktheory_setup(const Quiver& quiver) {
  if (!quiver.all_unit_weights()) throw InvalidInput("the K-theoretic kernel assumes unit arrow weights");
  const RatFunc one(1L);
  return ShuffleSetup{FormalGroupLaw::multiplicative(one), quiver, one - RatFunc::param("s1").inverse(),
                      one - RatFunc::param("s2").inverse()};
}

namespace {

RatFunc substitute_roots(const RatFunc& f, const std::function<RatFunc(const RatFunc&)>& image) {
  std::map<VarId, RatFunc> values;
  for (const auto& v : f.vars())
    if (v.is_lambda()) values.emplace(v, image(RatFunc::variable(v)));
  return values.empty() ? f : f.substitute(values);
}

}  // namespace

RatFunc z_to_lambda(const RatFunc& f, KConvention c) {
  const RatFunc one(1L);
  if (c == KConvention::ChernRoot) return substitute_roots(f, [&](const RatFunc& x) { return (one - x).inverse(); });
  return substitute_roots(f, [&](const RatFunc& x) { return one - x; });
}

RatFunc lambda_to_z(const RatFunc& f, KConvention c) {
  const RatFunc one(1L);
  if (c == KConvention::ChernRoot) return substitute_roots(f, [&](const RatFunc& x) { return one - x.inverse(); });
  return substitute_roots(f, [&](const RatFunc& x) { return one - x; });
}

ShuffleElement ktheory_product(const Quiver& quiver, const ShuffleElement& a, const ShuffleElement& b, KConvention c) {
  const ShuffleSetup s = ktheory_setup(quiver);
  const ShuffleElement r =
      shuffle_product(s, ShuffleElement{a.dim, z_to_lambda(a.f, c)}, ShuffleElement{b.dim, z_to_lambda(b.f, c)});
  return ShuffleElement{r.dim, lambda_to_z(r.f, c)};
}

namespace {

std::string single_vertex(const ShuffleElement& a, const ShuffleElement& b) {
  const DimVector v = a.dim + b.dim;
  if (v.entries().size() > 1) throw InvalidInput("Feigin–Odesskii products live on a single vertex");
  return v.is_zero() ? std::string("1") : v.entries().begin()->first;
}

}  // namespace

ShuffleElement fo_product(const ShuffleElement& a, const ShuffleElement& b) {
  check_element(a);
  check_element(b);
  const std::string vertex = single_vertex(a, b);
  const int r = a.dim[vertex], n = r + b.dim[vertex];
  const RatFunc one(1L), q1 = RatFunc::param("q1"), q2 = RatFunc::param("q2");
  RatFunc kernel = a.f * offset_slots(b.f, a.dim);
  for (int j = 1; j <= r; ++j)
    for (int i = r + 1; i <= n; ++i) {
      const RatFunc x = lam(vertex, i) / lam(vertex, j);
      kernel *= (one - q1 * x) * (one - q2 * x) / ((one - x) * (one - q1 * q2 * x));
    }
  return ShuffleElement{a.dim + b.dim, sum_over(shuffles(a.dim, b.dim), kernel)};
}

ShuffleElement fo_embed(const ShuffleElement& f) {
  check_element(f);
  const std::string vertex = single_vertex(f, ShuffleElement{});
  const int n = f.dim[vertex];
  const RatFunc one(1L), q = RatFunc::param("q1") * RatFunc::param("q2");
  RatFunc y(1L);
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i) {
      const RatFunc x = lam(vertex, j) / lam(vertex, i);
      y *= (one - q * x) * (one - q * x.inverse());
    }
  const std::map<VarId, RatFunc> params{{VarId::param("q1"), RatFunc::param("s1").inverse()},
                                        {VarId::param("q2"), RatFunc::param("s2").inverse()}};
  return ShuffleElement{f.dim, (f.f * y).substitute(params)};
}

std::string word_str(const std::vector<Letter>& word) {
  std::string out;
  for (const auto& l : word) out += "(" + l.vertex + "," + std::to_string(l.power) + ")";
  return out.empty() ? "()" : out;
}

std::vector<SphericalEntry> spherical_span(const ShuffleSetup& s, int max_deg, const DimVector& max_dim, bool twisted,
                                           const SphericalLimits& limits) {
  if (max_deg < 0) throw InvalidInput("max_deg must be non-negative");
  std::vector<Letter> letters;
  for (const auto& v : s.quiver.vertices())
    for (int r = 0; r <= max_deg; ++r) letters.push_back(Letter{v, r});

  // Enumerate every word first so the limits are checked before any work.
  struct Pending {
    std::vector<Letter> word;
    DimVector dim;
  };
  std::vector<Pending> words;
  std::vector<Pending> frontier{Pending{{}, DimVector()}};
  std::size_t shuffle_terms = 0;
  while (!frontier.empty()) {
    std::vector<Pending> next;
    for (const auto& p : frontier)
      for (const auto& l : letters) {
        DimVector d = p.dim + DimVector::unit(l.vertex);
        if (!d.fits_within(max_dim)) continue;
        Pending w{p.word, d};
        w.word.push_back(l);
        shuffle_terms += static_cast<std::size_t>(d[l.vertex]);
        next.push_back(w);
        words.push_back(std::move(w));
        if (words.size() > limits.max_words)
          throw LimitExceeded("spherical table exceeds " + std::to_string(limits.max_words) + " words");
        if (shuffle_terms > limits.max_shuffle_terms)
          throw LimitExceeded("spherical table exceeds " + std::to_string(limits.max_shuffle_terms) + " shuffle terms");
      }
    frontier = std::move(next);
  }

  std::map<std::string, ShuffleElement> known;
  std::vector<SphericalEntry> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    const Letter& last = w.word.back();
    const ShuffleElement gen{DimVector::unit(last.vertex),
                             RatFunc(Poly::variable(VarId::lambda(last.vertex, 1), static_cast<unsigned>(last.power)))};
    ShuffleElement value = gen;
    if (w.word.size() > 1) {
      const std::vector<Letter> prefix(w.word.begin(), w.word.end() - 1);
      const ShuffleElement& left = known.at(word_str(prefix));
      value = twisted ? twisted_product(s, left, gen) : shuffle_product(s, left, gen);
    }
    known.emplace(word_str(w.word), value);
    out.push_back(SphericalEntry{w.word, std::move(value)});
  }
  return out;
}

}  // namespace qsh
