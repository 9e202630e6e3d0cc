#pragma once

#include <string>
#include <vector>

#include "qsh/fgl.hpp"
#include "qsh/quiver.hpp"

namespace qsh {

// An element of the degree-v piece: a function of λ^i_j (j ≤ v^i) and parameters.
struct ShuffleElement {
  DimVector dim;
  RatFunc f;
  friend bool operator==(const ShuffleElement&, const ShuffleElement&) = default;
};

// The data a product depends on: the law, the weighted quiver and the values
// of the two quantization parameters.
struct ShuffleSetup {
  FormalGroupLaw law;
  Quiver quiver;
  RatFunc t1;
  RatFunc t2;

  // t1, t2 left as the parameters "t1", "t2".
  static ShuffleSetup symbolic(FormalGroupLaw law, Quiver quiver);
  // Case-2 weights with t1 = t2 = hbar/2, or t1 = t2 = hbar when full_hbar.
  static ShuffleSetup case2(FormalGroupLaw law, const Quiver& quiver, bool full_hbar = false);
};

const VarId& hbar_var();

// λ^i_t ↦ λ^i_{t + by^i}.
RatFunc offset_slots(const RatFunc& f, const DimVector& by);

RatFunc fac1(const ShuffleSetup& s, const DimVector& v1, const DimVector& v2);
RatFunc fac2(const ShuffleSetup& s, const DimVector& v1, const DimVector& v2);

// Σ_{σ ∈ Sh(v1, v2)} σ(f1 · f2 · fac1 · fac2).
ShuffleElement shuffle_product(const ShuffleSetup& s, const ShuffleElement& a, const ShuffleElement& b);
// twist_sign(v1, v2) · shuffle_product.
ShuffleElement twisted_product(const ShuffleSetup& s, const ShuffleElement& a, const ShuffleElement& b);
// Σ σ(f1 f2 ∏(λ''^j_t -_F λ'^i_s)^{a_ij} / ∏(λ''^i_t -_F λ'^i_s)).
ShuffleElement coha_formal_product(const ShuffleSetup& s, const ShuffleElement& a, const ShuffleElement& b);

// Σ over block shuffles of f / ∏_{blocks A before B} ∏_{j∈A, i∈B} (λ_i -_F λ_j)
// at a single vertex. Slots of f beyond the blocks are left alone.
RatFunc flag_pushforward(const FormalGroupLaw& F, const RatFunc& f, const std::vector<int>& blocks,
                         const std::string& vertex = "1");
RatFunc grass_pushforward(const FormalGroupLaw& F, const RatFunc& f, int r, int n, const std::string& vertex = "1");
// Σ_i f(-_F λ_i) / ∏_{j≠i} (λ_j -_F λ_i). Throws EvaluationPole.
RatFunc proj_pushforward(const FormalGroupLaw& F, const RatFunc& f, const VarId& t, int n,
                         const std::string& vertex = "1");

// K-theory with rational coefficients: the multiplicative law with β = 1 and
// t_i = 1 - 1/s_i. Elements are written in the tautological line bundles z,
// stored in the same slots as the Chern roots.
enum class KConvention {
  ChernRoot,  // λ = 1 - 1/z, the convention of the general K-theoretic kernel
  Jordan,     // λ = 1 - z, the convention of the Feigin–Odesskii comparison
};
ShuffleSetup ktheory_setup(const Quiver& quiver);
RatFunc z_to_lambda(const RatFunc& f, KConvention c);
RatFunc lambda_to_z(const RatFunc& f, KConvention c);
ShuffleElement ktheory_product(const Quiver& quiver, const ShuffleElement& a, const ShuffleElement& b, KConvention c);

// Feigin–Odesskii shuffle product on the Jordan quiver in z-variables with
// parameters q1, q2, and the embedding f ↦ f·Y_n with q_i ↦ 1/s_i.
ShuffleElement fo_product(const ShuffleElement& a, const ShuffleElement& b);
ShuffleElement fo_embed(const ShuffleElement& f);

struct Letter {
  std::string vertex;
  int power = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct SphericalEntry {
  std::vector<Letter> word;
  ShuffleElement value;
};

struct SphericalLimits {
  std::size_t max_words = 20000;
  std::size_t max_shuffle_terms = 2000000;
};

// Products of generators (λ^{(k)})^r, r ≤ max_deg, for every word whose total
// dimension fits within max_dim. Words are listed by length, then
// lexicographically by (vertex order, power). Throws LimitExceeded before any
// product is computed when the table would exceed the limits.
std::vector<SphericalEntry> spherical_span(const ShuffleSetup& s, int max_deg, const DimVector& max_dim, bool twisted,
                                           const SphericalLimits& limits = {});

std::string word_str(const std::vector<Letter>& word);

}  // namespace qsh
