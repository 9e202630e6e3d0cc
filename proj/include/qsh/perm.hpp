#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsh/dimvector.hpp"
#include "qsh/ratfunc.hpp"

namespace qsh {

// A permutation of Chern-root slots, independently at each vertex. The entry
// for vertex i lists σ_i(1), ..., σ_i(n_i); vertices without an entry are
// fixed pointwise.
class SlotPermutation {
 public:
  using Map = std::map<std::string, std::vector<int>, VertexLess>;

  SlotPermutation() = default;
  // Throws BadPermutation unless each entry is a bijection of {1..n}.
  explicit SlotPermutation(Map images);
  static SlotPermutation transposition(const std::string& vertex, int n, int i, int j);

  const Map& images() const { return images_; }
  bool is_identity() const;
  // Image of the slot at a vertex; slots outside the entry's range are
  // rejected with BadPermutation.
  int apply(const std::string& vertex, int slot) const;
  VarId apply(const VarId& v) const;

  friend bool operator==(const SlotPermutation&, const SlotPermutation&) = default;
  std::string str() const;

 private:
  Map images_;
};

// λ^i_j ↦ λ^i_{σ_i(j)}; parameters are fixed.
RatFunc permute_vars(const RatFunc& f, const SlotPermutation& sigma);
// Same, additionally requiring σ to act on exactly the declared slots of v.
RatFunc permute_vars(const RatFunc& f, const SlotPermutation& sigma, const DimVector& v);

// Σ_σ permute_vars(f, σ).
RatFunc symmetrize(const RatFunc& f, const std::vector<SlotPermutation>& perms);

// Invariance under every adjacent transposition of 𝔖_v.
bool is_symmetric(const RatFunc& f, const DimVector& v);

// All of 𝔖_n acting on one vertex, in lexicographic order of image lists.
std::vector<SlotPermutation> full_symmetric_group(const std::string& vertex, int n);

}  // namespace qsh
