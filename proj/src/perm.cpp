#include "qsh/perm.hpp"

#include <algorithm>
#include <numeric>

#include "qsh/errors.hpp"

namespace qsh {

SlotPermutation::SlotPermutation(Map images) : images_(std::move(images)) {
  for (const auto& [vertex, img] : images_) {
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted[k] != static_cast<int>(k) + 1)
        throw BadPermutation("slot images at vertex " + vertex + " are not a permutation");
  }
}

SlotPermutation SlotPermutation::transposition(const std::string& vertex, int n, int i, int j) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  if (i < 1 || j < 1 || i > n || j > n) throw BadPermutation("transposition outside 1.." + std::to_string(n));
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
  return SlotPermutation(Map{{vertex, img}});
}

bool SlotPermutation::is_identity() const {
  for (const auto& [vertex, img] : images_)
    for (std::size_t k = 0; k < img.size(); ++k)
      if (img[k] != static_cast<int>(k) + 1) return false;
  return true;
}

int SlotPermutation::apply(const std::string& vertex, int slot) const {
  auto it = images_.find(vertex);
  if (it == images_.end()) return slot;
  if (slot < 1 || slot > static_cast<int>(it->second.size()))
    throw BadPermutation("slot " + std::to_string(slot) + " at vertex " + vertex + " is outside the permuted range");
  return it->second[static_cast<std::size_t>(slot - 1)];
}

VarId SlotPermutation::apply(const VarId& v) const {
  if (!v.is_lambda()) return v;
  return VarId::lambda(v.vertex(), apply(v.vertex(), v.slot()));
}

std::string SlotPermutation::str() const {
  std::string out;
  for (const auto& [vertex, img] : images_) {
    if (!out.empty()) out += ' ';
    out += vertex + ":[";
    for (std::size_t k = 0; k < img.size(); ++k) out += (k ? "," : "") + std::to_string(img[k]);
    out += ']';
  }
  return out.empty() ? "id" : out;
}

RatFunc permute_vars(const RatFunc& f, const SlotPermutation& sigma) {
  if (sigma.is_identity()) {
    // Still validate the slot range.
    for (const auto& v : f.vars())
      if (v.is_lambda()) sigma.apply(v);
    return f;
  }
  return f.rename([&](const VarId& v) { return sigma.apply(v); });
}

RatFunc permute_vars(const RatFunc& f, const SlotPermutation& sigma, const DimVector& v) {
  for (const auto& [vertex, img] : sigma.images())
    if (static_cast<int>(img.size()) != v[vertex])
      throw BadPermutation("permutation at vertex " + vertex + " does not match the declared dimension");
  return permute_vars(f, sigma);
}

RatFunc symmetrize(const RatFunc& f, const std::vector<SlotPermutation>& perms) {
  std::vector<RatFunc> terms;
  terms.reserve(perms.size());
  for (const auto& s : perms) terms.push_back(permute_vars(f, s));
  return sum(terms);
}

bool is_symmetric(const RatFunc& f, const DimVector& v) {
  for (const auto& [vertex, n] : v.entries())
    for (int i = 1; i < n; ++i)
      if (!(permute_vars(f, SlotPermutation::transposition(vertex, n, i, i + 1)) == f)) return false;
  return true;
}

std::vector<SlotPermutation> full_symmetric_group(const std::string& vertex, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<SlotPermutation> out;
  do {
    out.emplace_back(SlotPermutation::Map{{vertex, img}});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace qsh
