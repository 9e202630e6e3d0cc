#pragma once

#include <string>
#include <vector>

#include "qsh/dimvector.hpp"
#include "qsh/perm.hpp"

namespace qsh {

struct Arrow {
  std::string out;
  std::string inc;
  int m_h = 1;
  int m_hstar = 1;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

using IntMatrix = std::vector<std::vector<int>>;

// Matrices indexed by the quiver's vertex list order.
struct QuiverMatrices {
  IntMatrix ad;      // ad[k][l] = #{h : inc(h) = k, out(h) = l}
  IntMatrix ad_bar;  // transpose of ad
  IntMatrix c;       // I - ad
  IntMatrix c_bar;   // I - ad_bar
  IntMatrix cartan;  // 2δ_kl - a_kl - a_lk
};

class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);
  // "A1", "A2", "A3", "Jordan", "Kronecker" (two arrows) or "Kronecker<a>".
  // Every preset carries unit weights.
  static Quiver preset(const std::string& name);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool has_vertex(const std::string& v) const;
  std::size_t index_of(const std::string& v) const;

  // a_kl: number of arrows k → l.
  int arrow_count(const std::string& from, const std::string& to) const;
  // c_kl = 2 if k = l (as a convention, regardless of loops), else -a_kl - a_lk.
  int cartan_entry(const std::string& k, const std::string& l) const;
  bool has_loop_at(const std::string& v) const;
  bool has_loops() const;

  QuiverMatrices matrices() const;

  // Weights m_{h_p} = a + 2 - 2p, m_{h_p*} = -a + 2p, arrows between each
  // ordered pair numbered in input order.
  Quiver case2_weights() const;
  bool all_unit_weights() const;
  // t1^{m_h} t2^{m_h*} constant: with t1 = t2 this is m_h + m_h* constant.
  bool satisfies_case2_assumption() const;

  // (-1)^{<v2, C̄ v1> + 1}.
  int twist_sign(const DimVector& v1, const DimVector& v2) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// ∏_i Sh(v1^i, v2^i): permutations keeping the order of slots 1..v1^i and of
// v1^i+1..v^i at every vertex.
std::vector<SlotPermutation> shuffles(const DimVector& v1, const DimVector& v2);

// Multi-block shuffles of a single vertex: the images of consecutive blocks
// of the given sizes are increasing.
std::vector<SlotPermutation> block_shuffles(const std::string& vertex, const std::vector<int>& blocks);

}  // namespace qsh
