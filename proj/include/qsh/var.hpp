#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qsh {

// Natural order on vertex ids: numeric ids compare by value and sort before
// non-numeric ids, which compare lexicographically.
std::strong_ordering compare_vertices(std::string_view a, std::string_view b);

struct VertexLess {
  bool operator()(std::string_view a, std::string_view b) const { return compare_vertices(a, b) < 0; }
};

// A variable of the coefficient ring: either a Chern root λ^vertex_slot or a
// named parameter (t1, t2, hbar, beta, b, u, v, ...).
//
// The total order puts every Lambda variable first, ordered by (vertex, slot),
// then every Param alphabetically. Canonical forms depend on this order.
class VarId {
 public:
  enum class Kind : std::uint8_t { Lambda, Param };

  static VarId lambda(std::string vertex, int slot);
  static VarId param(std::string name);

  Kind kind() const { return kind_; }
  bool is_lambda() const { return kind_ == Kind::Lambda; }
  const std::string& vertex() const { return label_; }
  int slot() const { return slot_; }
  const std::string& name() const { return label_; }

  // Text form: "L<vertex>_<slot>" for Chern roots, the bare name for parameters.
  std::string str() const;

  // Parses the text form. Identifiers matching L<alnum>_<digits> are Lambda.
  static VarId parse(std::string_view text);

  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b);
  friend bool operator==(const VarId& a, const VarId& b) {
    return a.kind_ == b.kind_ && a.slot_ == b.slot_ && a.label_ == b.label_;
  }

 private:
  VarId(Kind k, std::string label, int slot) : kind_(k), label_(std::move(label)), slot_(slot) {}

  Kind kind_;
  std::string label_;
  int slot_ = 0;
};

}  // namespace qsh
