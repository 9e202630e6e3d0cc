#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "qsh/var.hpp"

namespace qsh {

// Dimension vector v ∈ ℕ^I. Zero entries are never stored, so equality is
// structural.
class DimVector {
 public:
  using Map = std::map<std::string, int, VertexLess>;

  DimVector() = default;
  DimVector(std::initializer_list<std::pair<const std::string, int>> entries);
  explicit DimVector(const Map& entries);

  static DimVector unit(const std::string& vertex) { return DimVector({{vertex, 1}}); }

  int operator[](const std::string& vertex) const;
  void set(const std::string& vertex, int value);
  const Map& entries() const { return entries_; }

  int total() const;
  bool is_zero() const { return entries_.empty(); }
  // Componentwise ≤.
  bool fits_within(const DimVector& bound) const;

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  DimVector scaled(int k) const;
  friend bool operator==(const DimVector&, const DimVector&) = default;

  // "0", or "1:2,2:1".
  std::string str() const;

 private:
  Map entries_;
};

}  // namespace qsh
