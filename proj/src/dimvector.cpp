#include "qsh/dimvector.hpp"

#include "qsh/errors.hpp"

namespace qsh {

DimVector::DimVector(std::initializer_list<std::pair<const std::string, int>> entries) {
  for (const auto& [k, v] : entries) set(k, (*this)[k] + v);
}

DimVector::DimVector(const Map& entries) {
  for (const auto& [k, v] : entries) set(k, v);
}

int DimVector::operator[](const std::string& vertex) const {
  auto it = entries_.find(vertex);
  return it == entries_.end() ? 0 : it->second;
}

void DimVector::set(const std::string& vertex, int value) {
  if (value < 0) throw InvalidInput("negative dimension at vertex " + vertex);
  if (value == 0)
    entries_.erase(vertex);
  else
    entries_[vertex] = value;
}

int DimVector::total() const {
  int t = 0;
  for (const auto& [k, v] : entries_) t += v;
  return t;
}

bool DimVector::fits_within(const DimVector& bound) const {
  for (const auto& [k, v] : entries_)
    if (v > bound[k]) return false;
  return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
  DimVector out = *this;
  for (const auto& [k, v] : o.entries_) out.set(k, out[k] + v);
  return out;
}

DimVector DimVector::operator-(const DimVector& o) const {
  DimVector out = *this;
  for (const auto& [k, v] : o.entries_) out.set(k, out[k] - v);
  return out;
}

DimVector DimVector::scaled(int k) const {
  DimVector out;
  for (const auto& [v, n] : entries_) out.set(v, n * k);
  return out;
}

std::string DimVector::str() const {
  if (entries_.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : entries_) {
    if (!s.empty()) s += ',';
    s += k + ":" + std::to_string(v);
  }
  return s;
}

}  // namespace qsh
