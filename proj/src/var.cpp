#include "qsh/var.hpp"

#include <algorithm>
#include <cctype>

#include "qsh/errors.hpp"

namespace qsh {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool valid_vertex(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c); });
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

}  // namespace

std::strong_ordering compare_vertices(std::string_view a, std::string_view b) {
  const bool na = all_digits(a), nb = all_digits(b);
  if (na != nb) return na ? std::strong_ordering::less : std::strong_ordering::greater;
  if (na) {
    auto trim = [](std::string_view s) {
      while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
      return s;
    };
    a = trim(a);
    b = trim(b);
    if (a.size() != b.size()) return a.size() <=> b.size();
  }
  return a.compare(b) <=> 0;
}

VarId VarId::lambda(std::string vertex, int slot) {
  if (!valid_vertex(vertex)) throw InvalidInput("invalid vertex id '" + vertex + "'");
  if (slot < 1) throw InvalidInput("slot indices are 1-based");
  return VarId(Kind::Lambda, std::move(vertex), slot);
}

VarId VarId::param(std::string name) {
  if (!valid_identifier(name)) throw InvalidInput("invalid parameter name '" + name + "'");
  return VarId(Kind::Param, std::move(name), 0);
}

std::string VarId::str() const {
  if (kind_ == Kind::Param) return label_;
  return "L" + label_ + "_" + std::to_string(slot_);
}

VarId VarId::parse(std::string_view text) {
  if (text.size() >= 4 && text.front() == 'L') {
    const auto us = text.rfind('_');
    if (us != std::string_view::npos && us > 1) {
      const auto vtx = text.substr(1, us - 1);
      const auto slot = text.substr(us + 1);
      if (valid_vertex(vtx) && all_digits(slot) && slot.size() < 9)
        return lambda(std::string(vtx), std::stoi(std::string(slot)));
    }
  }
  if (!valid_identifier(text)) throw ParseError("invalid identifier '" + std::string(text) + "'");
  return param(std::string(text));
}

std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
  if (a.kind_ != b.kind_) return a.kind_ == VarId::Kind::Lambda ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.kind_ == VarId::Kind::Param) return a.label_.compare(b.label_) <=> 0;
  if (auto c = compare_vertices(a.label_, b.label_); c != 0) return c;
  return a.slot_ <=> b.slot_;
}

}  // namespace qsh
