#include "qsh/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qsh/errors.hpp"

namespace qsh {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    VarId::lambda(v, 1);  // validates the id
    if (!seen.insert(v).second) throw InvalidInput("duplicate vertex '" + v + "'");
  }
  for (const auto& h : arrows_)
    if (!seen.count(h.out) || !seen.count(h.inc))
      throw InvalidInput("arrow " + h.out + "->" + h.inc + " uses an unknown vertex");
}

Quiver Quiver::preset(const std::string& name) {
  if (name == "A1") return Quiver({"1"}, {});
  if (name == "A2") return Quiver({"1", "2"}, {{"1", "2"}});
  if (name == "A3") return Quiver({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  if (name == "Jordan") return Quiver({"1"}, {{"1", "1"}});
  if (name.rfind("Kronecker", 0) == 0) {
    const std::string rest = name.substr(9);
    int a = 2;
    if (!rest.empty()) {
      if (rest.size() > 2 || !std::all_of(rest.begin(), rest.end(), ::isdigit))
        throw InvalidInput("unknown quiver preset '" + name + "'");
      a = std::stoi(rest);
    }
    return Quiver({"1", "2"}, std::vector<Arrow>(static_cast<std::size_t>(a), Arrow{"1", "2"}));
  }
  throw InvalidInput("unknown quiver preset '" + name + "'");
}

bool Quiver::has_vertex(const std::string& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t Quiver::index_of(const std::string& v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw InvalidInput("unknown vertex '" + v + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

int Quiver::arrow_count(const std::string& from, const std::string& to) const {
  return static_cast<int>(
      std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& h) { return h.out == from && h.inc == to; }));
}

int Quiver::cartan_entry(const std::string& k, const std::string& l) const {
  if (k == l) return 2;
  return -arrow_count(k, l) - arrow_count(l, k);
}

bool Quiver::has_loop_at(const std::string& v) const { return arrow_count(v, v) > 0; }

bool Quiver::has_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& h) { return h.out == h.inc; });
}

QuiverMatrices Quiver::matrices() const {
  const std::size_t n = vertices_.size();
  QuiverMatrices m;
  m.ad.assign(n, std::vector<int>(n, 0));
  for (const auto& h : arrows_) ++m.ad[index_of(h.inc)][index_of(h.out)];
  m.ad_bar = m.c = m.c_bar = m.cartan = m.ad;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const int delta = k == l ? 1 : 0;
      m.ad_bar[k][l] = m.ad[l][k];
      m.c[k][l] = delta - m.ad[k][l];
      m.c_bar[k][l] = delta - m.ad[l][k];
      // a_kl counts arrows k → l, which is ad[l][k].
      m.cartan[k][l] = 2 * delta - m.ad[l][k] - m.ad[k][l];
    }
  return m;
}

Quiver Quiver::case2_weights() const {
  std::map<std::pair<std::string, std::string>, int> total, seen;
  for (const auto& h : arrows_) ++total[{h.out, h.inc}];
  std::vector<Arrow> weighted = arrows_;
  for (auto& h : weighted) {
    const int a = total[{h.out, h.inc}];
    const int p = ++seen[{h.out, h.inc}];
    h.m_h = a + 2 - 2 * p;
    h.m_hstar = -a + 2 * p;
  }
  return Quiver(vertices_, weighted);
}

bool Quiver::all_unit_weights() const {
  return std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& h) { return h.m_h == 1 && h.m_hstar == 1; });
}

bool Quiver::satisfies_case2_assumption() const {
  if (arrows_.empty()) return true;
  const int s = arrows_.front().m_h + arrows_.front().m_hstar;
  return std::all_of(arrows_.begin(), arrows_.end(), [s](const Arrow& h) { return h.m_h + h.m_hstar == s; });
}

int Quiver::twist_sign(const DimVector& v1, const DimVector& v2) const {
  // <v2, C̄ v1> = v2·v1 - Σ_{h} v2^{out(h)} v1^{inc(h)}.
  long pairing = 0;
  for (const auto& [vertex, n] : v2.entries()) pairing += static_cast<long>(n) * v1[vertex];
  for (const auto& h : arrows_) pairing -= static_cast<long>(v2[h.out]) * v1[h.inc];
  return (pairing + 1) % 2 == 0 ? 1 : -1;
}

namespace {

// Increasing index subsets of {1..n} of size k, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= n - (k - static_cast<int>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Images for slots 1..n: blocks receive increasing image sets.
void block_images(const std::vector<int>& blocks, std::size_t b, std::vector<int>& free_slots, std::vector<int>& image,
                  int offset, std::vector<std::vector<int>>& out) {
  if (b + 1 >= blocks.size()) {
    // The last block takes the remaining slots in order.
    std::copy(free_slots.begin(), free_slots.end(), image.begin() + offset);
    out.push_back(image);
    return;
  }
  const int size = blocks[b];
  for (const auto& pick : subsets(static_cast<int>(free_slots.size()), size)) {
    std::vector<int> rest;
    std::size_t pi = 0;
    for (std::size_t idx = 0; idx < free_slots.size(); ++idx) {
      if (pi < pick.size() && pick[pi] == static_cast<int>(idx) + 1) {
        image[static_cast<std::size_t>(offset) + pi] = free_slots[idx];
        ++pi;
      } else {
        rest.push_back(free_slots[idx]);
      }
    }
    block_images(blocks, b + 1, rest, image, offset + size, out);
  }
}

std::vector<std::vector<int>> vertex_block_images(const std::vector<int>& blocks) {
  const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  std::vector<int> free_slots(static_cast<std::size_t>(n));
  std::iota(free_slots.begin(), free_slots.end(), 1);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> out;
  if (blocks.empty()) return {{}};
  block_images(blocks, 0, free_slots, image, 0, out);
  return out;
}

}  // namespace

std::vector<SlotPermutation> block_shuffles(const std::string& vertex, const std::vector<int>& blocks) {
  std::vector<SlotPermutation> out;
  for (auto& img : vertex_block_images(blocks)) out.emplace_back(SlotPermutation::Map{{vertex, img}});
  return out;
}

std::vector<SlotPermutation> shuffles(const DimVector& v1, const DimVector& v2) {
  const DimVector v = v1 + v2;
  std::vector<SlotPermutation::Map> acc{SlotPermutation::Map{}};
  for (const auto& [vertex, n] : v.entries()) {
    const auto images = vertex_block_images({v1[vertex], v2[vertex]});
    std::vector<SlotPermutation::Map> next;
    next.reserve(acc.size() * images.size());
    for (const auto& m : acc)
      for (const auto& img : images) {
        auto copy = m;
        copy[vertex] = img;
        next.push_back(std::move(copy));
      }
    acc = std::move(next);
  }
  std::vector<SlotPermutation> out;
  out.reserve(acc.size());
  for (auto& m : acc) out.emplace_back(std::move(m));
  return out;
}

}  // namespace qsh
