#include "qr/rack.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace qr {

std::string to_string(RackClass c) {
  switch (c) {
    case RackClass::NotRack:
      return "not a rack";
    case RackClass::RackOnly:
      return "rack";
    case RackClass::Quandle:
      return "quandle";
  }
  return "?";
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) fail_input("permutation image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::after(const Permutation& first) const {
  if (size() != first.size()) fail_input("permutation size mismatch");
  std::vector<std::size_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[i] = image_[first.image_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[image_[i]] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = image_[j];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

RackClass check_axioms(const std::vector<std::vector<std::size_t>>& table) {
  std::size_t n = table.size();
  if (n == 0) fail_input("table must be non-empty");
  for (const auto& row : table) {
    if (row.size() != n) fail_input("table is not square");
    for (std::size_t v : row)
      if (v >= n) fail_input("table entry out of range");
  }
  // (R1): for each y the right translation z -> z*y is a bijection.
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]]) return RackClass::NotRack;
      seen[table[i][j]] = true;
    }
  }
  // (R2): right self-distributivity.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[table[i][k]][table[j][k]]) return RackClass::NotRack;
  // (Q1): idempotence.
  for (std::size_t i = 0; i < n; ++i)
    if (table[i][i] != i) return RackClass::RackOnly;
  return RackClass::Quandle;
}

FiniteRack::FiniteRack(std::string name, std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  class_ = check_axioms(table_);
  if (class_ == RackClass::NotRack) return;
  std::size_t n = size();
  involutary_ = true;
  for (std::size_t x = 0; x < n && involutary_; ++x)
    for (std::size_t y = 0; y < n && involutary_; ++y)
      involutary_ = table_[table_[y][x]][x] == y;
  latin_ = true;
  for (std::size_t i = 0; i < n && latin_; ++i) {
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[i][j]]) {
        latin_ = false;
        break;
      }
      seen[table_[i][j]] = true;
    }
  }
  // Orbits of Inn(X): connected components of i -> i*x over all x.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t a = find(i), b = find(table_[i][x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[find(i)].push_back(i);
  for (auto& [root, members] : blocks) orbits_.push_back(members);
}

void FiniteRack::require_rack() const {
  if (!is_rack()) fail_hypothesis("operation requires a rack, got: " + to_string(class_));
}

bool FiniteRack::is_trivial() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (table_[i][j] != i) return false;
  return true;
}

bool FiniteRack::is_involutary() const {
  require_rack();
  return involutary_;
}

bool FiniteRack::is_latin() const {
  require_rack();
  return latin_;
}

bool FiniteRack::is_connected() const {
  require_rack();
  return orbits_.size() == 1;
}

const std::vector<std::vector<std::size_t>>& FiniteRack::orbits() const {
  require_rack();
  return orbits_;
}

FiniteRack trivial(std::size_t n) {
  if (n == 0) fail_input("trivial quandle must be non-empty");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = i;
  return FiniteRack("T" + std::to_string(n), std::move(t));
}

FiniteRack dihedral(std::size_t n) {
  if (n == 0) fail_input("dihedral quandle must be non-empty");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (2 * j + n - i) % n;
  return FiniteRack("R" + std::to_string(n), std::move(t));
}

FiniteRack conj(const FiniteGroup& g) {
  std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = g.mul(g.mul(g.inverse(b), a), b);
  return FiniteRack("Conj(" + g.name() + ")", std::move(t));
}

FiniteRack core(const FiniteGroup& g) {
  std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = g.mul(g.mul(b, g.inverse(a)), b);
  return FiniteRack("Core(" + g.name() + ")", std::move(t));
}

FiniteRack alexander(const FiniteGroup& a, const std::vector<std::size_t>& t) {
  if (!a.is_abelian()) fail_hypothesis("Alexander quandles require an abelian group");
  if (!a.is_automorphism(t)) fail_hypothesis("the twist is not a group automorphism");
  std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> tab(n, std::vector<std::size_t>(n));
  // x * y = t(x) + y - t(y)
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) tab[x][y] = a.mul(t[x], a.mul(y, a.inverse(t[y])));
  return FiniteRack("Alex(" + a.name() + ")", std::move(tab));
}

FiniteRack gen_alexander(const FiniteGroup& g, const std::vector<std::size_t>& phi) {
  if (!g.is_automorphism(phi)) fail_hypothesis("the twist is not a group automorphism");
  std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> tab(n, std::vector<std::size_t>(n));
  // a * b = phi(a b^{-1}) b
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) tab[a][b] = g.mul(phi[g.mul(a, g.inverse(b))], b);
  return FiniteRack("GAlex(" + g.name() + ")", std::move(tab));
}

FiniteRack flip_rack(std::size_t n) {
  if (n < 2) fail_input("flip rack needs at least two elements");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = n - 1 - i;
  return FiniteRack("flip" + std::to_string(n), std::move(t));
}

FiniteRack two_elem_rack() {
  FiniteRack r = flip_rack(2);
  return FiniteRack("rack2", r.table());
}

std::vector<Permutation> inner_generators(const FiniteRack& x) {
  if (!x.is_rack()) fail_hypothesis("inner automorphisms require a rack");
  std::vector<Permutation> gens;
  gens.reserve(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) {
    std::vector<std::size_t> img(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) img[i] = x.mul(i, c);
    gens.emplace_back(std::move(img));
  }
  return gens;
}

std::set<Permutation> inner_group_closure(const FiniteRack& x, std::size_t cap) {
  std::vector<Permutation> gens = inner_generators(x);
  std::set<Permutation> group;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(x.size());
  group.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (const Permutation& g : gens) {
      Permutation q = g.after(p);
      if (group.insert(q).second) {
        if (group.size() > cap) fail_resource("inner automorphism group exceeds closure cap");
        queue.push_back(q);
      }
    }
  }
  return group;
}

std::vector<std::vector<std::size_t>> orbits(const FiniteRack& x) { return x.orbits(); }

std::vector<std::size_t> subquandle_closure(const FiniteRack& x,
                                            const std::vector<std::size_t>& seed) {
  if (seed.empty()) fail_input("closure of an empty set");
  std::set<std::size_t> closed;
  std::deque<std::size_t> queue;
  for (std::size_t s : seed) {
    if (s >= x.size()) fail_input("seed element out of range");
    if (closed.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    std::vector<std::size_t> snapshot(closed.begin(), closed.end());
    for (std::size_t b : snapshot) {
      for (std::size_t p : {x.mul(a, b), x.mul(b, a)})
        if (closed.insert(p).second) queue.push_back(p);
    }
  }
  std::vector<std::size_t> out(closed.begin(), closed.end());
  if (x.is_rack() && !is_closed_subset(x, out))
    fail_hypothesis("closure failed to produce a subrack");
  return out;
}

bool is_closed_subset(const FiniteRack& x, const std::vector<std::size_t>& subset) {
  std::set<std::size_t> s(subset.begin(), subset.end());
  for (std::size_t a : subset)
    for (std::size_t b : subset)
      if (!s.count(x.mul(a, b))) return false;
  // Internal (R1): right translations restrict to bijections of the subset.
  for (std::size_t b : subset) {
    std::set<std::size_t> image;
    for (std::size_t a : subset) image.insert(x.mul(a, b));
    if (image != s) return false;
  }
  return true;
}

FiniteRack subrack(const FiniteRack& x, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t i = 0; i < sorted.size(); ++i) renumber[sorted[i]] = i;
  std::vector<std::vector<std::size_t>> t(sorted.size(), std::vector<std::size_t>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      auto it = renumber.find(x.mul(sorted[i], sorted[j]));
      if (it == renumber.end()) fail_input("subset is not multiplicatively closed");
      t[i][j] = it->second;
    }
  return FiniteRack(x.name() + "|sub", std::move(t));
}

}  // namespace qr
