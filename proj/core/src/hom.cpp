#include "qr/hom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qr {

QuandleHom::QuandleHom(FiniteRack source, FiniteRack target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.size()) fail_input("homomorphism map has wrong length");
  for (std::size_t v : map_)
    if (v >= target_.size()) fail_input("homomorphism image out of range");
  for (std::size_t x = 0; x < source_.size(); ++x)
    for (std::size_t y = 0; y < source_.size(); ++y)
      if (map_[source_.mul(x, y)] != target_.mul(map_[x], map_[y]))
        fail_input("map does not preserve the product");
}

bool QuandleHom::is_surjective() const {
  std::set<std::size_t> hit(map_.begin(), map_.end());
  return hit.size() == target_.size();
}

std::vector<std::size_t> QuandleHom::fiber_of(std::size_t x) const {
  if (x >= source_.size()) fail_input("element out of range");
  std::vector<std::size_t> fiber;
  for (std::size_t i = 0; i < source_.size(); ++i)
    if (map_[i] == map_[x]) fiber.push_back(i);
  return fiber;
}

std::vector<std::vector<std::size_t>> QuandleHom::fibers() const {
  std::map<std::size_t, std::vector<std::size_t>> by_image;
  for (std::size_t i = 0; i < source_.size(); ++i) by_image[map_[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [img, members] : by_image) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<std::size_t> QuandleHom::fiber_index() const {
  auto fs = fibers();
  std::vector<std::size_t> idx(source_.size());
  for (std::size_t c = 0; c < fs.size(); ++c)
    for (std::size_t m : fs[c]) idx[m] = c;
  return idx;
}

std::pair<FiniteRack, std::vector<std::size_t>> quotient_by_hom(const QuandleHom& f) {
  auto fs = f.fibers();
  auto idx = f.fiber_index();
  std::size_t m = fs.size();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::size_t cls = idx[f.source().mul(fs[a][0], fs[b][0])];
      // Well-definedness guard; cannot fire for a verified homomorphism.
      for (std::size_t xa : fs[a])
        for (std::size_t xb : fs[b])
          if (idx[f.source().mul(xa, xb)] != cls)
            throw std::logic_error("class product is not well defined");
      table[a][b] = cls;
    }
  return {FiniteRack(f.source().name() + "/~", std::move(table)), idx};
}

namespace {

struct ElementSignature {
  bool idempotent;
  std::size_t orbit_size;
  std::vector<std::size_t> cycle_type;
  friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

std::vector<ElementSignature> signatures(const FiniteRack& x) {
  std::vector<std::size_t> orbit_of(x.size());
  if (x.is_rack()) {
    for (std::size_t o = 0; o < x.orbits().size(); ++o)
      for (std::size_t m : x.orbits()[o]) orbit_of[m] = x.orbits()[o].size();
  }
  std::vector<ElementSignature> sig;
  sig.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<std::size_t> img(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) img[j] = x.mul(j, i);
    ElementSignature s;
    s.idempotent = x.mul(i, i) == i;
    s.orbit_size = x.is_rack() ? orbit_of[i] : 0;
    s.cycle_type = x.is_rack() ? Permutation(img).cycle_type() : std::vector<std::size_t>{};
    sig.push_back(std::move(s));
  }
  return sig;
}

struct IsoSearch {
  const FiniteRack& x;
  const FiniteRack& y;
  std::vector<ElementSignature> sx, sy;
  std::vector<std::size_t> image;      // x -> y, size_t(-1) when unset
  std::vector<bool> used;

  bool consistent(std::size_t a) const {
    // Check every product involving a whose operands are already mapped.
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (image[b] == std::size_t(-1)) continue;
      std::size_t ab = x.mul(a, b), ba = x.mul(b, a);
      if (image[ab] != std::size_t(-1) && y.mul(image[a], image[b]) != image[ab]) return false;
      if (image[ba] != std::size_t(-1) && y.mul(image[b], image[a]) != image[ba]) return false;
    }
    return true;
  }

  bool extend(std::size_t next) {
    if (next == x.size()) return true;
    for (std::size_t cand = 0; cand < y.size(); ++cand) {
      if (used[cand] || sx[next] != sy[cand]) continue;
      image[next] = cand;
      used[cand] = true;
      if (consistent(next) && extend(next + 1)) return true;
      image[next] = std::size_t(-1);
      used[cand] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> are_isomorphic(const FiniteRack& x, const FiniteRack& y) {
  if (x.size() != y.size()) return std::nullopt;
  if (x.classification() != y.classification()) return std::nullopt;
  IsoSearch search{x, y, signatures(x), signatures(y), {}, {}};
  {
    auto mx = search.sx;
    auto my = search.sy;
    std::sort(mx.begin(), mx.end());
    std::sort(my.begin(), my.end());
    if (mx != my) return std::nullopt;
  }
  search.image.assign(x.size(), std::size_t(-1));
  search.used.assign(y.size(), false);
  if (!search.extend(0)) return std::nullopt;
  return Permutation(search.image);
}

std::vector<QuandleHom> all_homomorphisms(const FiniteRack& x, const FiniteRack& y,
                                          bool surjective_only) {
  std::vector<QuandleHom> out;
  std::vector<std::size_t> map(x.size(), 0);
  auto preserves = [&]() {
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < x.size(); ++b)
        if (map[x.mul(a, b)] != y.mul(map[a], map[b])) return false;
    return true;
  };
  while (true) {
    if (preserves()) {
      bool keep = true;
      if (surjective_only) {
        std::set<std::size_t> hit(map.begin(), map.end());
        keep = hit.size() == y.size();
      }
      if (keep) out.emplace_back(x, y, map);
    }
    std::size_t pos = map.size();
    while (pos > 0 && map[pos - 1] + 1 == y.size()) map[--pos] = 0;
    if (pos == 0) break;
    ++map[pos - 1];
  }
  return out;
}

}  // namespace qr
