#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qr/rack.hpp"

namespace qr {

/// A verified rack homomorphism: map[x * y] = map[x] * map[y].
class QuandleHom {
public:
  QuandleHom(FiniteRack source, FiniteRack target, std::vector<std::size_t> map);

  const FiniteRack& source() const { return source_; }
  const FiniteRack& target() const { return target_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }

  bool is_surjective() const;

  /// Elements with the same image as x.
  std::vector<std::size_t> fiber_of(std::size_t x) const;

  /// All fibers, ordered by smallest member; fibers()[fiber_index()[x]] owns x.
  std::vector<std::vector<std::size_t>> fibers() const;
  std::vector<std::size_t> fiber_index() const;

private:
  FiniteRack source_;
  FiniteRack target_;
  std::vector<std::size_t> map_;
};

/// The quandle on the fibers of f, with class product [x] o [y] = [x * y],
/// plus the class index of every source element.
std::pair<FiniteRack, std::vector<std::size_t>> quotient_by_hom(const QuandleHom& f);

/// Searches for a product-preserving bijection; signature-based pruning on
/// idempotence, orbit size, and translation cycle type before backtracking.
std::optional<Permutation> are_isomorphic(const FiniteRack& x, const FiniteRack& y);

/// All homomorphisms from x to y, lexicographically ordered by their maps.
/// Feasible for the small orders used here.
std::vector<QuandleHom> all_homomorphisms(const FiniteRack& x, const FiniteRack& y,
                                          bool surjective_only = false);

}  // namespace qr
