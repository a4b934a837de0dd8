#include "qr/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qr {

namespace {

// Product of two coefficient vectors under the bilinear extension of the
// Cayley table, kept on raw integer vectors.
IntVec table_mul(const FiniteRack& x, const IntVec& u, const IntVec& v) {
  IntVec out(x.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      out[x.mul(i, j)] += u[i] * v[j];
    }
  }
  return out;
}

IntVec basis_vec(std::size_t n, std::size_t i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

bool verify_two_sided(const FiniteRack& x, const IntLattice& lattice) {
  for (const IntVec& row : lattice.basis())
    for (std::size_t i = 0; i < x.size(); ++i) {
      IntVec b = basis_vec(x.size(), i);
      if (!member(lattice, table_mul(x, b, row))) return false;
      if (!member(lattice, table_mul(x, row, b))) return false;
    }
  return true;
}

IdealHandle aug_ideal(RackPtr rack) {
  std::size_t n = rack->size();
  IntMat rows;
  for (std::size_t i = 1; i < n; ++i) {
    IntVec v(n, 0);
    v[i] = 1;
    v[0] = -1;
    rows.push_back(std::move(v));
  }
  IdealHandle handle{rack, hnf(std::move(rows), n), false};
  handle.certified = verify_two_sided(*rack, handle.lattice);
  return handle;
}

std::vector<IdealHandle> ideal_power_chain(RackPtr rack, std::size_t k,
                                           PowerConvention convention) {
  if (k == 0) fail_input("ideal power must be at least 1");
  std::vector<IdealHandle> chain;
  chain.push_back(aug_ideal(rack));
  const FiniteRack& x = *rack;
  for (std::size_t m = 2; m <= k; ++m) {
    IntMat products;
    auto multiply_in = [&](const IntLattice& a, const IntLattice& b) {
      for (const IntVec& u : a.basis())
        for (const IntVec& v : b.basis()) products.push_back(table_mul(x, u, v));
    };
    if (convention == PowerConvention::all_splits) {
      for (std::size_t a = 1; a <= m - 1; ++a)
        multiply_in(chain[a - 1].lattice, chain[m - a - 1].lattice);
    } else {
      multiply_in(chain[m - 2].lattice, chain[0].lattice);
      multiply_in(chain[0].lattice, chain[m - 2].lattice);
    }
    IdealHandle handle{rack, hnf(std::move(products), x.size()), false};
    handle.certified = verify_two_sided(x, handle.lattice);
    chain.push_back(std::move(handle));
  }
  return chain;
}

IdealHandle ideal_power(RackPtr rack, std::size_t k, PowerConvention convention) {
  return ideal_power_chain(std::move(rack), k, convention).back();
}

GradedSeries graded_series(RackPtr rack, std::size_t k_max) {
  if (k_max == 0) fail_input("graded series needs at least one quotient");
  GradedSeries series;
  series.rack = rack;
  series.powers = ideal_power_chain(rack, k_max + 1);
  for (std::size_t i = 1; i <= k_max; ++i)
    series.shapes.push_back(
        quotient_shape(series.powers[i].lattice, series.powers[i - 1].lattice));
  return series;
}

IdealHandle two_sided_closure(RackPtr rack, const IntMat& generators) {
  const FiniteRack& x = *rack;
  IntLattice current = hnf(generators, x.size());
  while (true) {
    IntMat rows = current.basis();
    for (const IntVec& row : current.basis())
      for (std::size_t i = 0; i < x.size(); ++i) {
        IntVec b = basis_vec(x.size(), i);
        rows.push_back(table_mul(x, b, row));
        rows.push_back(table_mul(x, row, b));
      }
    IntLattice next = hnf(std::move(rows), x.size());
    if (next == current) break;
    current = std::move(next);
  }
  return IdealHandle{rack, current, true};
}

IdealHandle two_sided_closure(RackPtr rack, const std::vector<RingElt>& generators) {
  IntMat rows;
  for (const RingElt& g : generators) rows.push_back(g.to_vector());
  return two_sided_closure(std::move(rack), rows);
}

IdealHandle relative_ideal(RackPtr rack, const std::vector<std::size_t>& y) {
  if (y.empty()) fail_input("relative ideal needs a non-empty subset");
  if (!is_closed_subset(*rack, y)) fail_hypothesis("subset is not a subrack");
  IntMat rows;
  for (std::size_t i = 1; i < y.size(); ++i) {
    IntVec v(rack->size(), 0);
    v[y[i]] = 1;
    v[y[0]] -= 1;
    rows.push_back(std::move(v));
  }
  return two_sided_closure(std::move(rack), rows);
}

std::vector<std::size_t> sub_from_ideal(const IdealHandle& ideal, std::size_t x0) {
  if (!ideal.certified) fail_input("uncertified ideal: two-sided closure was not verified");
  const FiniteRack& x = *ideal.rack;
  if (x0 >= x.size()) fail_input("base point out of range");
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < x.size(); ++i) {
    IntVec diff(x.size(), 0);
    diff[i] += 1;
    diff[x0] -= 1;
    if (member(ideal.lattice, diff)) block.push_back(i);
  }
  return block;
}

std::vector<std::vector<std::size_t>> partition_from_ideal(const IdealHandle& ideal) {
  const FiniteRack& x = *ideal.rack;
  std::vector<bool> seen(x.size(), false);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> block = sub_from_ideal(ideal, i);
    for (std::size_t m : block) seen[m] = true;
    if (!is_closed_subset(x, block))
      fail_hypothesis("ideal block is not multiplicatively closed");
    blocks.push_back(std::move(block));
  }
  return blocks;
}

OrbitIsoReport orbit_iso_check(const IdealHandle& ideal) {
  const FiniteRack& x = *ideal.rack;
  if (!x.is_rack()) fail_hypothesis("orbit isomorphism check requires a rack");
  if (!x.is_involutary()) fail_hypothesis("orbit isomorphism check requires an involutary rack");
  OrbitIsoReport report;
  for (const auto& orbit : x.orbits())
    for (std::size_t a = 0; a < orbit.size(); ++a)
      for (std::size_t b = a + 1; b < orbit.size(); ++b) {
        FiniteRack sa = subrack(x, sub_from_ideal(ideal, orbit[a]));
        FiniteRack sb = subrack(x, sub_from_ideal(ideal, orbit[b]));
        bool iso = are_isomorphic(sa, sb).has_value();
        report.pairs.push_back({orbit[a], orbit[b], iso});
        report.all_isomorphic = report.all_isomorphic && iso;
      }
  return report;
}

IdealHandle normal_ideal(const QuandleHom& f) {
  const FiniteRack& x = f.source();
  auto idx = f.fiber_index();
  std::size_t classes = *std::max_element(idx.begin(), idx.end()) + 1;
  IntMat indicator(x.size(), IntVec(classes, 0));
  for (std::size_t i = 0; i < x.size(); ++i) indicator[i][idx[i]] = 1;
  IdealHandle handle{std::make_shared<const FiniteRack>(x),
                     integer_kernel(indicator, x.size(), classes), false};
  handle.certified = verify_two_sided(x, handle.lattice);
  return handle;
}

bool dictionary_check(const QuandleHom& f, std::size_t x0) {
  IdealHandle kernel = normal_ideal(f);
  std::vector<std::size_t> recovered = sub_from_ideal(kernel, x0);
  return recovered == f.fiber_of(x0);
}

std::pair<bool, bool> trivial_iff_delta_sq_zero(RackPtr rack) {
  if (!rack->is_rack()) fail_hypothesis("triviality test requires a rack");
  bool trivial_rack = rack->is_trivial();
  bool sq_zero = ideal_power(rack, 2).lattice.is_zero();
  return {trivial_rack, sq_zero};
}

IntLattice ext_aug_ideal(const FiniteRack& x) {
  std::size_t n = x.size();
  IntMat rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec v(n + 1, 0);
    v[i] = 1;
    v[n] = -1;  // coefficient of e
    rows.push_back(std::move(v));
  }
  return hnf(std::move(rows), n + 1);
}

IntLattice ext_aug_ideal_sq(const FiniteRack& x) {
  std::size_t n = x.size();
  // (x_i - e)(x_j - e) = x_i x_j - x_i - x_j + e
  IntMat rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntVec v(n + 1, 0);
      v[x.mul(i, j)] += 1;
      v[i] -= 1;
      v[j] -= 1;
      v[n] += 1;
      rows.push_back(std::move(v));
    }
  return hnf(std::move(rows), n + 1);
}

IntLattice with_modulus(const IntLattice& lattice, unsigned long m) {
  IntMat rows = lattice.basis();
  for (std::size_t i = 0; i < lattice.ambient_dim(); ++i) {
    IntVec v(lattice.ambient_dim(), 0);
    v[i] = Int(m);
    rows.push_back(std::move(v));
  }
  return hnf(std::move(rows), lattice.ambient_dim());
}

}  // namespace qr
