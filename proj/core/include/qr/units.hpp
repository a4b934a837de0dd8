#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qr/ring_elt.hpp"
#include "qr/zlattice.hpp"

namespace qr {

enum class UnitClass { V1, V2, general };

/// A verified two-sided unit of an extended rack ring.
struct UnitRecord {
  ExtElt element;
  ExtElt inverse;
  UnitClass classification;
  Scalar epsilon;
};

/// Decides invertibility of u in R°[T] for a trivial rack T: writing
/// u = lambda (e + a + alpha (x0 - e)), u is a unit exactly when
/// lambda = epsilon(u) is a unit and alpha - 1 is a unit, and then the inverse
/// is lambda^{-1} (e + (alpha-1)^{-1} a + alpha/(alpha-1) (x0 - e)).
std::optional<UnitRecord> trivial_rack_unit(const ExtElt& u, std::size_t x0);

/// Splits v = e + a0 + (lambda - 1) x0 with unit augmentation lambda into
/// v = u1 * u2 with u1 = e + a0 (e + (lambda^{-1} - 1) x0) of augmentation 1
/// and u2 = e + (lambda - 1) x0. The product identity is re-verified.
std::pair<ExtElt, ExtElt> v_decompose(const ExtElt& v, std::size_t x0);

/// Exhaustive enumeration of units over a finite coefficient ring Z/m, or an
/// integer coefficient box [-radius, radius].
struct UnitScanConfig {
  long radius = 3;               // integer ring box radius
  bool normalized_only = false;  // keep only augmentation-1 units
  std::size_t cap = 2000000;     // candidate count cap
};

std::vector<UnitRecord> unit_box_scan(RackPtr rack, const CoeffRing& ring,
                                      const UnitScanConfig& config = {});

/// Closed-form unit set of Z°[T] intersected with the coefficient box, for
/// comparison against scans.
std::vector<ExtElt> trivial_rack_units_closed_form(RackPtr rack, long radius,
                                                   bool normalized_only, std::size_t x0 = 0);

struct SplitProbeReport {
  std::size_t v_count = 0;
  std::size_t v1_count = 0;
  std::size_t v2_count = 0;
  bool order_splits = false;      // |V| = |V1| * |V2|
  bool v1_normal = false;         // v^{-1} r v in V1 for all v in V, r in V1
  bool phi_homomorphism = false;  // phi(v u) = phi(v) phi(u)
  bool phi_kernel_is_v1 = false;
};

/// Exhaustive verification of the split exact sequence
/// 1 -> V1 -> V -> V2 -> 1 over Z/m for a trivial rack.
SplitProbeReport split_sequence_probe(RackPtr rack, unsigned long m, std::size_t x0 = 0,
                                      std::size_t cap = 1000000);

/// Iterated commutators w1 = [v, u], w_n = [w_{n-1}, u] with
/// [a, b] = a^{-1} b^{-1} a b, over a trivial rack.
std::vector<ExtElt> commutator_sequence(const ExtElt& v, const ExtElt& u, std::size_t depth);

/// e + (y - x) + (lambda - 1) x in R°[T2]: the elements driving the
/// non-nilpotency commutator sequence.
ExtElt commutator_probe_element(RackPtr t2, const Scalar& lambda);

/// Closed form e + (eps_u - eps_v)(eps_u - 1)^{n-1} (y - x).
ExtElt commutator_closed_form(RackPtr t2, const Scalar& eps_v, const Scalar& eps_u,
                              std::size_t n);

struct CenterLattice {
  RackPtr rack;
  IntLattice lattice;  // integer coefficient vectors commuting with everything
};

/// Z(Z[X]) as the integer kernel of the stacked linear system
/// u a_j - a_j u = 0.
CenterLattice center_lattice(RackPtr rack);

/// The all-ones element w = x_1 + ... + x_n.
RingElt rack_sum(RackPtr rack, const CoeffRing& ring);

/// For a latin rack over Q: the central unit e + alpha w with verified inverse
/// e - alpha/(1 + n alpha) w; also checks that w/n is idempotent.
UnitRecord latin_central_unit(RackPtr rack, const Rat& alpha);

}  // namespace qr
