#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qr/hom.hpp"
#include "qr/ring_elt.hpp"
#include "qr/zlattice.hpp"

namespace qr {

/// An additive subgroup of Z[X] in basis coordinates, with a certificate
/// recording whether two-sided ideal closure has been verified.
struct IdealHandle {
  RackPtr rack;
  IntLattice lattice;
  bool certified = false;
};

/// Whether x*v and v*x stay inside the lattice for every basis row v and
/// every basis element x of the rack.
bool verify_two_sided(const FiniteRack& x, const IntLattice& lattice);

/// The augmentation ideal, spanned by { x_i - x_0 }.
IdealHandle aug_ideal(RackPtr rack);

/// Convention for powers of a two-sided ideal in a non-associative ring.
enum class PowerConvention {
  all_splits,  // Delta^m = sum over a+b=m of Delta^a Delta^b
  outer_only,  // Delta^m = Delta^{m-1} Delta + Delta Delta^{m-1}
};

/// Powers Delta^1, ..., Delta^k of the augmentation ideal.
std::vector<IdealHandle> ideal_power_chain(RackPtr rack, std::size_t k,
                                           PowerConvention convention = PowerConvention::all_splits);
IdealHandle ideal_power(RackPtr rack, std::size_t k,
                        PowerConvention convention = PowerConvention::all_splits);

struct GradedSeries {
  RackPtr rack;
  std::vector<IdealHandle> powers;    // Delta^1 .. Delta^{k_max+1}
  std::vector<QuotientShape> shapes;  // Delta^i / Delta^{i+1} for i = 1..k_max
};

GradedSeries graded_series(RackPtr rack, std::size_t k_max);

/// Two-sided ideal closure of integer generating vectors: the fixpoint of
/// L -> hnf(L, X L, L X), finite by the ascending chain condition on
/// subgroups of Z^n.
IdealHandle two_sided_closure(RackPtr rack, const IntMat& generators);
IdealHandle two_sided_closure(RackPtr rack, const std::vector<RingElt>& generators);

/// The two-sided ideal of Z[X] generated by the augmentation ideal of a
/// closed subset Y.
IdealHandle relative_ideal(RackPtr rack, const std::vector<std::size_t>& y);

/// X_{I, x0} = { x : x - x0 in I }; requires a certified ideal.
std::vector<std::size_t> sub_from_ideal(const IdealHandle& ideal, std::size_t x0);

/// The partition X = X_{I,x1} u ... u X_{I,xm}; every block is verified to be
/// multiplicatively closed.
std::vector<std::vector<std::size_t>> partition_from_ideal(const IdealHandle& ideal);

struct OrbitIsoPair {
  std::size_t x0, y0;
  bool isomorphic;
};

struct OrbitIsoReport {
  std::vector<OrbitIsoPair> pairs;  // one row per same-orbit pair (x0 < y0)
  bool all_isomorphic = true;
};

/// For every pair of elements in the same Inn(X)-orbit of an involutary rack,
/// checks X_{I,x0} and X_{I,y0} are isomorphic subracks.
OrbitIsoReport orbit_iso_check(const IdealHandle& ideal);

/// Kernel of the induced ring map Z[X] -> Z[X/~] for the fibration of f:
/// vectors whose coefficients sum to zero on every fiber.
IdealHandle normal_ideal(const QuandleHom& f);

/// Recovers the fiber of x0 from the kernel ideal of f and compares.
bool dictionary_check(const QuandleHom& f, std::size_t x0);

/// (X is trivial, Delta^2(X) = 0). The two agree for quandles; flip racks
/// witness the failure of the equivalence for racks.
std::pair<bool, bool> trivial_iff_delta_sq_zero(RackPtr rack);

/// Extended augmentation ideal of Z°[X] in Z^{n+1} (last coordinate is e),
/// spanned by { x - e }, and its square.
IntLattice ext_aug_ideal(const FiniteRack& x);
IntLattice ext_aug_ideal_sq(const FiniteRack& x);

/// Adjoins m * e_i generators: the mod-m picture of an integer lattice.
IntLattice with_modulus(const IntLattice& lattice, unsigned long m);

}  // namespace qr
