#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qr/scalar.hpp"

namespace qr {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// Shape of a finitely generated abelian quotient group: Z^free_rank plus
/// cyclic factors Z/d1 x Z/d2 x ... with d1 | d2 | ... and every di >= 2.
struct QuotientShape {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  Int torsion_order() const;           // product of the invariant factors
  std::string to_string() const;       // "Z + Z/2", "Z/3", "0", ...
  friend bool operator==(const QuotientShape&, const QuotientShape&) = default;
};

/// A subgroup of Z^n held as its canonical row-style Hermite normal form:
/// nonzero rows, strictly increasing pivot columns, positive pivots, and
/// entries above each pivot reduced into [0, pivot). Lattice equality is
/// plain comparison of these bases.
class IntLattice {
public:
  static IntLattice zero(std::size_t ambient_dim);
  static IntLattice full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMat& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const IntLattice& a, const IntLattice& b) { return !(a == b); }

  std::string to_string() const;  // "[[2, 2], [0, 4]]"

private:
  friend IntLattice hnf(IntMat rows, std::size_t ambient_dim);
  IntLattice(std::size_t dim, IntMat basis) : dim_(dim), basis_(std::move(basis)) {}

  std::size_t dim_;
  IntMat basis_;  // canonical HNF rows
};

/// Canonical Hermite normal form of the subgroup generated by `rows`.
IntLattice hnf(IntMat rows, std::size_t ambient_dim);

bool member(const IntLattice& lattice, const IntVec& v);
IntLattice add(const IntLattice& a, const IntLattice& b);
bool equal(const IntLattice& a, const IntLattice& b);

/// Integer coordinates of v in the lattice basis, when v is a member.
std::optional<IntVec> coordinates(const IntLattice& lattice, const IntVec& v);

/// Invariant factors of sup/sub. Requires sub to be contained in sup.
QuotientShape quotient_shape(const IntLattice& sub, const IntLattice& sup);

/// Lattice of integer row vectors v with v * M = 0.
IntLattice integer_kernel(const IntMat& m, std::size_t rows, std::size_t cols);

/// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form of M.
std::vector<Int> smith_invariants(IntMat m);

}  // namespace qr
