#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qr/error.hpp"
#include "qr/group.hpp"

namespace qr {

enum class RackClass { NotRack, RackOnly, Quandle };

std::string to_string(RackClass c);

/// A bijection of {0, ..., n-1}.
class Permutation {
public:
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation after(const Permutation& first) const;  // this(first(x))
  Permutation inverse() const;
  bool is_identity() const;

  /// Sorted cycle lengths, an invariant under conjugation.
  std::vector<std::size_t> cycle_type() const;

  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
  std::vector<std::size_t> image_;
};

/// An order-n magma given by its Cayley table, table[i][j] = x_i * x_j.
/// Classification and structural flags are computed once at construction;
/// instances are immutable and safe to share across threads.
class FiniteRack {
public:
  FiniteRack(std::string name, std::vector<std::vector<std::size_t>> table);

  const std::string& name() const { return name_; }
  std::size_t size() const { return table_.size(); }
  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  RackClass classification() const { return class_; }
  bool is_rack() const { return class_ != RackClass::NotRack; }
  bool is_quandle() const { return class_ == RackClass::Quandle; }
  bool is_trivial() const;

  // The flags below require a rack, and throw hypothesis errors otherwise.
  bool is_involutary() const;
  bool is_latin() const;
  bool is_connected() const;
  const std::vector<std::vector<std::size_t>>& orbits() const;

  friend bool operator==(const FiniteRack& a, const FiniteRack& b) {
    return a.table_ == b.table_;
  }

private:
  void require_rack() const;

  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  RackClass class_ = RackClass::NotRack;
  bool involutary_ = false;
  bool latin_ = false;
  std::vector<std::vector<std::size_t>> orbits_;
};

/// Classifies a table without constructing a rack; entries must be in range.
RackClass check_axioms(const std::vector<std::vector<std::size_t>>& table);

// Constructions.
FiniteRack trivial(std::size_t n);
FiniteRack dihedral(std::size_t n);
FiniteRack conj(const FiniteGroup& g);
FiniteRack core(const FiniteGroup& g);
FiniteRack alexander(const FiniteGroup& a, const std::vector<std::size_t>& t);
FiniteRack gen_alexander(const FiniteGroup& g, const std::vector<std::size_t>& phi);
FiniteRack flip_rack(std::size_t n);
FiniteRack two_elem_rack();

/// The right translations S_x(y) = y * x, one per element.
std::vector<Permutation> inner_generators(const FiniteRack& x);

/// Full closure of the inner automorphism group, by breadth-first products.
/// Exceeding `cap` raises a resource error rather than truncating.
std::set<Permutation> inner_group_closure(const FiniteRack& x, std::size_t cap = 3628800);

std::vector<std::vector<std::size_t>> orbits(const FiniteRack& x);

/// Smallest multiplicatively closed superset of `seed`; re-verifies that the
/// result is a subrack.
std::vector<std::size_t> subquandle_closure(const FiniteRack& x,
                                            const std::vector<std::size_t>& seed);

bool is_closed_subset(const FiniteRack& x, const std::vector<std::size_t>& subset);

/// The induced rack on a multiplicatively closed subset, with elements
/// renumbered in increasing order of their original indices.
FiniteRack subrack(const FiniteRack& x, const std::vector<std::size_t>& subset);

}  // namespace qr
