#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qr/error.hpp"

namespace qr {

/// A finite group as a Cayley table. The constructor verifies associativity
/// and the identity/inverse data on all elements.
class FiniteGroup {
public:
  FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table);

  const std::string& name() const { return name_; }
  std::size_t size() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  bool is_abelian() const;
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;  // lcm of element orders

  /// Whether the map a -> image[a] is a group automorphism.
  bool is_automorphism(const std::vector<std::size_t>& image) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group(std::size_t n);  // n <= 5
FiniteGroup dihedral_group(std::size_t n);   // order 2n
FiniteGroup quaternion_group();              // order 8

}  // namespace qr
