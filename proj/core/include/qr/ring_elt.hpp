#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "qr/rack.hpp"
#include "qr/scalar.hpp"
#include "qr/zlattice.hpp"

namespace qr {

using RackPtr = std::shared_ptr<const FiniteRack>;

inline RackPtr share(FiniteRack x) { return std::make_shared<const FiniteRack>(std::move(x)); }

/// An element of the rack ring R[X]: one coefficient per basis element x_i.
/// Multiplication is the bilinear extension of the Cayley table.
class RingElt {
public:
  RingElt(RackPtr rack, CoeffRing ring);  // zero element
  static RingElt basis(RackPtr rack, const CoeffRing& ring, std::size_t i);
  static RingElt from_coeffs(RackPtr rack, CoeffRing ring, std::vector<Scalar> coeffs);
  static RingElt from_ints(RackPtr rack, const CoeffRing& ring, const std::vector<long long>& c);
  static RingElt from_vector(RackPtr rack, const CoeffRing& ring, const IntVec& v);

  const RackPtr& rack() const { return rack_; }
  const CoeffRing& ring() const { return ring_; }
  std::size_t size() const { return coeffs_.size(); }
  const Scalar& coeff(std::size_t i) const { return coeffs_[i]; }

  Scalar augmentation() const;
  bool is_zero() const;

  RingElt operator-() const;
  friend RingElt operator+(const RingElt& a, const RingElt& b);
  friend RingElt operator-(const RingElt& a, const RingElt& b);
  friend RingElt operator*(const RingElt& a, const RingElt& b);
  friend RingElt operator*(const Scalar& s, const RingElt& a);

  friend bool operator==(const RingElt& a, const RingElt& b);
  friend bool operator!=(const RingElt& a, const RingElt& b) { return !(a == b); }

  /// Integer coefficient vector; requires the integer coefficient ring.
  IntVec to_vector() const;

  std::string to_string() const;  // "3*a0 - 2*a1"

private:
  void check_compatible(const RingElt& other) const;

  RackPtr rack_;
  CoeffRing ring_;
  std::vector<Scalar> coeffs_;
};

/// An element of the extended rack ring R°[X] = R[X] + R e, where e is a
/// formal two-sided identity.
class ExtElt {
public:
  ExtElt(RingElt body, Scalar unit_coeff);
  static ExtElt identity(RackPtr rack, const CoeffRing& ring);  // e
  static ExtElt embed(RingElt body);                            // unit coefficient 0

  const RingElt& body() const { return body_; }
  const Scalar& unit_coeff() const { return unit_coeff_; }
  const RackPtr& rack() const { return body_.rack(); }
  const CoeffRing& ring() const { return body_.ring(); }

  Scalar augmentation() const;  // epsilon(body) + unit coefficient
  bool is_zero() const;

  ExtElt operator-() const;
  friend ExtElt operator+(const ExtElt& a, const ExtElt& b);
  friend ExtElt operator-(const ExtElt& a, const ExtElt& b);
  friend ExtElt operator*(const ExtElt& a, const ExtElt& b);
  friend ExtElt operator*(const Scalar& s, const ExtElt& a);

  friend bool operator==(const ExtElt& a, const ExtElt& b);
  friend bool operator!=(const ExtElt& a, const ExtElt& b) { return !(a == b); }

  std::string to_string() const;  // "3*a0 - 2*a1 + e"

private:
  RingElt body_;
  Scalar unit_coeff_;
};

/// x*y + y*x - x - y, which lies in the square of the augmentation ideal for
/// every quandle.
RingElt symmetrization_defect(RackPtr rack, const CoeffRing& ring, std::size_t x, std::size_t y);

}  // namespace qr
