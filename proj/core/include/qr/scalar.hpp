#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qr/error.hpp"

namespace qr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingTag { integers, rationals, modular, polynomial };

/// Runtime descriptor of a coefficient ring: Z, Q, Z/m, or Z[vars].
class CoeffRing {
public:
  static CoeffRing integers();
  static CoeffRing rationals();
  static CoeffRing modular(unsigned long m);  // m >= 2
  static CoeffRing polynomial(std::vector<std::string> vars);

  RingTag tag() const { return tag_; }
  unsigned long modulus() const;
  const std::vector<std::string>& variables() const;

  std::string to_string() const;  // "Z", "Q", "Z/5", "Z[c0,c1]"

  friend bool operator==(const CoeffRing& a, const CoeffRing& b);
  friend bool operator!=(const CoeffRing& a, const CoeffRing& b) { return !(a == b); }

private:
  CoeffRing(RingTag t, unsigned long m, std::vector<std::string> v)
      : tag_(t), modulus_(m), vars_(std::move(v)) {}

  RingTag tag_;
  unsigned long modulus_ = 0;
  std::vector<std::string> vars_;
};

// Sparse multivariate polynomial over Z: exponent vector -> nonzero coefficient.
using PolyMap = std::map<std::vector<unsigned>, Int>;

/// An exact value in one of the supported coefficient rings.
///
/// Fractions are kept in lowest terms with positive denominator, residues in
/// [0, m), polynomial maps free of zero coefficients.
class Scalar {
public:
  Scalar();  // integer zero

  static Scalar zero(const CoeffRing& ring);
  static Scalar one(const CoeffRing& ring);
  static Scalar of_int(const CoeffRing& ring, Int value);  // canonical image of an integer
  static Scalar of_rational(const CoeffRing& ring, Rat value);
  static Scalar variable(const CoeffRing& ring, std::size_t var_index);

  const CoeffRing& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  Scalar inverse() const;  // throws hypothesis error on non-units

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Value access (throws input error when the tag does not match).
  const Int& as_integer() const;   // integers / modular
  const Rat& as_rational() const;  // rationals
  const PolyMap& monomials() const;

  Int monomial_coefficient(const std::vector<unsigned>& exponents) const;

  /// Substitutes integers for all variables occurring in the polynomial.
  /// Missing variables raise an unbound-symbol input error.
  Int eval(const std::map<std::string, Int>& assignment) const;

  std::string to_string() const;

private:
  Scalar(CoeffRing ring, std::variant<Int, Rat, PolyMap> v)
      : ring_(std::move(ring)), value_(std::move(v)) {}

  void check_same_ring(const Scalar& other) const;

  CoeffRing ring_;
  std::variant<Int, Rat, PolyMap> value_;
};

}  // namespace qr
