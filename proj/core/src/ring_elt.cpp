#include "qr/ring_elt.hpp"

#include <sstream>

namespace qr {

RingElt::RingElt(RackPtr rack, CoeffRing ring) : rack_(std::move(rack)), ring_(std::move(ring)) {
  if (!rack_) fail_input("ring element needs a rack");
  coeffs_.assign(rack_->size(), Scalar::zero(ring_));
}

RingElt RingElt::basis(RackPtr rack, const CoeffRing& ring, std::size_t i) {
  RingElt e(std::move(rack), ring);
  if (i >= e.size()) fail_input("basis index out of range");
  e.coeffs_[i] = Scalar::one(ring);
  return e;
}

RingElt RingElt::from_coeffs(RackPtr rack, CoeffRing ring, std::vector<Scalar> coeffs) {
  RingElt e(std::move(rack), std::move(ring));
  if (coeffs.size() != e.size()) fail_input("coefficient vector has wrong length");
  for (const Scalar& c : coeffs)
    if (c.ring() != e.ring_) fail_input("coefficient ring mismatch");
  e.coeffs_ = std::move(coeffs);
  return e;
}

RingElt RingElt::from_ints(RackPtr rack, const CoeffRing& ring,
                           const std::vector<long long>& c) {
  RingElt e(std::move(rack), ring);
  if (c.size() != e.size()) fail_input("coefficient vector has wrong length");
  for (std::size_t i = 0; i < c.size(); ++i) e.coeffs_[i] = Scalar::of_int(ring, c[i]);
  return e;
}

RingElt RingElt::from_vector(RackPtr rack, const CoeffRing& ring, const IntVec& v) {
  RingElt e(std::move(rack), ring);
  if (v.size() != e.size()) fail_input("coefficient vector has wrong length");
  for (std::size_t i = 0; i < v.size(); ++i) e.coeffs_[i] = Scalar::of_int(ring, v[i]);
  return e;
}

Scalar RingElt::augmentation() const {
  Scalar s = Scalar::zero(ring_);
  for (const Scalar& c : coeffs_) s += c;
  return s;
}

bool RingElt::is_zero() const {
  for (const Scalar& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void RingElt::check_compatible(const RingElt& other) const {
  if (ring_ != other.ring_) fail_input("coefficient ring mismatch");
  if (rack_ != other.rack_ && !(*rack_ == *other.rack_)) fail_input("rack mismatch");
}

RingElt RingElt::operator-() const {
  RingElt out = *this;
  for (Scalar& c : out.coeffs_) c = -c;
  return out;
}

RingElt operator+(const RingElt& a, const RingElt& b) {
  a.check_compatible(b);
  RingElt out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

RingElt operator-(const RingElt& a, const RingElt& b) { return a + (-b); }

RingElt operator*(const RingElt& a, const RingElt& b) {
  a.check_compatible(b);
  RingElt out(a.rack_, a.ring_);
  const FiniteRack& x = *a.rack_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[x.mul(i, j)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

RingElt operator*(const Scalar& s, const RingElt& a) {
  RingElt out = a;
  for (Scalar& c : out.coeffs_) c = s * c;
  return out;
}

bool operator==(const RingElt& a, const RingElt& b) {
  return a.ring_ == b.ring_ && *a.rack_ == *b.rack_ && a.coeffs_ == b.coeffs_;
}

IntVec RingElt::to_vector() const {
  if (ring_.tag() != RingTag::integers)
    fail_input("integer vector extraction requires integer coefficients");
  IntVec v;
  v.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) v.push_back(c.as_integer());
  return v;
}

namespace {

void append_term(std::ostringstream& out, bool& first, const Scalar& c, const std::string& sym) {
  if (c.is_zero()) return;
  std::string cs = c.to_string();
  bool negative = !cs.empty() && cs[0] == '-';
  std::string mag = negative ? cs.substr(1) : cs;
  if (first) {
    if (negative) out << "-";
    first = false;
  } else {
    out << (negative ? " - " : " + ");
  }
  // Composite scalars (polynomials with several terms) keep their parentheses.
  bool composite = mag.find(' ') != std::string::npos;
  if (sym.empty()) {
    out << (composite ? "(" + mag + ")" : mag);
  } else if (!composite && mag == "1") {
    out << sym;
  } else {
    out << (composite ? "(" + mag + ")" : mag) << "*" << sym;
  }
}

}  // namespace

std::string RingElt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    append_term(out, first, coeffs_[i], "a" + std::to_string(i));
  return first ? "0" : out.str();
}

ExtElt::ExtElt(RingElt body, Scalar unit_coeff)
    : body_(std::move(body)), unit_coeff_(std::move(unit_coeff)) {
  if (unit_coeff_.ring() != body_.ring()) fail_input("coefficient ring mismatch");
}

ExtElt ExtElt::identity(RackPtr rack, const CoeffRing& ring) {
  return ExtElt(RingElt(std::move(rack), ring), Scalar::one(ring));
}

ExtElt ExtElt::embed(RingElt body) {
  Scalar zero = Scalar::zero(body.ring());
  return ExtElt(std::move(body), std::move(zero));
}

Scalar ExtElt::augmentation() const { return body_.augmentation() + unit_coeff_; }

bool ExtElt::is_zero() const { return body_.is_zero() && unit_coeff_.is_zero(); }

ExtElt ExtElt::operator-() const { return ExtElt(-body_, -unit_coeff_); }

ExtElt operator+(const ExtElt& a, const ExtElt& b) {
  return ExtElt(a.body_ + b.body_, a.unit_coeff_ + b.unit_coeff_);
}

ExtElt operator-(const ExtElt& a, const ExtElt& b) { return a + (-b); }

ExtElt operator*(const ExtElt& a, const ExtElt& b) {
  // (u + alpha e)(v + beta e) = u v + beta u + alpha v + alpha beta e
  RingElt body = a.body_ * b.body_ + b.unit_coeff_ * a.body_ + a.unit_coeff_ * b.body_;
  return ExtElt(std::move(body), a.unit_coeff_ * b.unit_coeff_);
}

ExtElt operator*(const Scalar& s, const ExtElt& a) {
  return ExtElt(s * a.body_, s * a.unit_coeff_);
}

bool operator==(const ExtElt& a, const ExtElt& b) {
  return a.unit_coeff_ == b.unit_coeff_ && a.body_ == b.body_;
}

std::string ExtElt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < body_.size(); ++i)
    append_term(out, first, body_.coeff(i), "a" + std::to_string(i));
  append_term(out, first, unit_coeff_, "e");
  return first ? "0" : out.str();
}

RingElt symmetrization_defect(RackPtr rack, const CoeffRing& ring, std::size_t x,
                              std::size_t y) {
  if (!rack->is_quandle()) fail_hypothesis("symmetrization defect is a quandle identity");
  RingElt bx = RingElt::basis(rack, ring, x);
  RingElt by = RingElt::basis(rack, ring, y);
  return bx * by + by * bx - bx - by;
}

}  // namespace qr
