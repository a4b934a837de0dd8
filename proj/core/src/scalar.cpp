#include "qr/scalar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qr {

namespace {

Int mod_reduce(const Int& v, unsigned long m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

// Extended Euclid: returns g = gcd(a, b) and x with a*x = g (mod b), for a, b >= 0.
Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = a, r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) fail_hypothesis("element is not a unit modulo " + m.str());
  Int inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

void strip_zeros(PolyMap& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->second == 0)
      it = p.erase(it);
    else
      ++it;
  }
}

}  // namespace

CoeffRing CoeffRing::integers() { return CoeffRing(RingTag::integers, 0, {}); }
CoeffRing CoeffRing::rationals() { return CoeffRing(RingTag::rationals, 0, {}); }

CoeffRing CoeffRing::modular(unsigned long m) {
  if (m < 2) fail_input("modulus must be at least 2");
  return CoeffRing(RingTag::modular, m, {});
}

CoeffRing CoeffRing::polynomial(std::vector<std::string> vars) {
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size()) fail_input("polynomial variable names must be distinct");
  return CoeffRing(RingTag::polynomial, 0, std::move(vars));
}

unsigned long CoeffRing::modulus() const {
  if (tag_ != RingTag::modular) fail_input("ring has no modulus");
  return modulus_;
}

const std::vector<std::string>& CoeffRing::variables() const {
  if (tag_ != RingTag::polynomial) fail_input("ring has no variables");
  return vars_;
}

std::string CoeffRing::to_string() const {
  switch (tag_) {
    case RingTag::integers:
      return "Z";
    case RingTag::rationals:
      return "Q";
    case RingTag::modular:
      return "Z/" + std::to_string(modulus_);
    case RingTag::polynomial: {
      std::string s = "Z[";
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
      }
      return s + "]";
    }
  }
  return "?";
}

bool operator==(const CoeffRing& a, const CoeffRing& b) {
  return a.tag_ == b.tag_ && a.modulus_ == b.modulus_ && a.vars_ == b.vars_;
}

Scalar::Scalar() : ring_(CoeffRing::integers()), value_(Int(0)) {}

Scalar Scalar::zero(const CoeffRing& ring) { return of_int(ring, 0); }
Scalar Scalar::one(const CoeffRing& ring) { return of_int(ring, 1); }

Scalar Scalar::of_int(const CoeffRing& ring, Int value) {
  switch (ring.tag()) {
    case RingTag::integers:
      return Scalar(ring, std::move(value));
    case RingTag::rationals:
      return Scalar(ring, Rat(value));
    case RingTag::modular:
      return Scalar(ring, mod_reduce(value, ring.modulus()));
    case RingTag::polynomial: {
      PolyMap p;
      if (value != 0) p.emplace(std::vector<unsigned>(ring.variables().size(), 0), value);
      return Scalar(ring, std::move(p));
    }
  }
  fail_input("unknown ring tag");
}

Scalar Scalar::of_rational(const CoeffRing& ring, Rat value) {
  if (ring.tag() != RingTag::rationals)
    fail_input("rational values require the rational coefficient ring");
  return Scalar(ring, std::move(value));
}

Scalar Scalar::variable(const CoeffRing& ring, std::size_t var_index) {
  if (ring.tag() != RingTag::polynomial) fail_input("variables require a polynomial ring");
  if (var_index >= ring.variables().size()) fail_input("variable index out of range");
  std::vector<unsigned> exp(ring.variables().size(), 0);
  exp[var_index] = 1;
  PolyMap p;
  p.emplace(std::move(exp), Int(1));
  return Scalar(ring, std::move(p));
}

bool Scalar::is_zero() const {
  switch (ring_.tag()) {
    case RingTag::integers:
    case RingTag::modular:
      return std::get<Int>(value_) == 0;
    case RingTag::rationals:
      return std::get<Rat>(value_) == 0;
    case RingTag::polynomial:
      return std::get<PolyMap>(value_).empty();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

bool Scalar::is_unit() const {
  switch (ring_.tag()) {
    case RingTag::integers: {
      const Int& v = std::get<Int>(value_);
      return v == 1 || v == -1;
    }
    case RingTag::rationals:
      return std::get<Rat>(value_) != 0;
    case RingTag::modular:
      return boost::multiprecision::gcd(std::get<Int>(value_), Int(ring_.modulus())) == 1;
    case RingTag::polynomial: {
      const PolyMap& p = std::get<PolyMap>(value_);
      if (p.size() != 1) return false;
      const auto& [exp, c] = *p.begin();
      bool constant = std::all_of(exp.begin(), exp.end(), [](unsigned e) { return e == 0; });
      return constant && (c == 1 || c == -1);
    }
  }
  return false;
}

Scalar Scalar::inverse() const {
  if (!is_unit()) fail_hypothesis("cannot invert a non-unit in " + ring_.to_string());
  switch (ring_.tag()) {
    case RingTag::integers:
    case RingTag::polynomial:
      return *this;  // the only units are +-1
    case RingTag::rationals:
      return Scalar(ring_, Rat(1) / std::get<Rat>(value_));
    case RingTag::modular:
      return Scalar(ring_, mod_inverse(std::get<Int>(value_), Int(ring_.modulus())));
  }
  fail_input("unknown ring tag");
}

void Scalar::check_same_ring(const Scalar& other) const {
  if (ring_ != other.ring_)
    fail_input("coefficient ring mismatch: " + ring_.to_string() + " vs " +
               other.ring_.to_string());
}

Scalar Scalar::operator-() const {
  switch (ring_.tag()) {
    case RingTag::integers:
      return Scalar(ring_, -std::get<Int>(value_));
    case RingTag::rationals:
      return Scalar(ring_, -std::get<Rat>(value_));
    case RingTag::modular:
      return Scalar(ring_, mod_reduce(-std::get<Int>(value_), ring_.modulus()));
    case RingTag::polynomial: {
      PolyMap p = std::get<PolyMap>(value_);
      for (auto& [exp, c] : p) c = -c;
      return Scalar(ring_, std::move(p));
    }
  }
  fail_input("unknown ring tag");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.check_same_ring(b);
  switch (a.ring_.tag()) {
    case RingTag::integers:
      return Scalar(a.ring_, std::get<Int>(a.value_) + std::get<Int>(b.value_));
    case RingTag::rationals:
      return Scalar(a.ring_, std::get<Rat>(a.value_) + std::get<Rat>(b.value_));
    case RingTag::modular:
      return Scalar(a.ring_, mod_reduce(std::get<Int>(a.value_) + std::get<Int>(b.value_),
                                        a.ring_.modulus()));
    case RingTag::polynomial: {
      PolyMap p = std::get<PolyMap>(a.value_);
      for (const auto& [exp, c] : std::get<PolyMap>(b.value_)) p[exp] += c;
      strip_zeros(p);
      return Scalar(a.ring_, std::move(p));
    }
  }
  fail_input("unknown ring tag");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same_ring(b);
  switch (a.ring_.tag()) {
    case RingTag::integers:
      return Scalar(a.ring_, std::get<Int>(a.value_) * std::get<Int>(b.value_));
    case RingTag::rationals:
      return Scalar(a.ring_, std::get<Rat>(a.value_) * std::get<Rat>(b.value_));
    case RingTag::modular:
      return Scalar(a.ring_, mod_reduce(std::get<Int>(a.value_) * std::get<Int>(b.value_),
                                        a.ring_.modulus()));
    case RingTag::polynomial: {
      const PolyMap& pa = std::get<PolyMap>(a.value_);
      const PolyMap& pb = std::get<PolyMap>(b.value_);
      PolyMap out;
      for (const auto& [ea, ca] : pa)
        for (const auto& [eb, cb] : pb) {
          std::vector<unsigned> e(ea.size());
          for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
          out[std::move(e)] += ca * cb;
        }
      strip_zeros(out);
      return Scalar(a.ring_, std::move(out));
    }
  }
  fail_input("unknown ring tag");
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.ring_ == b.ring_ && a.value_ == b.value_;
}

const Int& Scalar::as_integer() const {
  if (ring_.tag() != RingTag::integers && ring_.tag() != RingTag::modular)
    fail_input("scalar is not an integer value");
  return std::get<Int>(value_);
}

const Rat& Scalar::as_rational() const {
  if (ring_.tag() != RingTag::rationals) fail_input("scalar is not a rational value");
  return std::get<Rat>(value_);
}

const PolyMap& Scalar::monomials() const {
  if (ring_.tag() != RingTag::polynomial) fail_input("scalar is not a polynomial");
  return std::get<PolyMap>(value_);
}

Int Scalar::monomial_coefficient(const std::vector<unsigned>& exponents) const {
  const PolyMap& p = monomials();
  auto it = p.find(exponents);
  return it == p.end() ? Int(0) : it->second;
}

Int Scalar::eval(const std::map<std::string, Int>& assignment) const {
  const PolyMap& p = monomials();
  const auto& vars = ring_.variables();
  Int total = 0;
  for (const auto& [exp, c] : p) {
    Int term = c;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      auto it = assignment.find(vars[i]);
      if (it == assignment.end()) fail_input("unbound symbol in evaluation: " + vars[i]);
      for (unsigned k = 0; k < exp[i]; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

std::string Scalar::to_string() const {
  switch (ring_.tag()) {
    case RingTag::integers:
    case RingTag::modular:
      return std::get<Int>(value_).str();
    case RingTag::rationals: {
      const Rat& q = std::get<Rat>(value_);
      if (denominator(q) == 1) return numerator(q).str();
      return numerator(q).str() + "/" + denominator(q).str();
    }
    case RingTag::polynomial: {
      const PolyMap& p = std::get<PolyMap>(value_);
      if (p.empty()) return "0";
      const auto& vars = ring_.variables();
      std::ostringstream out;
      bool first = true;
      for (const auto& [exp, c] : p) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
          if (c < 0) out << "-";
          first = false;
        } else {
          out << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (std::size_t i = 0; i < exp.size(); ++i)
          if (exp[i] != 0) {
            if (!factors.empty()) factors += "*";
            factors += vars[i] + "^" + std::to_string(exp[i]);
          }
        if (factors.empty())
          out << mag.str();
        else if (mag == 1)
          out << factors;
        else
          out << mag.str() << "*" << factors;
      }
      return out.str();
    }
  }
  return "?";
}

}  // namespace qr
