#include "qr/zlattice.hpp"

#include <algorithm>
#include <sstream>

namespace qr {

namespace {

// Floor division; remainder lands in [0, b) for b > 0.
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b < 0) q -= 1;
  return q;
}

bool row_is_zero(const IntVec& r) {
  return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
}

// In-place row echelon over Z on `work`; `mirror` (if non-null) receives the
// same row operations, which turns it into the transform matrix when it
// starts as the identity.
IntMat echelon(IntMat& work, IntMat* mirror, std::size_t dim) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < work.size(); ++col) {
    // Euclid on the column entries below r until at most one survives.
    while (true) {
      std::size_t best = work.size();
      for (std::size_t i = r; i < work.size(); ++i) {
        if (work[i][col] == 0) continue;
        if (best == work.size() ||
            abs(work[i][col]) < abs(work[best][col]))
          best = i;
      }
      if (best == work.size()) break;  // column clear
      std::swap(work[r], work[best]);
      if (mirror) std::swap((*mirror)[r], (*mirror)[best]);
      bool reduced_all = true;
      for (std::size_t i = r + 1; i < work.size(); ++i) {
        if (work[i][col] == 0) continue;
        Int q = work[i][col] / work[r][col];  // truncating; Euclid still shrinks
        for (std::size_t k = 0; k < dim; ++k) work[i][k] -= q * work[r][k];
        if (mirror)
          for (std::size_t k = 0; k < (*mirror)[i].size(); ++k)
            (*mirror)[i][k] -= q * (*mirror)[r][k];
        if (work[i][col] != 0) reduced_all = false;
      }
      if (reduced_all) {
        if (work[r][col] < 0) {
          for (auto& v : work[r]) v = -v;
          if (mirror)
            for (auto& v : (*mirror)[r]) v = -v;
        }
        ++r;
        break;
      }
    }
  }
  IntMat echelon_rows(work.begin(), work.begin() + r);
  return echelon_rows;
}

void reduce_above_pivots(IntMat& rows, std::size_t dim) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::size_t pivot_col = 0;
    while (pivot_col < dim && rows[k][pivot_col] == 0) ++pivot_col;
    for (std::size_t i = 0; i < k; ++i) {
      Int q = fdiv(rows[i][pivot_col], rows[k][pivot_col]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < dim; ++c) rows[i][c] -= q * rows[k][c];
    }
  }
}

}  // namespace

Int QuotientShape::torsion_order() const {
  Int p = 1;
  for (const Int& d : torsion) p *= d;
  return p;
}

std::string QuotientShape::to_string() const {
  std::string s;
  if (free_rank == 1)
    s = "Z";
  else if (free_rank > 1)
    s = "Z^" + std::to_string(free_rank);
  for (const Int& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.str();
  }
  return s.empty() ? "0" : s;
}

IntLattice IntLattice::zero(std::size_t ambient_dim) { return IntLattice(ambient_dim, {}); }

IntLattice IntLattice::full(std::size_t ambient_dim) {
  IntMat rows(ambient_dim, IntVec(ambient_dim, 0));
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = 1;
  return IntLattice(ambient_dim, std::move(rows));
}

std::string IntLattice::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out << ", ";
    out << "[";
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out << ", ";
      out << basis_[i][j].str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

IntLattice hnf(IntMat rows, std::size_t ambient_dim) {
  for (const IntVec& r : rows)
    if (r.size() != ambient_dim) fail_input("lattice generator has wrong dimension");
  rows.erase(std::remove_if(rows.begin(), rows.end(), row_is_zero), rows.end());
  IntMat basis = echelon(rows, nullptr, ambient_dim);
  reduce_above_pivots(basis, ambient_dim);
  return IntLattice(ambient_dim, std::move(basis));
}

std::optional<IntVec> coordinates(const IntLattice& lattice, const IntVec& v) {
  if (v.size() != lattice.ambient_dim()) fail_input("vector dimension mismatch");
  IntVec rest = v;
  IntVec coords;
  coords.reserve(lattice.rank());
  for (const IntVec& row : lattice.basis()) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (rest[p] % row[p] != 0) {
      // Pivot does not divide; any earlier nonzero coordinate also fails below.
      return std::nullopt;
    }
    Int q = rest[p] / row[p];
    if (q != 0)
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= q * row[c];
    coords.push_back(q);
  }
  if (!row_is_zero(rest)) return std::nullopt;
  return coords;
}

bool member(const IntLattice& lattice, const IntVec& v) {
  return coordinates(lattice, v).has_value();
}

IntLattice add(const IntLattice& a, const IntLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail_input("lattice dimension mismatch");
  IntMat rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return hnf(std::move(rows), a.ambient_dim());
}

bool equal(const IntLattice& a, const IntLattice& b) { return a == b; }

std::vector<Int> smith_invariants(IntMat m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Locate a nonzero entry of smallest magnitude in the remaining block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;  // block is zero
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      Int q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      Int q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;

    // Force divisibility of the remaining block by the pivot.
    bool divides_all = true;
    for (std::size_t i = t + 1; i < rows && divides_all; ++i)
      for (std::size_t j = t + 1; j < cols && divides_all; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
          divides_all = false;
        }
    if (!divides_all) continue;

    if (m[t][t] < 0) m[t][t] = -m[t][t];
    diag.push_back(m[t][t]);
    ++t;
  }
  return diag;
}

QuotientShape quotient_shape(const IntLattice& sub, const IntLattice& sup) {
  if (sub.ambient_dim() != sup.ambient_dim()) fail_input("lattice dimension mismatch");
  IntMat coords;
  for (const IntVec& row : sub.basis()) {
    auto c = coordinates(sup, row);
    if (!c) fail_input("quotient requires the first lattice to be contained in the second");
    coords.push_back(std::move(*c));
  }
  QuotientShape shape;
  shape.free_rank = sup.rank() - sub.rank();
  for (Int& d : smith_invariants(std::move(coords)))
    if (d > 1) shape.torsion.push_back(std::move(d));
  return shape;
}

IntLattice integer_kernel(const IntMat& m, std::size_t rows, std::size_t cols) {
  if (m.size() != rows) fail_input("matrix row count mismatch");
  for (const IntVec& r : m)
    if (r.size() != cols) fail_input("matrix column count mismatch");
  IntMat work = m;
  IntMat transform(rows, IntVec(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) transform[i][i] = 1;
  echelon(work, &transform, cols);
  IntMat kernel_rows;
  for (std::size_t i = 0; i < rows; ++i)
    if (row_is_zero(work[i])) kernel_rows.push_back(transform[i]);
  return hnf(std::move(kernel_rows), rows);
}

}  // namespace qr
