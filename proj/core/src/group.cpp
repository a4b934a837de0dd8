#include "qr/group.hpp"

#include <algorithm>
#include <numeric>

namespace qr {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  std::size_t n = table_.size();
  if (n == 0) fail_input("group must be non-empty");
  for (const auto& row : table_) {
    if (row.size() != n) fail_input("group table is not square");
    for (std::size_t v : row)
      if (v >= n) fail_input("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail_input("group table is not associative");

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) ok = ok && mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) fail_input("group table has no identity");

  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == n) fail_input("group table element has no inverse");
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < size(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_automorphism(const std::vector<std::size_t>& image) const {
  std::size_t n = size();
  if (image.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : image) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (image[mul(a, b)] != mul(image[a], image[b])) return false;
  return true;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) fail_input("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup("Z" + std::to_string(n), std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::size_t n = a.size() * b.size();
  auto index = [&](std::size_t x, std::size_t y) { return x * b.size() + y; };
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x1 = 0; x1 < a.size(); ++x1)
    for (std::size_t y1 = 0; y1 < b.size(); ++y1)
      for (std::size_t x2 = 0; x2 < a.size(); ++x2)
        for (std::size_t y2 = 0; y2 < b.size(); ++y2)
          t[index(x1, y1)][index(x2, y2)] = index(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup(a.name() + "x" + b.name(), std::move(t));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) fail_input("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t m = perms.size();
  auto find = [&](const std::vector<std::size_t>& q) {
    return std::size_t(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::size_t> comp(n);  // (i after j): comp(x) = perms[i][perms[j][x]]
      for (std::size_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = find(comp);
    }
  return FiniteGroup("S" + std::to_string(n), std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) fail_input("dihedral group parameter must be positive");
  // Elements 0..n-1 are rotations r^i, elements n..2n-1 are reflections s r^i.
  std::size_t m = 2 * n;
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  auto rot = [&](std::size_t i) { return i % n; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = rot(i + j);                  // r^i r^j
      t[i][n + j] = n + rot(j + n - i);      // r^i (s r^j)  = s r^{j-i}
      t[n + i][j] = n + rot(i + j);          // (s r^i) r^j  = s r^{i+j}
      t[n + i][n + j] = rot(j + n - i);      // (s r^i)(s r^j) = r^{j-i}
    }
  return FiniteGroup("D" + std::to_string(n), std::move(t));
}

FiniteGroup quaternion_group() {
  // 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
  auto neg = [](std::size_t a) { return a ^ 1u; };
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  auto set = [&](std::size_t a, std::size_t b, std::size_t c) {
    t[a][b] = c;
    t[neg(a)][b] = neg(c);
    t[a][neg(b)] = neg(c);
    t[neg(a)][neg(b)] = c;
  };
  set(0, 0, 0);
  set(0, 2, 2);
  set(0, 4, 4);
  set(0, 6, 6);
  set(2, 0, 2);
  set(4, 0, 4);
  set(6, 0, 6);
  set(2, 2, 1);  // i*i = -1
  set(4, 4, 1);
  set(6, 6, 1);
  set(2, 4, 6);  // i*j = k
  set(4, 2, 7);  // j*i = -k
  set(4, 6, 2);  // j*k = i
  set(6, 4, 3);  // k*j = -i
  set(6, 2, 4);  // k*i = j
  set(2, 6, 5);  // i*k = -j
  return FiniteGroup("Q8", std::move(t));
}

}  // namespace qr
