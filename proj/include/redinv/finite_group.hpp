#pragma once

#include "redinv/error.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace redinv {

/// A finite group given by its full multiplication table; element 0 need
/// not be the identity, it is located on construction.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  FiniteGroup() : FiniteGroup(Table{{0}}, "1") {}
  explicit FiniteGroup(Table table, std::string name = {}) : table_(std::move(table)), name_(std::move(name)) {
    auto problems = validate(table_);
    if (!problems.empty()) throw InvalidAction("invalid group table: " + problems.front());
    const std::size_t n = table_.size();
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] == identity_) inverse_[a] = b;
  }

  /// Problems with a candidate table (empty when it is a group law).
  static std::vector<std::string> validate(const Table& t) {
    std::vector<std::string> out;
    const std::size_t n = t.size();
    if (n == 0) return {"empty table"};
    for (const auto& row : t) {
      if (row.size() != n) return {"table is not square"};
      for (std::size_t x : row)
        if (x >= n) return {"entry out of range"};
    }
    std::size_t e = n;
    for (std::size_t c = 0; c < n && e == n; ++c) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = t[c][x] == x && t[x][c] == x;
      if (ok) e = c;
    }
    if (e == n) out.emplace_back("no identity element");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            out.emplace_back("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
            return out;
          }
    if (e < n)
      for (std::size_t a = 0; a < n; ++a) {
        bool has = false;
        for (std::size_t b = 0; b < n; ++b) has = has || (t[a][b] == e && t[b][a] == e);
        if (!has) {
          out.emplace_back("element " + std::to_string(a) + " has no inverse");
          break;
        }
      }
    return out;
  }

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const Table& table() const { return table_; }
  const std::string& name() const { return name_; }
  bool isTrivial() const { return order() == 1; }

  std::size_t power(std::size_t g, std::size_t k) const {
    std::size_t r = identity_;
    for (std::size_t i = 0; i < k; ++i) r = multiply(r, g);
    return r;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

  static FiniteGroup trivial() { return FiniteGroup(); }

  static FiniteGroup cyclic(std::size_t n) {
    if (n == 0) throw InvalidAction("cyclic group of order 0");
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t), "C" + std::to_string(n));
  }

  static FiniteGroup directProduct(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order();
    Table t(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t x = 0; x < na * nb; ++x)
      for (std::size_t y = 0; y < na * nb; ++y)
        t[x][y] = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
    return FiniteGroup(std::move(t), a.name() + "x" + b.name());
  }

  /// Dihedral group of order 2n; element k + n*e is r^k s^e.
  static FiniteGroup dihedral(std::size_t n) {
    Table t(2 * n, std::vector<std::size_t>(2 * n));
    for (std::size_t x = 0; x < 2 * n; ++x)
      for (std::size_t y = 0; y < 2 * n; ++y) {
        std::size_t a = x % n, e = x / n, b = y % n, f = y / n;
        std::size_t k = e ? (a + n - b) % n : (a + b) % n;
        t[x][y] = k + n * ((e + f) % 2);
      }
    return FiniteGroup(std::move(t), "D" + std::to_string(n));
  }

  /// Quaternion group {±1, ±i, ±j, ±k}; element 4*s + u is (-1)^s * unit u.
  static FiniteGroup quaternion() {
    // unit products: 1,i,j,k as 0..3; (sign, unit)
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    static const std::size_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    Table t(8, std::vector<std::size_t>(8));
    for (std::size_t x = 0; x < 8; ++x)
      for (std::size_t y = 0; y < 8; ++y) {
        std::size_t u = x % 4, v = y % 4;
        std::size_t s = (x / 4 + y / 4 + static_cast<std::size_t>(sign[u][v])) % 2;
        t[x][y] = 4 * s + unit[u][v];
      }
    return FiniteGroup(std::move(t), "Q8");
  }

 private:
  Table table_;
  std::string name_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// One representative of every isomorphism class of groups of order <= maxOrder
/// (maxOrder at most 8).
inline std::vector<FiniteGroup> smallGroups(std::size_t maxOrder) {
  if (maxOrder > 8) throw InvalidAction("smallGroups: only orders up to 8 are tabulated");
  std::vector<FiniteGroup> out;
  const auto c = [](std::size_t n) { return FiniteGroup::cyclic(n); };
  for (std::size_t n = 1; n <= maxOrder; ++n) {
    switch (n) {
      case 4:
        out.push_back(c(4));
        out.push_back(FiniteGroup::directProduct(c(2), c(2)));
        break;
      case 6:
        out.push_back(c(6));
        out.push_back(FiniteGroup::dihedral(3));
        break;
      case 8:
        out.push_back(c(8));
        out.push_back(FiniteGroup::directProduct(c(4), c(2)));
        out.push_back(FiniteGroup::directProduct(FiniteGroup::directProduct(c(2), c(2)), c(2)));
        out.push_back(FiniteGroup::dihedral(4));
        out.push_back(FiniteGroup::quaternion());
        break;
      default:
        out.push_back(n == 1 ? FiniteGroup::trivial() : c(n));
    }
  }
  return out;
}

}  // namespace redinv
