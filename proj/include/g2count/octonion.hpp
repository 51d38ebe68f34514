#pragma once
/**
 * @file octonion.hpp
 * @brief Octonions with doubled-integer coordinates and the Coxeter order
 * (octavians) inside them.
 *
 * Basis e0 = 1, e1, ..., e7 with e_i e_{i+1} = e_{i+3} (indices mod 7 in
 * 1..7), i.e. the quaternionic triples
 *   (1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1) (6,7,2) (7,1,3).
 *
 * The order is the Z-span of its 240 units: the 16 elements +-e_i and the
 * 224 elements (+-e_p +-e_q +-e_r +-e_s) / 2 with {p,q,r,s} one of the 14
 * halving sets below. Those sets are the weight-4 words of the extended
 * Hamming code built from the Fano plane with lines
 *   {1,2,3} {1,4,7} {1,5,6} {2,4,5} {2,6,7} {3,4,6} {3,5,7}
 * extended by the index 0, together with their complements. This is the
 * lexicographically first of the 7 (out of 30) labelled Fano planes on
 * {1..7} whose units close under multiplication; see
 * findClosedHalvingPlanes().
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "g2count/errors.hpp"

namespace g2count {

using FanoPlane = std::array<std::array<int, 3>, 7>;

namespace octonion_detail {

inline constexpr FanoPlane kMultiplicationTriples{{
    {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};

struct BasisProduct {
  int sign;
  int index;
};

constexpr std::array<std::array<BasisProduct, 8>, 8> buildTable() {
  std::array<std::array<BasisProduct, 8>, 8> t{};
  for (int i = 0; i < 8; ++i) {
    t[0][i] = {1, i};
    t[i][0] = {1, i};
  }
  for (int i = 1; i < 8; ++i) t[i][i] = {-1, 0};
  for (const auto& tr : kMultiplicationTriples) {
    for (int r = 0; r < 3; ++r) {
      const int x = tr[r], y = tr[(r + 1) % 3], z = tr[(r + 2) % 3];
      t[x][y] = {1, z};
      t[y][x] = {-1, z};
    }
  }
  return t;
}

inline constexpr auto kTable = buildTable();

}  // namespace octonion_detail

/// Sign and index of e_i * e_j.
constexpr std::pair<int, int> basisProduct(int i, int j) {
  const auto p = octonion_detail::kTable[i][j];
  return {p.sign, p.index};
}

/// Octonion with coordinates in (1/2) Z, stored doubled.
class IntegralOctonion {
 public:
  using Coords = std::array<std::int64_t, 8>;

  constexpr IntegralOctonion() = default;
  constexpr explicit IntegralOctonion(const Coords& twice) : twice_(twice) {}

  static constexpr IntegralOctonion basis(int i, int sign = 1) {
    Coords c{};
    c[i] = 2 * sign;
    return IntegralOctonion(c);
  }

  constexpr const Coords& twice() const noexcept { return twice_; }

  /// 4 * norm.
  constexpr std::int64_t norm4() const noexcept {
    std::int64_t s = 0;
    for (auto v : twice_) s += v * v;
    return s;
  }

  /// 4 * Euclidean inner product.
  constexpr std::int64_t dot4(const IntegralOctonion& o) const noexcept {
    std::int64_t s = 0;
    for (int i = 0; i < 8; ++i) s += twice_[i] * o.twice_[i];
    return s;
  }

  constexpr bool isUnit() const noexcept { return norm4() == 4; }
  constexpr bool isImaginary() const noexcept { return twice_[0] == 0; }

  constexpr IntegralOctonion operator+(const IntegralOctonion& o) const {
    Coords c{};
    for (int i = 0; i < 8; ++i) c[i] = twice_[i] + o.twice_[i];
    return IntegralOctonion(c);
  }
  constexpr IntegralOctonion operator-() const {
    Coords c{};
    for (int i = 0; i < 8; ++i) c[i] = -twice_[i];
    return IntegralOctonion(c);
  }

  /// Product; throws BadOrderData if the result leaves (1/2) Z^8.
  IntegralOctonion operator*(const IntegralOctonion& o) const {
    Coords raw{};  // 4 * product
    for (int i = 0; i < 8; ++i) {
      if (twice_[i] == 0) continue;
      for (int j = 0; j < 8; ++j) {
        if (o.twice_[j] == 0) continue;
        const auto [s, k] = basisProduct(i, j);
        raw[k] += s * twice_[i] * o.twice_[j];
      }
    }
    Coords c{};
    for (int k = 0; k < 8; ++k) {
      if (raw[k] % 2 != 0) throw BadOrderData("product leaves the half-integral lattice");
      c[k] = raw[k] / 2;
    }
    return IntegralOctonion(c);
  }

  constexpr auto operator<=>(const IntegralOctonion&) const = default;

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < 8; ++i) {
      if (i) s += ",";
      s += std::to_string(twice_[i]);
    }
    return s + "]/2";
  }

 private:
  Coords twice_{};
};

/// The 14 halving sets of the extended Hamming code attached to a Fano plane.
inline std::vector<std::array<int, 4>> halvingSets(const FanoPlane& plane) {
  std::vector<std::array<int, 4>> sets;
  for (const auto& line : plane) {
    sets.push_back({0, line[0], line[1], line[2]});
    std::array<int, 4> rest{};
    int n = 0;
    for (int i = 1; i <= 7; ++i) {
      if (std::find(line.begin(), line.end(), i) == line.end()) rest[n++] = i;
    }
    sets.push_back(rest);
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

/// +-e_i and all sign patterns (+-1/2) on each halving set, sorted.
inline std::vector<IntegralOctonion> unitsForPlane(const FanoPlane& plane) {
  std::vector<IntegralOctonion> units;
  for (int i = 0; i < 8; ++i) {
    units.push_back(IntegralOctonion::basis(i, 1));
    units.push_back(IntegralOctonion::basis(i, -1));
  }
  for (const auto& set : halvingSets(plane)) {
    for (int mask = 0; mask < 16; ++mask) {
      IntegralOctonion::Coords c{};
      for (int b = 0; b < 4; ++b) c[set[b]] = (mask >> b) & 1 ? -1 : 1;
      units.emplace_back(c);
    }
  }
  std::sort(units.begin(), units.end());
  return units;
}

inline bool unitsClosed(const std::vector<IntegralOctonion>& units) {
  for (const auto& x : units) {
    for (const auto& y : units) {
      IntegralOctonion p;
      try {
        p = x * y;
      } catch (const BadOrderData&) {
        return false;
      }
      if (!std::binary_search(units.begin(), units.end(), p)) return false;
    }
  }
  return true;
}

/// All 30 labelled Fano planes on {1..7}, lines and planes sorted.
inline std::vector<FanoPlane> allFanoPlanes() {
  std::set<FanoPlane> planes;
  std::array<int, 8> perm{0, 1, 2, 3, 4, 5, 6, 7};
  const FanoPlane base = octonion_detail::kMultiplicationTriples;
  do {
    FanoPlane p{};
    for (int l = 0; l < 7; ++l) {
      p[l] = {perm[base[l][0]], perm[base[l][1]], perm[base[l][2]]};
      std::sort(p[l].begin(), p[l].end());
    }
    std::sort(p.begin(), p.end());
    planes.insert(p);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return {planes.begin(), planes.end()};
}

/// Fano planes whose halving sets make the 240 candidate units a
/// multiplicatively closed set, in lexicographic order.
inline std::vector<FanoPlane> findClosedHalvingPlanes() {
  std::vector<FanoPlane> out;
  for (const auto& p : allFanoPlanes()) {
    if (unitsClosed(unitsForPlane(p))) out.push_back(p);
  }
  return out;
}

inline constexpr FanoPlane kCoxeterHalvingPlane{{
    {1, 2, 3}, {1, 4, 7}, {1, 5, 6}, {2, 4, 5}, {2, 6, 7}, {3, 4, 6}, {3, 5, 7}}};

/// The 240 units of the Coxeter order, sorted.
inline const std::vector<IntegralOctonion>& enumerateUnits() {
  static const std::vector<IntegralOctonion> units = [] {
    auto u = unitsForPlane(kCoxeterHalvingPlane);
    const auto count = std::count_if(u.begin(), u.end(),
                                     [](const IntegralOctonion& x) { return x.isUnit(); });
    if (u.size() != 240 || count != 240) {
      throw BadOrderData("expected 240 units, found " + std::to_string(count));
    }
    return u;
  }();
  return units;
}

/// Norm-1 elements of the order found by a bounded search over the lattice
/// spanned by the units; used to confirm enumerateUnits() independently.
inline std::vector<IntegralOctonion> searchNormOneElements() {
  // Norm 1 bounds every doubled coordinate by 2 in absolute value.
  const auto& units = enumerateUnits();
  auto inLattice = [&](const IntegralOctonion& x) {
    // The order is self-dual for the form 2 Re(x conj(y)) = dot4 / 2 and is
    // spanned by its units.
    for (const auto& u : units) {
      if (x.dot4(u) % 2 != 0) return false;
    }
    return true;
  };
  std::vector<IntegralOctonion> found;
  std::array<int, 8> idx{};
  while (true) {
    IntegralOctonion::Coords c{};
    std::int64_t n4 = 0;
    for (int i = 0; i < 8; ++i) {
      c[i] = idx[i] - 2;
      n4 += c[i] * c[i];
    }
    if (n4 == 4) {
      IntegralOctonion x(c);
      if (inLattice(x)) found.push_back(x);
    }
    int pos = 0;
    while (pos < 8 && ++idx[pos] == 5) idx[pos++] = 0;
    if (pos == 8) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace g2count
