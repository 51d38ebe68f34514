#pragma once
/**
 * @file rootlattice.hpp
 * @brief Character and cocharacter lattices of G2, roots, coroots and the
 * Weyl group.
 *
 * Weights are stored in the (eps1, eps2) basis where the short and long
 * roots of the K = SU(2) x SU(2) / +-1 factors are 2 eps1 and 2 eps2.
 * X^*(T) = { a eps1 + b eps2 : a + b even } and X_*(T) is spanned by the
 * dual basis (delta1, delta2) with <delta_i, eps_j> = 1/2 [i = j].
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g2count {

class Weight {
 public:
  constexpr Weight() = default;
  constexpr Weight(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
    if ((a + b) % 2 != 0) {
      throw std::invalid_argument("Weight: a + b must be even, got (" +
                                  std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
    }
  }

  constexpr std::int64_t a() const noexcept { return a_; }
  constexpr std::int64_t b() const noexcept { return b_; }

  constexpr Weight operator+(const Weight& o) const { return {a_ + o.a_, b_ + o.b_}; }
  constexpr Weight operator-(const Weight& o) const { return {a_ - o.a_, b_ - o.b_}; }
  constexpr Weight operator-() const { return {-a_, -b_}; }
  constexpr Weight& operator+=(const Weight& o) { return *this = *this + o; }
  constexpr Weight& operator-=(const Weight& o) { return *this = *this - o; }
  friend constexpr Weight operator*(std::int64_t s, const Weight& w) { return {s * w.a_, s * w.b_}; }

  constexpr auto operator<=>(const Weight&) const = default;

  std::string str() const { return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")"; }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

class Coweight {
 public:
  constexpr Coweight() = default;
  constexpr Coweight(std::int64_t c, std::int64_t d) : c_(c), d_(d) {
    if ((c + d) % 2 != 0) {
      throw std::invalid_argument("Coweight: c + d must be even, got (" +
                                  std::to_string(c) + ", " +
                                  std::to_string(d) + ")");
    }
  }

  constexpr std::int64_t c() const noexcept { return c_; }
  constexpr std::int64_t d() const noexcept { return d_; }

  constexpr Coweight operator+(const Coweight& o) const { return {c_ + o.c_, d_ + o.d_}; }
  constexpr Coweight operator-(const Coweight& o) const { return {c_ - o.c_, d_ - o.d_}; }
  friend constexpr Coweight operator*(std::int64_t s, const Coweight& x) { return {s * x.c_, s * x.d_}; }

  constexpr auto operator<=>(const Coweight&) const = default;

  std::string str() const { return "(" + std::to_string(c_) + "," + std::to_string(d_) + ")"; }

 private:
  std::int64_t c_ = 0;
  std::int64_t d_ = 0;
};

/// <a eps1 + b eps2, c delta1 + d delta2> = (ac + bd) / 2, an integer on the lattices.
constexpr std::int64_t pairing(const Weight& w, const Coweight& x) noexcept {
  return (w.a() * x.c() + w.b() * x.d()) / 2;
}

/// Omega-invariant inner product, scaled so that short roots have length^2 4
/// and long roots 12. Half of this is the normalization with short length^2 2.
constexpr std::int64_t innerProduct(const Weight& u, const Weight& v) noexcept {
  return u.a() * v.a() + 3 * u.b() * v.b();
}

namespace roots {
inline constexpr Weight eps1x2{2, 0};
inline constexpr Weight eps2x2{0, 2};
inline constexpr Weight alpha1{-1, 1};  // short simple root
inline constexpr Weight alpha2{3, -1};  // long simple root
inline constexpr Weight lambda1{1, 1};  // = rho_K = rho_H
inline constexpr Weight lambda2{3, 1};
inline constexpr Weight beta = lambda2;  // highest root
inline constexpr Weight rhoK{1, 1};
inline constexpr Weight rhoH{1, 1};

inline constexpr Coweight delta1x2{2, 0};
inline constexpr Coweight delta2x2{0, 2};
inline constexpr Coweight alpha1Co{-1, 3};
inline constexpr Coweight alpha2Co{1, -1};
inline constexpr Coweight lambda1Co{1, 3};
inline constexpr Coweight lambda2Co{1, 1};

/// Short positive roots first, then long ones.
inline constexpr std::array<Weight, 6> positive{
    alpha1, Weight{2, 0}, Weight{1, 1}, alpha2, Weight{0, 2}, Weight{3, 1}};

inline constexpr std::array<Weight, 3> shortPositive{alpha1, Weight{2, 0}, Weight{1, 1}};
}  // namespace roots

/// alpha^vee = 2 alpha / (alpha, alpha), transported to the delta basis.
constexpr Coweight coroot(const Weight& alpha) {
  const std::int64_t len2 = innerProduct(alpha, alpha);
  if (len2 == 0) throw std::invalid_argument("coroot of zero weight");
  const std::int64_t c = 4 * alpha.a();
  const std::int64_t d = 12 * alpha.b();
  if (c % len2 != 0 || d % len2 != 0) {
    throw std::invalid_argument("coroot: " + alpha.str() + " is not a root");
  }
  return {c / len2, d / len2};
}

/// Half the sum of the positive roots: 4 eps1 + 2 eps2.
constexpr Weight rhoG() {
  std::int64_t a = 0, b = 0;
  for (const auto& r : roots::positive) {
    a += r.a();
    b += r.b();
  }
  return {a / 2, b / 2};
}

/// Half the sum of the positive coroots, lambda1^vee + lambda2^vee.
constexpr Coweight rhoCheck() {
  std::int64_t c = 0, d = 0;
  for (const auto& r : roots::positive) {
    const Coweight x = coroot(r);
    c += x.c();
    d += x.d();
  }
  return {c / 2, d / 2};
}

/// Coefficients (i, j) with w = i alpha1 + j alpha2.
constexpr std::pair<std::int64_t, std::int64_t> simpleRootCoords(const Weight& w) noexcept {
  return {(w.a() + 3 * w.b()) / 2, (w.a() + w.b()) / 2};
}

/// Coefficients (m, n) with w = m lambda1 + n lambda2.
constexpr std::pair<std::int64_t, std::int64_t> fundamentalCoords(const Weight& w) noexcept {
  return {pairing(w, roots::alpha1Co), pairing(w, roots::alpha2Co)};
}

constexpr Weight fromFundamentalCoords(std::int64_t m, std::int64_t n) {
  return m * roots::lambda1 + n * roots::lambda2;
}

/// Element of the Weyl group, a dihedral group of order 12.
///
/// Matrices act on column vectors of coordinates. Entries are half-integers,
/// so both actions are stored doubled; application is exact on the lattices.
class WeylElement {
 public:
  using Mat2 = std::array<std::int64_t, 4>;  // row-major, doubled

  constexpr WeylElement() = default;
  constexpr WeylElement(int index, Mat2 onWeights, Mat2 onCoweights)
      : index_(index), w_(onWeights), x_(onCoweights) {}

  constexpr int index() const noexcept { return index_; }
  constexpr const Mat2& weightMatrixDoubled() const noexcept { return w_; }
  constexpr const Mat2& coweightMatrixDoubled() const noexcept { return x_; }

  constexpr int sign() const noexcept {
    return static_cast<int>((w_[0] * w_[3] - w_[1] * w_[2]) / 4);
  }

  constexpr Weight operator()(const Weight& v) const {
    return {(w_[0] * v.a() + w_[1] * v.b()) / 2, (w_[2] * v.a() + w_[3] * v.b()) / 2};
  }
  constexpr Coweight operator()(const Coweight& v) const {
    return {(x_[0] * v.c() + x_[1] * v.d()) / 2, (x_[2] * v.c() + x_[3] * v.d()) / 2};
  }

  /// Action on an arbitrary integer vector of coweight coordinates; used for
  /// torus parameters that are only defined modulo a lattice.
  constexpr std::pair<std::int64_t, std::int64_t> actCoweightCoords(std::int64_t c,
                                                                    std::int64_t d) const {
    return {(x_[0] * c + x_[1] * d) / 2, (x_[2] * c + x_[3] * d) / 2};
  }

  /// (*this) after other.
  constexpr WeylElement compose(const WeylElement& other) const {
    return {-1, mul(w_, other.w_), mul(x_, other.x_)};
  }

  constexpr bool sameAction(const WeylElement& o) const noexcept { return w_ == o.w_; }

  static constexpr WeylElement reflection(const Weight& alpha) {
    // s(v) = v - <v, alpha^vee> alpha; doubled matrix columns are 2 s(e_i).
    const Coweight co = coroot(alpha);
    Mat2 w{};
    w[0] = 2 - co.c() * alpha.a();
    w[1] = -co.d() * alpha.a();
    w[2] = -co.c() * alpha.b();
    w[3] = 2 - co.d() * alpha.b();
    // dual: s(x) = x - <alpha, x> alpha^vee.
    Mat2 x{};
    x[0] = 2 - alpha.a() * co.c();
    x[1] = -alpha.b() * co.c();
    x[2] = -alpha.a() * co.d();
    x[3] = 2 - alpha.b() * co.d();
    return {-1, w, x};
  }

 private:
  static constexpr Mat2 mul(const Mat2& p, const Mat2& q) {
    return {(p[0] * q[0] + p[1] * q[2]) / 2, (p[0] * q[1] + p[1] * q[3]) / 2,
            (p[2] * q[0] + p[3] * q[2]) / 2, (p[2] * q[1] + p[3] * q[3]) / 2};
  }

  int index_ = 0;
  Mat2 w_{2, 0, 0, 2};
  Mat2 x_{2, 0, 0, 2};
};

namespace detail {
inline std::vector<WeylElement> buildWeylGroup() {
  const WeylElement s1 = WeylElement::reflection(roots::alpha1);
  const WeylElement s2 = WeylElement::reflection(roots::alpha2);
  std::vector<WeylElement> elems{WeylElement{}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : {s1, s2}) {
      WeylElement next = gen.compose(elems[i]);
      const bool seen = std::any_of(elems.begin(), elems.end(),
                                    [&](const WeylElement& e) { return e.sameAction(next); });
      if (!seen) elems.push_back(next);
    }
  }
  std::vector<WeylElement> out;
  out.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out.emplace_back(static_cast<int>(i), elems[i].weightMatrixDoubled(),
                     elems[i].coweightMatrixDoubled());
  }
  return out;
}
}  // namespace detail

/// The 12 Weyl group elements in breadth-first order from the identity
/// (index 0) over the generators s_alpha1, s_alpha2 (indices 1 and 2).
inline const std::vector<WeylElement>& weylGroup() {
  static const std::vector<WeylElement> group = detail::buildWeylGroup();
  return group;
}

inline const WeylElement& sAlpha1() { return weylGroup()[1]; }
inline const WeylElement& sAlpha2() { return weylGroup()[2]; }

/// Look up the element of weylGroup() with the same action.
inline const WeylElement& canonicalElement(const WeylElement& w) {
  for (const auto& e : weylGroup()) {
    if (e.sameAction(w)) return e;
  }
  throw std::logic_error("canonicalElement: not a Weyl group element");
}

/// Subgroup generated by the reflections in 2 eps1 and 2 eps2 (sign changes).
inline std::vector<WeylElement> weylGroupH() {
  const WeylElement r1 = WeylElement::reflection(roots::eps1x2);
  const WeylElement r2 = WeylElement::reflection(roots::eps2x2);
  return {canonicalElement(WeylElement{}), canonicalElement(r1), canonicalElement(r2),
          canonicalElement(r1.compose(r2))};
}

inline Weight weylAct(const WeylElement& s, const Weight& w) { return s(w); }

/// Closed G2-dominant chamber.
constexpr bool isDominantG2(const Weight& w) noexcept {
  return pairing(w, roots::alpha1Co) >= 0 && pairing(w, roots::alpha2Co) >= 0;
}

constexpr bool isRegular(const Weight& w) noexcept {
  for (const auto& r : roots::positive) {
    if (pairing(w, coroot(r)) == 0) return false;
  }
  return true;
}

inline std::set<Weight> weylOrbit(const Weight& w) {
  std::set<Weight> orbit;
  for (const auto& e : weylGroup()) orbit.insert(e(w));
  return orbit;
}

/// The dominant Weyl conjugate of w together with the element taking w to it.
inline std::pair<Weight, WeylElement> dominantConjugate(const Weight& w) {
  for (const auto& e : weylGroup()) {
    const Weight v = e(w);
    if (isDominantG2(v)) return {v, e};
  }
  throw std::logic_error("dominantConjugate: no dominant conjugate of " + w.str());
}

/// Harish-Chandra parameter s_alpha2((k-2) beta + rho_G) of the weight-k
/// quaternionic discrete series.
inline Weight hcParameter(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("hcParameter: requires k >= 2");
  return sAlpha2()((k - 2) * roots::beta + rhoG());
}

/// Minimal K-type s_alpha2((k-2) beta + 2 rho_G) - 2 rho_K.
inline Weight minimalKType(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("minimalKType: requires k >= 2");
  return sAlpha2()((k - 2) * roots::beta + 2 * rhoG()) - 2 * roots::rhoK;
}

/// The three H-weights w((k-2) beta + rho_G) - rho_H for w = 1, s_alpha1, s_alpha2.
struct TransferWeights {
  Weight identity;
  Weight viaS1;
  Weight viaS2;

  bool operator==(const TransferWeights&) const = default;
};

inline TransferWeights transferWeights(std::int64_t k) {
  if (k <= 2) throw std::invalid_argument("transferWeights: requires k > 2");
  const Weight hc = (k - 2) * roots::beta + rhoG();
  return {hc - roots::rhoH, sAlpha1()(hc) - roots::rhoH, sAlpha2()(hc) - roots::rhoH};
}

/// ((3k-3, k-1), (3k-2, k-2), (0, 2k-2)).
inline TransferWeights transferWeightsClosedForm(std::int64_t k) {
  if (k <= 2) throw std::invalid_argument("transferWeightsClosedForm: requires k > 2");
  return {Weight{3 * k - 3, k - 1}, Weight{3 * k - 2, k - 2}, Weight{0, 2 * k - 2}};
}

}  // namespace g2count
