#pragma once
/**
 * @file endoscopy.hpp
 * @brief Correction terms from the endoscopic group H = SL2 x SL2 / +-1:
 * the H-term in terms of cusp form dimensions, the transfer sign data, the
 * per-weight correction, and the projection of H-torus classes to G2.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "g2count/cyclotomic.hpp"
#include "g2count/modforms.hpp"
#include "g2count/rootlattice.hpp"
#include "g2count/weylchar.hpp"

namespace g2count {

/// Tamagawa-ratio constants iota and the transfer signs kappa^H for the
/// chosen Whittaker normalization. These are inputs, not derived here.
struct EndoscopicConstants {
  Rational iotaG2H{1, 2};
  Rational iotaG2cH{1, 2};
  Rational iotaG2cG2{1};
  int kappaS1 = -1;
  int kappaS2 = -1;
  int kappaS1S2 = -1;
};

inline const EndoscopicConstants& endoscopicConstants() {
  static const EndoscopicConstants constants{};
  return constants;
}

/// I^H(eta_{a eps1 + b eps2} (x) 1) = (S_{a+2} - [a = 0]) (S_{b+2} - [b = 0]).
constexpr std::int64_t hTerm(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("hTerm: requires a, b >= 0");
  return (dimCuspForms(a + 2) - (a == 0 ? 1 : 0)) * (dimCuspForms(b + 2) - (b == 0 ? 1 : 0));
}

inline std::int64_t hTerm(const Weight& w) { return hTerm(w.a(), w.b()); }

struct SignedWeight {
  int sign;
  Weight weight;

  bool operator==(const SignedWeight&) const = default;
};

/// Transfers to H of the quaternionic pseudocoefficient and of the
/// Euler-Poincare function of G2^c, each a signed sum of three eta^H.
struct TransferSigns {
  std::array<SignedWeight, 3> pseudo;
  std::array<SignedWeight, 3> eulerPoincare;
};

inline TransferSigns transferWeightSigns(std::int64_t k) {
  if (k <= 2) throw std::invalid_argument("transferWeightSigns: requires k > 2");
  const auto w = transferWeights(k);
  const auto& kc = endoscopicConstants();
  // s_alpha2 is an involution, so kappa(s_alpha2^{-1}) = kappa(s_alpha2) and
  // kappa(s_alpha1 s_alpha2^{-1}) = kappa(s_alpha1 s_alpha2).
  TransferSigns t{
      {{{kc.kappaS2, w.identity}, {-kc.kappaS1S2, w.viaS1}, {-1, w.viaS2}}},
      {{{1, w.identity}, {sAlpha1().sign(), w.viaS1}, {sAlpha2().sign(), w.viaS2}}}};
  return t;
}

using LinearCombination = std::map<Weight, Rational>;

/// iota(G2, H) * pseudo - iota(G2^c, H) * EP, with zero terms removed: the
/// H-contribution to I^{G2}(phi_k) - I^{G2^c}(eta_{(k-2) beta}).
inline LinearCombination correctionCombination(std::int64_t k) {
  const auto t = transferWeightSigns(k);
  const auto& kc = endoscopicConstants();
  LinearCombination out;
  for (const auto& sw : t.pseudo) out[sw.weight] += kc.iotaG2H * sw.sign;
  for (const auto& sw : t.eulerPoincare) out[sw.weight] -= kc.iotaG2cH * sw.sign;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// |Q_k(1)| - dim V_{(k-2) beta}^{G2^c(Z)}, evaluated through hTerm.
inline std::int64_t correction(std::int64_t k) {
  if (k <= 2) throw std::invalid_argument("correction: requires k > 2");
  Rational sum = 0;
  for (const auto& [w, coeff] : correctionCombination(k)) sum += coeff * hTerm(w);
  if (sum.get_den() != 1) throw std::logic_error("correction: non-integral combination");
  return sum.get_num().get_si();
}

/// The closed piecewise form of correction(k), by residue of k mod 12.
constexpr std::int64_t correctionPiecewise(std::int64_t k) {
  if (k <= 2) throw std::invalid_argument("correctionPiecewise: requires k > 2");
  switch (k % 12) {
    case 2:
      return (k / 4) * (k / 12 - 1);
    case 0:
    case 4:
    case 6:
    case 8:
    case 10:
      return (k / 4) * (k / 12);
    case 1:
      return -((3 * k - 1) / 12 - 1) * ((k + 1) / 12 - 1);
    case 5:
    case 9:
      return -((3 * k - 1) / 12 - 1) * ((k + 1) / 12);
    default:  // 3, 7, 11
      return -((3 * k - 1) / 12) * ((k + 1) / 12);
  }
}

/// Torus point modulo the Weyl group of H (independent sign changes of the
/// eps1 and eps2 coordinates).
class HClass {
 public:
  explicit HClass(const TorusElement& t) : rep_(canonicalModulo(t, weylGroupH())) {}
  const TorusElement& representative() const noexcept { return rep_; }
  friend bool operator==(const HClass&, const HClass&) = default;
  friend auto operator<=>(const HClass& x, const HClass& y) {
    return std::tuple(x.rep_.N(), x.rep_.c(), x.rep_.d()) <=>
           std::tuple(y.rep_.N(), y.rep_.c(), y.rep_.d());
  }

 private:
  TorusElement rep_;
};

/// Torus point modulo the full Weyl group of G2.
class G2Class {
 public:
  explicit G2Class(const TorusElement& t) : rep_(canonicalModulo(t, weylGroup())) {}
  const TorusElement& representative() const noexcept { return rep_; }
  bool isRegular() const noexcept { return rep_.isRegular(); }
  friend bool operator==(const G2Class&, const G2Class&) = default;

 private:
  TorusElement rep_;
};

inline G2Class satakeProject(const HClass& h) { return G2Class(h.representative()); }

/// H-classes over g, each with the number of cosets Omega_H w mapping to it;
/// the multiplicities always sum to [Omega_G2 : Omega_H] = 3.
inline std::map<HClass, int> fiberWithMultiplicity(const G2Class& g) {
  // Right cosets Omega_H w: the H-class of w t depends only on the coset.
  const auto h = weylGroupH();
  std::vector<int> seenCoset(weylGroup().size(), 0);
  std::map<HClass, int> out;
  for (const auto& w : weylGroup()) {
    if (seenCoset[w.index()]) continue;
    for (const auto& x : h) seenCoset[canonicalElement(x.compose(w)).index()] = 1;
    ++out[HClass(g.representative().act(w))];
  }
  return out;
}

inline std::vector<HClass> fiber(const G2Class& g) {
  std::vector<HClass> out;
  for (const auto& [cls, mult] : fiberWithMultiplicity(g)) out.push_back(cls);
  return out;
}

}  // namespace g2count
