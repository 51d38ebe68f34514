#pragma once
/**
 * @file weylchar.hpp
 * @brief Irreducible characters of compact G2 at torsion points of the
 * maximal torus: Weyl dimension formula, Weyl character formula with a
 * jet-limit for irregular points, and Freudenthal multiplicities as an
 * independent route.
 */

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2count/cyclotomic.hpp"
#include "g2count/errors.hpp"
#include "g2count/rootlattice.hpp"

namespace g2count {

/// A point of order dividing N on the compact torus: the image of the
/// cocharacter (c delta1 + d delta2) / N. A weight mu = a eps1 + b eps2
/// evaluates to zeta_{2N}^{ac + bd}.
///
/// (c, d) is only meaningful modulo N * X_*(T); the stored representative
/// satisfies 0 <= c < N, 0 <= d < 2N.
class TorusElement {
 public:
  TorusElement() = default;

  TorusElement(unsigned n, std::int64_t c, std::int64_t d) : n_(n) {
    if (n == 0) throw std::invalid_argument("TorusElement: N must be positive");
    if ((c + d) % 2 != 0) {
      throw std::invalid_argument("TorusElement: c + d must be even");
    }
    const std::int64_t m = 2 * static_cast<std::int64_t>(n);
    c = ((c % m) + m) % m;
    d = ((d % m) + m) % m;
    if (c >= static_cast<std::int64_t>(n)) {
      c -= n;
      d = (((d - static_cast<std::int64_t>(n)) % m) + m) % m;
    }
    c_ = c;
    d_ = d;
  }

  static TorusElement identity() { return {}; }

  unsigned N() const noexcept { return n_; }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  /// Exponent e in [0, 2N) with mu(t) = zeta_{2N}^e.
  std::int64_t exponent(const Weight& mu) const noexcept {
    const std::int64_t m = 2 * static_cast<std::int64_t>(n_);
    return (((mu.a() * c_ + mu.b() * d_) % m) + m) % m;
  }

  /// Same point, written with a denominator M that is a multiple of N.
  TorusElement withModulus(unsigned target) const {
    if (target % n_ != 0) throw std::invalid_argument("withModulus: not a multiple of N");
    const std::int64_t s = target / n_;
    return {target, s * c_, s * d_};
  }

  TorusElement power(std::int64_t k) const { return {n_, k * c_, k * d_}; }

  TorusElement act(const WeylElement& w) const {
    const auto [c, d] = w.actCoweightCoords(c_, d_);
    return {n_, c, d};
  }

  /// Order of t as a group element (divides N).
  unsigned order() const {
    for (unsigned k = 1; k <= n_; ++k) {
      if (n_ % k == 0 && power(k).isIdentity()) return k;
    }
    return n_;
  }

  bool isIdentity() const noexcept { return c_ == 0 && d_ == 0; }

  bool rootIsTrivial(const Weight& alpha) const noexcept { return exponent(alpha) == 0; }

  /// No root takes the value 1, i.e. the Weyl stabilizer is trivial.
  bool isRegular() const noexcept {
    for (const auto& r : roots::positive) {
      if (rootIsTrivial(r)) return false;
    }
    return true;
  }

  /// Equality of torus points, independent of the chosen N.
  friend bool operator==(const TorusElement& x, const TorusElement& y) {
    if (x.n_ != y.n_) {
      const unsigned l = std::lcm(x.n_, y.n_);
      const TorusElement a = x.withModulus(l), b = y.withModulus(l);
      return a.c_ == b.c_ && a.d_ == b.d_;
    }
    return x.c_ == y.c_ && x.d_ == y.d_;
  }

  std::string str() const {
    return "{N=" + std::to_string(n_) + ", c=" + std::to_string(c_) + ", d=" +
           std::to_string(d_) + "}";
  }

 private:
  unsigned n_ = 1;
  std::int64_t c_ = 0;
  std::int64_t d_ = 0;
};

/// Lexicographically least (c, d) representative of the orbit of t under
/// the given Weyl elements, keeping the modulus N.
inline TorusElement canonicalModulo(const TorusElement& t, const std::vector<WeylElement>& group) {
  TorusElement best = t;
  for (const auto& w : group) {
    const TorusElement u = t.act(w);
    if (std::pair(u.c(), u.d()) < std::pair(best.c(), best.d())) best = u;
  }
  return best;
}

/// Whether two torus points are conjugate under the full Weyl group.
inline bool sameG2Class(const TorusElement& x, const TorusElement& y) {
  const unsigned l = std::lcm(x.N(), y.N());
  return canonicalModulo(x.withModulus(l), weylGroup()) ==
         canonicalModulo(y.withModulus(l), weylGroup());
}

inline CyclotomicNumber evalWeight(const Weight& mu, const TorusElement& t) {
  return embedRoot(2 * t.N(), t.exponent(mu));
}

/// Weyl dimension formula.
inline Integer weylDim(const Weight& lambda) {
  if (!isDominantG2(lambda)) {
    throw std::invalid_argument("weylDim: weight " + lambda.str() + " is not dominant");
  }
  const Weight shifted = lambda + rhoG();
  Integer num = 1, den = 1;
  for (const auto& r : roots::positive) {
    const Coweight co = coroot(r);
    num *= pairing(shifted, co);
    den *= pairing(rhoG(), co);
  }
  return num / den;
}

namespace detail {

/// Sum_w sign(w) zeta^{<w mu, x>} as an element of Q(zeta_{2N}).
inline CyclotomicNumber alternatingSum(const Weight& mu, const TorusElement& t) {
  std::vector<Rational> raw(2 * t.N(), Rational(0));
  for (const auto& w : weylGroup()) raw[t.exponent(w(mu))] += w.sign();
  return CyclotomicNumber::fromPolynomial(2 * t.N(), std::move(raw));
}

/// Alternating sum deformed along t * exp(s v), as a jet in s.
inline Jet alternatingJet(const Weight& mu, const TorusElement& t, const Coweight& v,
                          unsigned order) {
  Jet jet(2 * t.N(), order);
  Rational factorial = 1;
  std::vector<Rational> powers(weylGroup().size(), Rational(1));
  for (unsigned j = 0; j < order; ++j) {
    if (j > 0) factorial *= j;
    std::vector<Rational> raw(2 * t.N(), Rational(0));
    for (std::size_t i = 0; i < weylGroup().size(); ++i) {
      const WeylElement& w = weylGroup()[i];
      const Weight image = w(mu);
      if (j > 0) powers[i] *= pairing(image, v);
      raw[t.exponent(image)] += w.sign() * powers[i];
    }
    for (auto& q : raw) q /= factorial;
    jet.coefficient(j) = CyclotomicNumber::fromPolynomial(2 * t.N(), std::move(raw));
  }
  return jet;
}

inline void requireDominant(const Weight& lambda, const char* where) {
  if (!isDominantG2(lambda)) {
    throw std::invalid_argument(std::string(where) + ": weight " + lambda.str() +
                                " is not dominant");
  }
}

}  // namespace detail

/// Weyl character formula as a ratio; nullopt when the denominator vanishes at t.
inline std::optional<CyclotomicNumber> charAtDirect(const Weight& lambda, const TorusElement& t) {
  detail::requireDominant(lambda, "charAtDirect");
  const CyclotomicNumber den = detail::alternatingSum(rhoG(), t);
  if (den.isZero()) return std::nullopt;
  return detail::alternatingSum(lambda + rhoG(), t) / den;
}

/// Limit of the Weyl character formula along t * exp(s v) as s -> 0.
inline CyclotomicNumber charAtJet(const Weight& lambda, const TorusElement& t,
                                  const Coweight& direction = rhoCheck(),
                                  unsigned order = Jet::kDefaultOrder) {
  detail::requireDominant(lambda, "charAtJet");
  const Jet den = detail::alternatingJet(rhoG(), t, direction, order);
  const Jet num = detail::alternatingJet(lambda + rhoG(), t, direction, order);
  return jetRatioLimit(num, den);
}

/// chi_lambda(t). Regular points use the Weyl ratio directly; irregular ones
/// take the jet limit along rho^vee, then rho^vee + k lambda1^vee for k = 1..3.
inline CyclotomicNumber charAt(const Weight& lambda, const TorusElement& t,
                               unsigned order = Jet::kDefaultOrder) {
  if (auto direct = charAtDirect(lambda, t)) return *direct;
  for (std::int64_t k = 0; k <= 3; ++k) {
    try {
      return charAtJet(lambda, t, rhoCheck() + k * roots::lambda1Co, order);
    } catch (const TruncationTooShort&) {
      continue;
    }
  }
  throw DeformationDegenerate("no deformation direction separates " + t.str() +
                              " at truncation order " + std::to_string(order));
}

/// Weight multiplicities of V_lambda. Keys cover the full weight diagram.
using WeightTable = std::map<Weight, std::int64_t>;

/// Freudenthal's recursion on dominant weights, extended to the full
/// diagram by Weyl symmetry.
inline WeightTable freudenthalMultiplicities(const Weight& lambda,
                                             const Integer& dimensionCap = 1000000) {
  detail::requireDominant(lambda, "freudenthalMultiplicities");
  const Integer dim = weylDim(lambda);
  if (dim > dimensionCap) {
    throw BoundExceeded("dim V_" + lambda.str() + " = " + dim.get_str() + " exceeds cap " +
                        dimensionCap.get_str());
  }

  // Dominant weights lambda - i alpha1 - j alpha2, ordered by depth i + j.
  const auto [iMax, jMax] = simpleRootCoords(lambda);
  std::vector<std::pair<std::int64_t, Weight>> dominant;
  for (std::int64_t i = 0; i <= iMax; ++i) {
    for (std::int64_t j = 0; j <= jMax; ++j) {
      const Weight mu = lambda - i * roots::alpha1 - j * roots::alpha2;
      if (isDominantG2(mu)) dominant.emplace_back(i + j, mu);
    }
  }
  std::sort(dominant.begin(), dominant.end());

  std::map<Weight, std::int64_t> dominantMult;
  const Weight rho = rhoG();
  const std::int64_t lambdaNorm = innerProduct(lambda, lambda);
  const std::int64_t top = innerProduct(lambda + rho, lambda + rho);
  auto lookup = [&](const Weight& nu) -> std::int64_t {
    const auto it = dominantMult.find(dominantConjugate(nu).first);
    return it == dominantMult.end() ? 0 : it->second;
  };

  for (const auto& [depth, mu] : dominant) {
    if (depth == 0) {
      dominantMult[mu] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& alpha : roots::positive) {
      for (Weight nu = mu + alpha; innerProduct(nu, nu) <= lambdaNorm; nu += alpha) {
        sum += lookup(nu) * innerProduct(nu, alpha);
      }
    }
    const std::int64_t den = top - innerProduct(mu + rho, mu + rho);
    if (den <= 0 || (2 * sum) % den != 0) {
      throw std::logic_error("freudenthalMultiplicities: non-integral step at " + mu.str());
    }
    const std::int64_t m = 2 * sum / den;
    if (m > 0) dominantMult[mu] = m;
  }

  WeightTable table;
  for (const auto& [mu, m] : dominantMult) {
    for (const auto& nu : weylOrbit(mu)) table[nu] = m;
  }
  return table;
}

/// Sum_mu m_mu mu(t) over a weight table.
inline CyclotomicNumber charFromWeights(const WeightTable& table, const TorusElement& t) {
  std::vector<Rational> raw(2 * t.N(), Rational(0));
  for (const auto& [mu, m] : table) raw[t.exponent(mu)] += m;
  return CyclotomicNumber::fromPolynomial(2 * t.N(), std::move(raw));
}

}  // namespace g2count
