#pragma once
// Reference computations that share no code path with the library routines
// they are compared against.

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "g2count/cyclotomic.hpp"
#include "g2count/gammaclasses.hpp"
#include "g2count/rootlattice.hpp"
#include "g2count/weylchar.hpp"

namespace oracle {

using namespace g2count;

/// dim S_k from the monomial basis E4^a E6^b of M_k.
inline std::int64_t cuspDim(std::int64_t k) {
  if (k < 4 || k % 2) return 0;
  std::int64_t m = 0;
  for (std::int64_t a = 0; 4 * a <= k; ++a) {
    if ((k - 4 * a) % 6 == 0) ++m;
  }
  return m - 1;
}

/// Floating-point value of a cyclotomic number at exp(2 pi i / N).
inline std::complex<double> numeric(const CyclotomicNumber& x) {
  const double t = 2 * std::numbers::pi / x.modulus();
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
    s += x.coefficients()[i].get_d() * std::polar(1.0, t * static_cast<double>(i));
  }
  return s;
}

/// Signed multiplicities of V_lambda (x) V_mu by Brauer-Klimyk.
inline std::map<Weight, std::int64_t> tensorDecomposition(const Weight& lambda, const Weight& mu) {
  std::map<Weight, std::int64_t> out;
  const Weight rho = rhoG();
  for (const auto& [nu, mult] : freudenthalMultiplicities(mu)) {
    const Weight v = lambda + nu + rho;
    if (!isRegular(v)) continue;
    const auto [dom, w] = dominantConjugate(v);
    out[dom - rho] += w.sign() * mult;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// dim Sym^n(V7)^Gamma via the power sums tr(g^j) of every group element.
inline std::vector<Rational> symmetricPowerInvariants(const AutGroup& group, int maxN) {
  std::vector<Rational> avg(maxN + 1, Rational(0));
  for (int g = 0; g < static_cast<int>(group.size()); ++g) {
    std::vector<Rational> p(maxN + 1);
    int x = group.identity;
    for (int j = 1; j <= maxN; ++j) {
      x = group.multiply(x, g);
      p[j] = Rational(group.elements[x].traceDoubled(), 2);
      p[j].canonicalize();
    }
    // n h_n = sum_{j=1}^n p_j h_{n-j}
    std::vector<Rational> h(maxN + 1);
    h[0] = 1;
    for (int n = 1; n <= maxN; ++n) {
      Rational s = 0;
      for (int j = 1; j <= n; ++j) s += p[j] * h[n - j];
      h[n] = s / n;
    }
    for (int n = 0; n <= maxN; ++n) avg[n] += h[n];
  }
  for (auto& a : avg) {
    a /= static_cast<long>(group.size());
    a.canonicalize();
  }
  return avg;
}

}  // namespace oracle
