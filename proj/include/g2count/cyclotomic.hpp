#pragma once
/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Q(zeta_N) and truncated power series over it.
 *
 * Elements are kept in the power basis 1, x, ..., x^(phi(N)-1) of
 * Q[x]/(Phi_N), so equality and zero tests are coefficient comparisons.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2count/errors.hpp"

namespace g2count {

using Integer = mpz_class;
using Rational = mpq_class;

namespace poly {

/// Dense polynomial, lowest degree first, no trailing zeros.
template <class T>
using Poly = std::vector<T>;

template <class T>
void trim(Poly<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class T>
Poly<T> mul(const Poly<T>& p, const Poly<T>& q) {
  if (p.empty() || q.empty()) return {};
  Poly<T> r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  trim(r);
  return r;
}

/// Division with remainder by a nonzero divisor; quotient returned, p becomes the remainder.
inline Poly<Rational> divmod(Poly<Rational>& p, const Poly<Rational>& d) {
  trim(p);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  if (p.size() < d.size()) return {};
  Poly<Rational> q(p.size() - d.size() + 1);
  const Rational lead = d.back();
  for (std::size_t i = p.size(); i-- >= d.size();) {
    if (p[i] == 0) continue;
    const Rational f = p[i] / lead;
    const std::size_t shift = i - (d.size() - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < d.size(); ++j) p[shift + j] -= f * d[j];
  }
  trim(p);
  trim(q);
  return q;
}

}  // namespace poly

namespace detail {

inline std::vector<Integer> computeCyclotomic(unsigned n,
                                              std::map<unsigned, std::vector<Integer>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Integer> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Integer> phiD = computeCyclotomic(d, cache);
    // exact division by a monic integer polynomial
    std::vector<Integer> q(num.size() - phiD.size() + 1);
    for (std::size_t i = num.size(); i-- >= phiD.size();) {
      const Integer f = num[i];
      const std::size_t shift = i - (phiD.size() - 1);
      q[shift] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < phiD.size(); ++j) num[shift + j] -= f * phiD[j];
    }
    num = std::move(q);
  }
  cache.emplace(n, num);
  return num;
}

}  // namespace detail

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
inline std::shared_ptr<const std::vector<Integer>> cyclotomicPolynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomicPolynomial: n must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::vector<Integer>> raw;
  static std::map<unsigned, std::shared_ptr<const std::vector<Integer>>> shared;
  std::lock_guard lock(mu);
  if (auto it = shared.find(n); it != shared.end()) return it->second;
  auto p = std::make_shared<const std::vector<Integer>>(detail::computeCyclotomic(n, raw));
  shared.emplace(n, p);
  return p;
}

inline unsigned eulerPhi(unsigned n) {
  return static_cast<unsigned>(cyclotomicPolynomial(n)->size() - 1);
}

class CyclotomicNumber {
 public:
  /// Zero of Q(zeta_1) = Q.
  CyclotomicNumber() : CyclotomicNumber(1) {}

  explicit CyclotomicNumber(unsigned modulus, const Rational& value = 0)
      : modulus_(checkModulus(modulus)), phi_(cyclotomicPolynomial(modulus_)) {
    coeffs_.assign(degree(), Rational(0));
    coeffs_[0] = value;
  }

  /// zeta_N^e.
  static CyclotomicNumber root(unsigned modulus, std::int64_t e) {
    CyclotomicNumber z(modulus);
    const std::int64_t n = static_cast<std::int64_t>(z.modulus_);
    const std::int64_t r = ((e % n) + n) % n;
    std::vector<Rational> raw(static_cast<std::size_t>(r) + 1, Rational(0));
    raw[static_cast<std::size_t>(r)] = 1;
    z.assignReduced(std::move(raw));
    return z;
  }

  /// Element with the given power-basis representation, reduced mod Phi_N.
  static CyclotomicNumber fromPolynomial(unsigned modulus, std::vector<Rational> coeffs) {
    CyclotomicNumber z(modulus);
    z.assignReduced(std::move(coeffs));
    return z;
  }

  unsigned modulus() const noexcept { return modulus_; }
  std::size_t degree() const noexcept { return phi_->size() - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool isZero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
  }

  /// True iff the element lies in Q. In the power basis this is exactly the
  /// vanishing of every non-constant coefficient.
  bool isRational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& q) { return q == 0; });
  }

  Rational toRational() const {
    if (!isRational()) throw NonRational("element " + str() + " is not in Q");
    return coeffs_[0];
  }

  /// The same number viewed in Q(zeta_M) for a multiple M of the modulus.
  CyclotomicNumber promote(unsigned target) const {
    if (target == modulus_) return *this;
    if (target == 0 || target % modulus_ != 0) {
      throw std::invalid_argument("promote: " + std::to_string(target) +
                                  " is not a multiple of " + std::to_string(modulus_));
    }
    const unsigned scale = target / modulus_;
    std::vector<Rational> raw((degree() - 1) * scale + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * scale] = coeffs_[i];
    return fromPolynomial(target, std::move(raw));
  }

  /// Image under the automorphism zeta -> zeta^j, gcd(j, N) = 1.
  CyclotomicNumber galois(std::int64_t j) const {
    const std::int64_t n = modulus_;
    const std::int64_t jr = ((j % n) + n) % n;
    if (std::gcd(jr, n) != 1) throw std::invalid_argument("galois: exponent not a unit");
    CyclotomicNumber out(modulus_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      out += coeffs_[i] * root(modulus_, static_cast<std::int64_t>(i) * jr);
    }
    return out;
  }

  CyclotomicNumber inverse() const {
    if (isZero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
    // Extended Euclid: find u with u * a == 1 mod Phi.
    poly::Poly<Rational> r0 = phiRational(), r1 = coeffs_;
    poly::trim(r1);
    poly::Poly<Rational> t0, t1{Rational(1)};
    while (!(r1.size() == 1)) {
      poly::Poly<Rational> rem = r0;
      poly::Poly<Rational> q = poly::divmod(rem, r1);
      poly::Poly<Rational> t2 = t0;
      const poly::Poly<Rational> qt = poly::mul(q, t1);
      if (t2.size() < qt.size()) t2.resize(qt.size());
      for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
      poly::trim(t2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(t2);
      if (r1.empty()) throw std::logic_error("CyclotomicNumber: not invertible");
    }
    for (auto& c : t1) c /= r1[0];
    return fromPolynomial(modulus_, std::move(t1));
  }

  CyclotomicNumber operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) {
    if (o.modulus_ != modulus_) return *this = *this + o;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this += -o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
  CyclotomicNumber& operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    if (x.modulus_ != y.modulus_) {
      const unsigned m = std::lcm(x.modulus_, y.modulus_);
      return x.promote(m) + y.promote(m);
    }
    CyclotomicNumber out = x;
    out += y;
    return out;
  }
  friend CyclotomicNumber operator-(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    return x + (-y);
  }
  friend CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    if (x.modulus_ != y.modulus_) {
      const unsigned m = std::lcm(x.modulus_, y.modulus_);
      return x.promote(m) * y.promote(m);
    }
    return fromPolynomial(x.modulus_, poly::mul(x.coeffs_, y.coeffs_));
  }
  friend CyclotomicNumber operator*(const Rational& q, CyclotomicNumber x) { return x *= q; }
  friend CyclotomicNumber operator*(CyclotomicNumber x, const Rational& q) { return x *= q; }
  friend CyclotomicNumber operator/(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    return x * y.inverse();
  }

  /// Equality as complex numbers; moduli may differ.
  friend bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    if (x.modulus_ != y.modulus_) {
      const unsigned m = std::lcm(x.modulus_, y.modulus_);
      return x.promote(m).coeffs_ == y.promote(m).coeffs_;
    }
    return x.coeffs_ == y.coeffs_;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeffs_[i].get_str() + ")";
      if (i > 0) s += "*z" + std::to_string(modulus_) + "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  static unsigned checkModulus(unsigned n) {
    if (n == 0) throw std::invalid_argument("CyclotomicNumber: modulus must be >= 1");
    return n;
  }

  poly::Poly<Rational> phiRational() const {
    poly::Poly<Rational> p;
    p.reserve(phi_->size());
    for (const auto& c : *phi_) p.emplace_back(c);
    return p;
  }

  /// Reduce a raw polynomial modulo the monic integer polynomial Phi_N.
  void assignReduced(std::vector<Rational> raw) {
    const std::size_t deg = degree();
    const auto& phi = *phi_;
    for (std::size_t i = raw.size(); i-- > deg;) {
      if (raw[i] == 0) continue;
      const Rational f = raw[i];
      const std::size_t shift = i - deg;
      for (std::size_t j = 0; j <= deg; ++j) {
        if (phi[j] != 0) raw[shift + j] -= f * phi[j];
      }
    }
    raw.resize(deg, Rational(0));  // deg >= 1 since Phi_1 = x - 1
    coeffs_ = std::move(raw);
  }

  unsigned modulus_;
  std::shared_ptr<const std::vector<Integer>> phi_;
  std::vector<Rational> coeffs_;
};

inline CyclotomicNumber embedRoot(unsigned modulus, std::int64_t e) {
  return CyclotomicNumber::root(modulus, e);
}

/// The integer value of a rational algebraic integer.
inline Integer toRationalInteger(const CyclotomicNumber& x) {
  const Rational q = x.toRational();
  if (q.get_den() != 1) throw NonIntegral("rational " + q.get_str() + " is not an integer");
  return q.get_num();
}

/// Power series c_0 + c_1 s + ... + c_{D-1} s^{D-1} + O(s^D) with
/// coefficients in Q(zeta_N).
class Jet {
 public:
  static constexpr unsigned kDefaultOrder = 8;

  explicit Jet(unsigned modulus, unsigned order = kDefaultOrder)
      : order_(order), coeffs_(order, CyclotomicNumber(modulus)) {
    if (order == 0) throw std::invalid_argument("Jet: truncation order must be positive");
  }

  unsigned order() const noexcept { return order_; }
  unsigned modulus() const noexcept { return coeffs_.front().modulus(); }
  const CyclotomicNumber& coefficient(unsigned i) const { return coeffs_.at(i); }
  CyclotomicNumber& coefficient(unsigned i) { return coeffs_.at(i); }

  /// Index of the first nonzero coefficient, or nullopt if zero to this order.
  std::optional<unsigned> valuation() const {
    for (unsigned i = 0; i < order_; ++i) {
      if (!coeffs_[i].isZero()) return i;
    }
    return std::nullopt;
  }

  Jet& operator+=(const Jet& o) {
    checkOrder(o);
    for (unsigned i = 0; i < order_; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  friend Jet operator+(Jet x, const Jet& y) { return x += y; }

  friend Jet operator*(const Jet& x, const Jet& y) {
    x.checkOrder(y);
    Jet out(std::lcm(x.modulus(), y.modulus()), x.order_);
    for (unsigned i = 0; i < x.order_; ++i) {
      if (x.coeffs_[i].isZero()) continue;
      for (unsigned j = 0; i + j < x.order_; ++j) {
        out.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return out;
  }

 private:
  void checkOrder(const Jet& o) const {
    if (o.order_ != order_) throw std::invalid_argument("Jet: truncation orders differ");
  }

  unsigned order_;
  std::vector<CyclotomicNumber> coeffs_;
};

/// lim_{s -> 0} num(s) / den(s) for jets whose leading behaviour is known.
inline CyclotomicNumber jetRatioLimit(const Jet& num, const Jet& den) {
  if (num.order() != den.order()) throw std::invalid_argument("jetRatioLimit: orders differ");
  const auto v = den.valuation();
  if (!v) {
    throw TruncationTooShort("denominator vanishes to order " + std::to_string(den.order()));
  }
  for (unsigned i = 0; i < *v; ++i) {
    if (!num.coefficient(i).isZero()) {
      throw OrderMismatch("numerator has valuation " + std::to_string(i) +
                          " below denominator valuation " + std::to_string(*v));
    }
  }
  return num.coefficient(*v) / den.coefficient(*v);
}

}  // namespace g2count
