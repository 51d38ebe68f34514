#pragma once
/**
 * @file selftest.hpp
 * @brief Invariant checks across all modules, run by `g2count selftest`.
 */

#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "g2count/counts.hpp"
#include "g2count/cyclotomic.hpp"
#include "g2count/endoscopy.hpp"
#include "g2count/gammaclasses.hpp"
#include "g2count/modforms.hpp"
#include "g2count/rootlattice.hpp"
#include "g2count/weylchar.hpp"

namespace g2count {

struct SelfTestCheck {
  std::string name;
  std::function<void(std::vector<std::string>&)> run;  // appends failures
};

namespace selftest_detail {

inline void expect(bool ok, std::vector<std::string>& failures, const std::string& what) {
  if (!ok) failures.push_back(what);
}

inline std::vector<Weight> dominantSweep(std::int64_t maxCoord) {
  std::vector<Weight> out;
  for (std::int64_t m = 0; m <= maxCoord; ++m) {
    for (std::int64_t n = 0; n <= maxCoord; ++n) out.push_back(fromFundamentalCoords(m, n));
  }
  return out;
}

}  // namespace selftest_detail

inline std::vector<SelfTestCheck> selfTestChecks(const std::vector<ConjClassRecord>& classes) {
  using selftest_detail::expect;
  std::vector<SelfTestCheck> checks;

  checks.push_back({"rootlattice: Weyl group", [](auto& f) {
    const auto& w = weylGroup();
    expect(w.size() == 12, f, "order != 12");
    for (const auto& x : w) {
      for (const auto& y : w) {
        const auto& xy = canonicalElement(x.compose(y));
        expect(xy.sign() == x.sign() * y.sign(), f, "sign not multiplicative");
      }
    }
  }});

  checks.push_back({"rootlattice: pairings and rho", [](auto& f) {
    for (const auto& r : roots::positive) expect(pairing(r, coroot(r)) == 2, f, "<a, a^v> != 2");
    expect(pairing(roots::eps1x2, roots::alpha1Co) == -1, f, "(a1^v, 2e1)");
    expect(pairing(roots::eps2x2, roots::alpha1Co) == 3, f, "(a1^v, 2e2)");
    expect(pairing(roots::eps1x2, roots::alpha2Co) == 1, f, "(a2^v, 2e1)");
    expect(pairing(roots::eps2x2, roots::alpha2Co) == -1, f, "(a2^v, 2e2)");
    expect(rhoG() == Weight(4, 2), f, "rho_G != 4e1 + 2e2");
  }});

  checks.push_back({"rootlattice: minimal K-type and transfer weights", [](auto& f) {
    for (std::int64_t k = 2; k <= 100; ++k) {
      expect(minimalKType(k) == Weight(0, 2 * k), f, "minimal K-type at k=" + std::to_string(k));
    }
    for (std::int64_t k = 3; k <= 200; ++k) {
      expect(transferWeights(k) == transferWeightsClosedForm(k), f,
             "transfer weights at k=" + std::to_string(k));
    }
  }});

  checks.push_back({"cyclotomic: field axioms", [](auto& f) {
    std::mt19937 rng(12096);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (unsigned n : {3u, 8u, 12u, 24u}) {
      auto random = [&] {
        std::vector<Rational> c(eulerPhi(n));
        for (auto& q : c) q = Rational(coef(rng));
        return CyclotomicNumber::fromPolynomial(n, c);
      };
      for (int trial = 0; trial < 10; ++trial) {
        const auto x = random(), y = random(), z = random();
        expect((x * y) * z == x * (y * z), f, "associativity");
        expect(x * (y + z) == x * y + x * z, f, "distributivity");
        if (!x.isZero()) expect(x * x.inverse() == CyclotomicNumber(n, 1), f, "inverse");
      }
    }
  }});

  checks.push_back({"weylchar: character at identity is the dimension", [](auto& f) {
    for (const auto& l : selftest_detail::dominantSweep(6)) {
      expect(charAt(l, TorusElement::identity()) == CyclotomicNumber(1, Rational(weylDim(l))), f,
             "chi(1) != dim at " + l.str());
    }
  }});

  checks.push_back({"weylchar: Weyl formula agrees with Freudenthal on class tori", [&classes](auto& f) {
    for (const auto& l : selftest_detail::dominantSweep(3)) {
      const auto table = freudenthalMultiplicities(l);
      for (const auto& c : classes) {
        expect(charAt(l, c.torus) == charFromWeights(table, c.torus), f,
               "mismatch at " + l.str() + ", " + c.torus.str());
      }
    }
  }});

  checks.push_back({"gammaclasses: class data", [&classes](auto& f) {
    try {
      validateClasses(classes);
    } catch (const Error& e) {
      f.push_back(e.what());
    }
    expect(invariantDim(Weight(0, 0), classes) == 1, f, "dim of trivial invariants != 1");
    expect(invariantDim(roots::lambda1, classes) == 0, f, "7-dim rep has invariants");
  }});

  checks.push_back({"modforms: classical dimensions", [](auto& f) {
    expect(dimCuspForms(2) == 0 && dimCuspForms(14) == 0 && dimCuspForms(12) == 1 &&
               dimCuspForms(24) == 2 && dimCuspForms(36) == 3,
           f, "cusp form dimensions");
    for (std::int64_t k = 4; k <= 200; k += 2) {
      expect(dimCuspForms(k + 12) == dimCuspForms(k) + 1, f, "periodicity at k=" + std::to_string(k));
    }
  }});

  checks.push_back({"endoscopy: correction table and transfer cancellation", [](auto& f) {
    for (std::int64_t k = 3; k <= 240; ++k) {
      expect(correction(k) == correctionPiecewise(k), f, "correction at k=" + std::to_string(k));
      expect(k % 2 == 0 ? correction(k) >= 0 : correction(k) <= 0, f,
             "sign of correction at k=" + std::to_string(k));
    }
    for (std::int64_t k = 3; k <= 50; ++k) {
      const auto combo = correctionCombination(k);
      expect(combo.size() == 2 && !combo.count(Weight(0, 2 * k - 2)), f,
             "2(k-1) eps2 term survives at k=" + std::to_string(k));
    }
  }});

  checks.push_back({"endoscopy: Satake fibers", [](auto& f) {
    expect(fiber(G2Class(TorusElement::identity())).size() == 1, f, "trivial fiber");
    for (unsigned n = 1; n <= 12; ++n) {
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < 2 * static_cast<std::int64_t>(n); ++d) {
          if ((c + d) % 2) continue;
          const G2Class g(TorusElement(n, c, d));
          const auto fib = fiber(g);
          expect(fib.size() <= 3 && (fib.size() == 3) == g.isRegular(), f,
                 "fiber size at " + g.representative().str());
        }
      }
    }
  }});

  return checks;
}

/// Run every check, print one line per check, return the number of failures.
inline int runSelfTest(const std::vector<ConjClassRecord>& classes, std::ostream& out) {
  int failed = 0;
  for (const auto& check : selfTestChecks(classes)) {
    std::vector<std::string> failures;
    try {
      check.run(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    out << (failures.empty() ? "PASS " : "FAIL ") << check.name << "\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(failures.size(), 5); ++i) {
      out << "     " << failures[i] << "\n";
    }
    if (!failures.empty()) ++failed;
  }
  return failed;
}

}  // namespace g2count
