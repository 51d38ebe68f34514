#pragma once
/**
 * @file counts.hpp
 * @brief Number of level-1 quaternionic automorphic representations of
 * weight k on G2:
 *
 *   |Q_k(1)| = dim V_{(k-2) beta}^{G2^c(Z)} + correction(k),   k > 2.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "g2count/endoscopy.hpp"
#include "g2count/errors.hpp"
#include "g2count/gammaclasses.hpp"
#include "g2count/modforms.hpp"
#include "g2count/rootlattice.hpp"

namespace g2count {

/// Which side of the Jacquet-Langlands-style dictionary the H-term is on:
/// for even k the pairs of eigenforms add to the G2^c-lifts, for odd k they
/// are removed from them.
enum class JLKind { EvenAddition, OddSubtraction };

inline const char* toString(JLKind kind) {
  return kind == JLKind::EvenAddition ? "EvenAddition" : "OddSubtraction";
}

struct CountReport {
  std::int64_t k = 0;
  std::int64_t g2cTerm = 0;
  std::int64_t correction = 0;
  std::int64_t total = 0;
  JLKind jlNote = JLKind::EvenAddition;
  /// Number of pairs of level-1 eigenforms contributing: |S_{3k}| |S_k| for
  /// even k, |S_{3k-1}| |S_{k+1}| for odd k.
  std::int64_t jlPairs = 0;

  bool operator==(const CountReport&) const = default;
};

inline void requireWeightAboveTwo(std::int64_t k) {
  if (k <= 2) {
    throw std::invalid_argument("weight k = " + std::to_string(k) +
                                " is not supported: the count requires k > 2");
  }
}

inline CountReport countQuaternionic(std::int64_t k, const std::vector<ConjClassRecord>& classes) {
  requireWeightAboveTwo(k);
  CountReport r;
  r.k = k;
  const Integer g2c = invariantDim((k - 2) * roots::beta, classes);
  if (!g2c.fits_slong_p()) throw std::overflow_error("invariant dimension exceeds 64 bits");
  r.g2cTerm = g2c.get_si();
  r.correction = correction(k);
  r.total = r.g2cTerm + r.correction;
  if (k % 2 == 0) {
    r.jlNote = JLKind::EvenAddition;
    r.jlPairs = dimCuspForms(3 * k) * dimCuspForms(k);
  } else {
    r.jlNote = JLKind::OddSubtraction;
    r.jlPairs = dimCuspForms(3 * k - 1) * dimCuspForms(k + 1);
  }
  if (r.total < 0) {
    throw Error("negative count " + std::to_string(r.total) + " at k = " + std::to_string(k));
  }
  return r;
}

inline unsigned defaultJobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// One report per k in [kFrom, kTo], ordered by k regardless of scheduling.
inline std::vector<CountReport> countRange(std::int64_t kFrom, std::int64_t kTo,
                                           const std::vector<ConjClassRecord>& classes,
                                           unsigned jobs = defaultJobs()) {
  requireWeightAboveTwo(kFrom);
  if (kTo < kFrom) throw std::invalid_argument("countRange: empty range");
  const std::size_t n = static_cast<std::size_t>(kTo - kFrom + 1);
  std::vector<std::optional<CountReport>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = countQuaternionic(kFrom + static_cast<std::int64_t>(i), classes);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CountReport> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(*slots[i]);
  }
  return out;
}

// ---- fixture -------------------------------------------------------------

/// Expected totals keyed by k, as stored in the fixture file {"3": 0, ...}.
using Fixture = std::map<std::int64_t, std::int64_t>;

inline Fixture parseFixture(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FixtureMalformed(e.what());
  }
  if (!j.is_object()) throw FixtureMalformed("expected a JSON object");
  if (j.empty()) throw FixtureMalformed("fixture is empty");
  Fixture f;
  for (const auto& [key, value] : j.items()) {
    std::int64_t k = 0;
    std::size_t used = 0;
    try {
      k = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw FixtureMalformed("key '" + key + "' is not an integer");
    if (!value.is_number_integer()) throw FixtureMalformed("value for k = " + key + " is not an integer");
    f[k] = value.get<std::int64_t>();
  }
  return f;
}

inline Fixture readFixture(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureMissing("fixture " + path + " not found");
  std::stringstream buf;
  buf << in.rdbuf();
  return parseFixture(buf.str());
}

struct FixtureMismatch {
  std::int64_t k;
  std::int64_t expected;
  std::int64_t actual;
};

struct FixtureResult {
  bool pass = true;
  std::vector<FixtureMismatch> mismatches;
};

inline FixtureResult compareFixture(const Fixture& expected, const std::vector<CountReport>& reports) {
  FixtureResult r;
  std::map<std::int64_t, std::int64_t> actual;
  for (const auto& rep : reports) actual[rep.k] = rep.total;
  for (const auto& [k, want] : expected) {
    const auto it = actual.find(k);
    if (it == actual.end()) throw std::invalid_argument("no computed count for k = " + std::to_string(k));
    if (it->second != want) r.mismatches.push_back({k, want, it->second});
  }
  r.pass = r.mismatches.empty();
  return r;
}

/// Recompute every k in the fixture and compare element-wise.
inline FixtureResult verifyFixture(const std::string& path,
                                   const std::vector<ConjClassRecord>& classes,
                                   unsigned jobs = defaultJobs()) {
  const Fixture f = readFixture(path);
  const auto reports = countRange(f.begin()->first, f.rbegin()->first, classes, jobs);
  return compareFixture(f, reports);
}

inline std::string describe(const FixtureResult& r) {
  if (r.pass) return "fixture matches\n";
  std::ostringstream os;
  for (const auto& m : r.mismatches) {
    os << "k=" << m.k << ": expected " << m.expected << ", computed " << m.actual << "\n";
  }
  return os.str();
}

// ---- output formats ------------------------------------------------------

/// Columns of ten (k, |Q_k(1)|) rows side by side, like a printed table.
inline std::string formatTable(const std::vector<CountReport>& reports) {
  constexpr std::size_t kRows = 10;
  const std::size_t cols = (reports.size() + kRows - 1) / kRows;
  std::ostringstream os;
  for (std::size_t c = 0; c < cols; ++c) {
    if (c) os << " || ";
    os << std::setw(4) << "k" << " " << std::setw(8) << "|Q_k(1)|";
  }
  os << "\n";
  for (std::size_t row = 0; row < std::min(kRows, reports.size()); ++row) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t i = c * kRows + row;
      if (i >= reports.size()) break;
      if (c) os << " || ";
      os << std::setw(4) << reports[i].k << " " << std::setw(8) << reports[i].total;
    }
    os << "\n";
  }
  return os.str();
}

inline std::string formatCsv(const std::vector<CountReport>& reports) {
  std::ostringstream os;
  os << "k,g2c_term,correction,total,jl_pairs\n";
  for (const auto& r : reports) {
    os << r.k << "," << r.g2cTerm << "," << r.correction << "," << r.total << "," << r.jlPairs
       << "\n";
  }
  return os.str();
}

inline std::string formatJson(const std::vector<CountReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["g2cTerm"] = r.g2cTerm;
    j["correction"] = r.correction;
    j["total"] = r.total;
    j["jlNote"] = toString(r.jlNote);
    j["jlPairs"] = r.jlPairs;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace g2count
