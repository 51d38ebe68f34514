#pragma once
/**
 * @file gammaclasses.hpp
 * @brief The finite group G2^c(Z) realized as the automorphism group of the
 * Coxeter order, its conjugacy classes with torus parameters, and invariant
 * dimensions dim V_lambda^{G2^c(Z)} by character averaging.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <tuple>
#include <nlohmann/json.hpp>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "g2count/cyclotomic.hpp"
#include "g2count/errors.hpp"
#include "g2count/octonion.hpp"
#include "g2count/rootlattice.hpp"
#include "g2count/weylchar.hpp"

namespace g2count {

inline constexpr std::int64_t kExpectedGroupOrder = 12096;

/// Algebra automorphism of the octonions preserving the Coxeter order,
/// restricted to the trace-zero part (it fixes 1). Column j of the doubled
/// 7x7 matrix is 2 * phi(e_{j+1}).
class Automorphism {
 public:
  using Matrix = std::array<std::int64_t, 49>;

  Automorphism() {
    for (int i = 0; i < 7; ++i) m_[i * 7 + i] = 2;
  }
  explicit Automorphism(const Matrix& doubled) : m_(doubled) {}

  const Matrix& doubled() const noexcept { return m_; }
  std::int64_t at(int row, int col) const { return m_[row * 7 + col]; }

  IntegralOctonion operator()(const IntegralOctonion& x) const {
    IntegralOctonion::Coords c{};
    c[0] = x.twice()[0];
    for (int r = 0; r < 7; ++r) {
      std::int64_t s = 0;
      for (int k = 0; k < 7; ++k) s += m_[r * 7 + k] * x.twice()[k + 1];
      c[r + 1] = s / 2;
    }
    return IntegralOctonion(c);
  }

  /// (*this) after other.
  Automorphism compose(const Automorphism& other) const {
    Matrix r{};
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < 7; ++k) s += m_[i * 7 + k] * other.m_[k * 7 + j];
        r[i * 7 + j] = s / 2;
      }
    }
    return Automorphism(r);
  }

  /// Automorphisms are orthogonal, so the inverse is the transpose.
  Automorphism inverse() const {
    Matrix r{};
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) r[i * 7 + j] = m_[j * 7 + i];
    }
    return Automorphism(r);
  }

  /// Twice the trace on the trace-zero part.
  std::int64_t traceDoubled() const {
    std::int64_t t = 0;
    for (int i = 0; i < 7; ++i) t += m_[i * 7 + i];
    return t;
  }

  /// Checks phi(e_i e_j) = phi(e_i) phi(e_j) on all basis pairs.
  bool isMultiplicative() const {
    auto image = [&](int idx) {
      if (idx == 0) return IntegralOctonion::basis(0);
      IntegralOctonion::Coords c{};
      for (int r = 0; r < 7; ++r) c[r + 1] = m_[r * 7 + (idx - 1)];
      return IntegralOctonion(c);
    };
    for (int i = 1; i < 8; ++i) {
      for (int j = 1; j < 8; ++j) {
        const auto [s, k] = basisProduct(i, j);
        IntegralOctonion lhs = image(k);
        if (s < 0) lhs = -lhs;
        if (lhs != image(i) * image(j)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;

 private:
  Matrix m_{};
};

/// Characteristic polynomial of a doubled 7x7 matrix divided by two,
/// monic, highest degree first (8 coefficients).
inline std::array<std::int64_t, 8> charpoly7(const Automorphism& g) {
  // Faddeev-LeVerrier over Q.
  std::array<Rational, 49> a;
  for (int i = 0; i < 49; ++i) {
    a[i] = Rational(g.doubled()[i], 2);
    a[i].canonicalize();
  }
  std::array<Rational, 49> mk{};  // M_0 = 0
  std::array<Rational, 8> coeff;  // coeff[j] multiplies x^j
  coeff[7] = 1;
  for (int k = 1; k <= 7; ++k) {
    std::array<Rational, 49> next{};
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        Rational s = 0;
        for (int l = 0; l < 7; ++l) s += a[i * 7 + l] * mk[l * 7 + j];
        next[i * 7 + j] = s;
      }
      next[i * 7 + i] += coeff[8 - k];
    }
    mk = next;
    Rational tr = 0;
    for (int i = 0; i < 7; ++i) {
      for (int l = 0; l < 7; ++l) tr += a[i * 7 + l] * mk[l * 7 + i];
    }
    coeff[7 - k] = -tr / k;
  }
  std::array<std::int64_t, 8> out{};
  for (int j = 0; j < 8; ++j) {
    if (coeff[j].get_den() != 1 || !coeff[j].get_num().fits_slong_p()) {
      throw BadOrderData("characteristic polynomial is not integral");
    }
    out[7 - j] = coeff[j].get_num().get_si();
  }
  return out;
}

/// Exponents e (mod 2N) of the eigenvalues zeta_{2N}^e of t on the
/// 7-dimensional representation: the zero weight and the six short roots.
inline std::array<std::int64_t, 7> eigenExponents7(const TorusElement& t) {
  std::array<std::int64_t, 7> e{};
  e[0] = 0;
  int n = 1;
  for (const auto& r : roots::shortPositive) {
    e[n++] = t.exponent(r);
    e[n++] = t.exponent(-r);
  }
  return e;
}

/// prod (x - mu(t)) over the weights of the 7-dimensional representation,
/// highest degree first.
inline std::vector<CyclotomicNumber> torusCharpoly7(const TorusElement& t) {
  const unsigned m = 2 * t.N();
  std::vector<CyclotomicNumber> p{CyclotomicNumber(m, 1)};  // lowest degree first
  for (const auto e : eigenExponents7(t)) {
    const CyclotomicNumber root = -embedRoot(m, e);
    std::vector<CyclotomicNumber> q(p.size() + 1, CyclotomicNumber(m));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] += p[i] * root;
    }
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

inline bool charpolyMatches(const TorusElement& t, const std::array<std::int64_t, 8>& cp) {
  const auto p = torusCharpoly7(t);
  for (int i = 0; i < 8; ++i) {
    if (!(p[i] == CyclotomicNumber(p[i].modulus(), cp[i]))) return false;
  }
  return true;
}

/// The full group together with its permutation action on the 126
/// trace-zero units, used for fast multiplication and lookup.
struct AutGroup {
  std::vector<Automorphism> elements;  // sorted; identity included
  std::vector<std::string> perms;      // perms[g][i] = index of g(unit_i)
  std::unordered_map<std::string, int> indexOfPerm;
  std::vector<int> generators;
  int identity = 0;

  std::size_t size() const noexcept { return elements.size(); }

  int multiply(int g, int h) const {
    std::string p(perms[h].size(), '\0');
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = perms[g][static_cast<unsigned char>(perms[h][i])];
    }
    return indexOfPerm.at(p);
  }

  int inverse(int g) const {
    std::string p(perms[g].size(), '\0');
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[static_cast<unsigned char>(perms[g][i])] = static_cast<char>(i);
    }
    return indexOfPerm.at(p);
  }

  int power(int g, std::int64_t k) const {
    int r = identity;
    for (std::int64_t i = 0; i < k; ++i) r = multiply(r, g);
    return r;
  }

  unsigned order(int g) const {
    unsigned n = 1;
    for (int x = g; x != identity; x = multiply(x, g)) ++n;
    return n;
  }
};

inline const std::vector<IntegralOctonion>& imaginaryUnits() {
  static const std::vector<IntegralOctonion> units = [] {
    std::vector<IntegralOctonion> out;
    for (const auto& u : enumerateUnits()) {
      if (u.isImaginary()) out.push_back(u);
    }
    return out;
  }();
  return units;
}

namespace detail {

inline std::optional<std::string> permutationOnImaginaryUnits(const Automorphism& g) {
  const auto& units = imaginaryUnits();
  std::string p(units.size(), '\0');
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto it = std::lower_bound(units.begin(), units.end(), g(units[i]));
    if (it == units.end() || *it != g(units[i])) return std::nullopt;
    p[i] = static_cast<char>(it - units.begin());
  }
  return p;
}

inline std::unordered_set<int> closure(const AutGroup& g, const std::vector<int>& gens) {
  std::unordered_set<int> seen{g.identity};
  std::vector<int> frontier{g.identity};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int s : gens) {
        const int y = g.multiply(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace detail

/// All automorphisms of the Coxeter order.
///
/// Because e1, e2, e3 generate the octonions and e4 = e1 e2, e5 = e2 e3,
/// e6 = e3 e4, e7 = e4 e5, an automorphism is fixed by the images
/// (u1, u2, u3) of (e1, e2, e3). These run over trace-zero units with u2
/// orthogonal to u1 and u3 orthogonal to u1, u2, u1 u2; each candidate is
/// kept if it is multiplicative and permutes the 240 units.
inline AutGroup enumerateAutGroup() {
  const auto& imag = imaginaryUnits();
  AutGroup group;
  for (const auto& u1 : imag) {
    for (const auto& u2 : imag) {
      if (u1.dot4(u2) != 0) continue;
      const IntegralOctonion u4 = u1 * u2;
      for (const auto& u3 : imag) {
        if (u3.dot4(u1) != 0 || u3.dot4(u2) != 0 || u3.dot4(u4) != 0) continue;
        const IntegralOctonion u5 = u2 * u3;
        const IntegralOctonion u6 = u3 * u4;
        const IntegralOctonion u7 = u4 * u5;
        const std::array<IntegralOctonion, 7> images{u1, u2, u3, u4, u5, u6, u7};
        Automorphism::Matrix m{};
        for (int j = 0; j < 7; ++j) {
          for (int r = 0; r < 7; ++r) m[r * 7 + j] = images[j].twice()[r + 1];
        }
        Automorphism phi(m);
        if (!phi.isMultiplicative()) continue;
        if (!detail::permutationOnImaginaryUnits(phi)) continue;
        bool preservesOrder = true;
        for (const auto& u : enumerateUnits()) {
          if (!std::binary_search(enumerateUnits().begin(), enumerateUnits().end(), phi(u))) {
            preservesOrder = false;
            break;
          }
        }
        if (preservesOrder) group.elements.push_back(phi);
      }
    }
  }
  if (static_cast<std::int64_t>(group.elements.size()) != kExpectedGroupOrder) {
    throw GroupSizeUnexpected("found " + std::to_string(group.elements.size()) +
                              " automorphisms, expected " +
                              std::to_string(kExpectedGroupOrder));
  }
  std::sort(group.elements.begin(), group.elements.end());
  group.perms.reserve(group.elements.size());
  for (std::size_t i = 0; i < group.elements.size(); ++i) {
    group.perms.push_back(*detail::permutationOnImaginaryUnits(group.elements[i]));
    if (!group.indexOfPerm.emplace(group.perms.back(), static_cast<int>(i)).second) {
      throw GroupSizeUnexpected("two automorphisms act identically on the units");
    }
  }
  group.identity = static_cast<int>(
      std::find(group.elements.begin(), group.elements.end(), Automorphism{}) -
      group.elements.begin());
  if (group.identity == static_cast<int>(group.size())) {
    throw GroupSizeUnexpected("identity not found");
  }

  // Greedy generating set in element order.
  std::unordered_set<int> span{group.identity};
  for (int g = 0; g < static_cast<int>(group.size()) &&
                  static_cast<std::int64_t>(span.size()) < kExpectedGroupOrder;
       ++g) {
    if (span.count(g)) continue;
    group.generators.push_back(g);
    span = detail::closure(group, group.generators);
  }
  return group;
}

/// One conjugacy class of G2^c(Z).
struct ConjClassRecord {
  int classId = 0;
  std::int64_t size = 0;
  unsigned order = 1;
  TorusElement torus;
  std::array<std::int64_t, 8> charpoly7{};  // monic, highest degree first

  bool operator==(const ConjClassRecord&) const = default;
};

struct Classification {
  std::vector<ConjClassRecord> classes;  // canonical order, classId = position
  std::vector<int> representatives;      // group index of a representative per class
  std::vector<int> classOf;              // class id of every group element
};

/// Canonical sort key: order, size, characteristic polynomial, torus.
inline bool canonicalLess(const ConjClassRecord& x, const ConjClassRecord& y) {
  return std::tuple(x.order, x.size, x.charpoly7, x.torus.N(), x.torus.c(), x.torus.d()) <
         std::tuple(y.order, y.size, y.charpoly7, y.torus.N(), y.torus.c(), y.torus.d());
}

/// Torus parameter (W-canonical) whose 7-dimensional eigenvalues match the
/// characteristic polynomial of an element of order n.
inline TorusElement recoverTorus(unsigned n, const std::array<std::int64_t, 8>& cp) {
  for (std::int64_t c = 0; c < n; ++c) {
    for (std::int64_t d = 0; d < 2 * static_cast<std::int64_t>(n); ++d) {
      if ((c + d) % 2 != 0) continue;
      const TorusElement t(n, c, d);
      if (charpolyMatches(t, cp)) return canonicalModulo(t, weylGroup());
    }
  }
  throw TorusRecoveryFailed("no torus point of order " + std::to_string(n) +
                            " has the given eigenvalues");
}

/// Partition by explicit conjugation orbits under the generators.
inline Classification classify(const AutGroup& group) {
  const int n = static_cast<int>(group.size());
  std::vector<int> classOf(n, -1);
  std::vector<std::vector<int>> orbits;
  std::vector<int> genInverse;
  for (int s : group.generators) genInverse.push_back(group.inverse(s));
  for (int g = 0; g < n; ++g) {
    if (classOf[g] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{g};
    classOf[g] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t s = 0; s < group.generators.size(); ++s) {
        const int y = group.multiply(group.multiply(group.generators[s], orbit[i]), genInverse[s]);
        if (classOf[y] < 0) {
          classOf[y] = id;
          orbit.push_back(y);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }

  struct Pending {
    ConjClassRecord record;
    int rep;
    int oldId;
  };
  std::vector<Pending> pending;
  for (std::size_t id = 0; id < orbits.size(); ++id) {
    const int rep = orbits[id].front();
    ConjClassRecord r;
    r.size = static_cast<std::int64_t>(orbits[id].size());
    r.order = group.order(rep);
    r.charpoly7 = charpoly7(group.elements[rep]);
    r.torus = recoverTorus(r.order, r.charpoly7);
    Rational trace(group.elements[rep].traceDoubled(), 2);
    trace.canonicalize();
    if (!(charAt(roots::lambda1, r.torus) == CyclotomicNumber(1, trace))) {
      throw TorusRecoveryFailed("trace mismatch for class of order " + std::to_string(r.order));
    }
    pending.push_back({r, rep, static_cast<int>(id)});
  }
  std::sort(pending.begin(), pending.end(),
            [](const Pending& x, const Pending& y) { return canonicalLess(x.record, y.record); });

  Classification out;
  std::vector<int> remap(orbits.size());
  for (std::size_t i = 0; i < pending.size(); ++i) {
    pending[i].record.classId = static_cast<int>(i);
    out.classes.push_back(pending[i].record);
    out.representatives.push_back(pending[i].rep);
    remap[pending[i].oldId] = static_cast<int>(i);
  }
  out.classOf.resize(n);
  for (int g = 0; g < n; ++g) out.classOf[g] = remap[classOf[g]];
  return out;
}

inline std::int64_t totalSize(const std::vector<ConjClassRecord>& classes) {
  std::int64_t s = 0;
  for (const auto& c : classes) s += c.size;
  return s;
}

/// Structural checks on class data: sizes sum to 12096, the torus parameter
/// reproduces the characteristic polynomial, and the trace read from the
/// polynomial equals chi_lambda1 at the torus point.
inline void validateClasses(const std::vector<ConjClassRecord>& classes) {
  if (totalSize(classes) != kExpectedGroupOrder) {
    throw GroupSizeUnexpected("class sizes sum to " + std::to_string(totalSize(classes)));
  }
  for (const auto& c : classes) {
    if (c.charpoly7[0] != 1) throw TorusRecoveryFailed("charpoly7 is not monic");
    if (!charpolyMatches(c.torus, c.charpoly7)) {
      throw TorusRecoveryFailed("torus " + c.torus.str() +
                                " does not reproduce the characteristic polynomial");
    }
    if (!(charAt(roots::lambda1, c.torus) == CyclotomicNumber(1, -c.charpoly7[1]))) {
      throw TorusRecoveryFailed("trace mismatch at torus " + c.torus.str());
    }
  }
}

/// Derive the class table from scratch: enumerate, classify, validate.
inline std::vector<ConjClassRecord> deriveClassTable() {
  auto classes = classify(enumerateAutGroup()).classes;
  validateClasses(classes);
  return classes;
}

// Class datafile: JSON array of
//   {"order": int, "size": int, "torus": {"N": int, "c": int, "d": int},
//    "charpoly7": [8 ints, monic, highest degree first]}
// in canonical order.

inline std::string classesToJson(const std::vector<ConjClassRecord>& classes) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    nlohmann::ordered_json j;
    j["order"] = c.order;
    j["size"] = c.size;
    j["torus"] = {{"N", c.torus.N()}, {"c", c.torus.c()}, {"d", c.torus.d()}};
    j["charpoly7"] = c.charpoly7;
    os << "  " << j.dump() << (i + 1 < classes.size() ? ",\n" : "\n");
  }
  os << "]\n";
  return os.str();
}

inline std::vector<ConjClassRecord> classesFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FixtureMalformed(std::string("class datafile: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw FixtureMalformed("class datafile: expected non-empty array");
  std::vector<ConjClassRecord> out;
  try {
    for (const auto& rec : j) {
      ConjClassRecord c;
      c.classId = static_cast<int>(out.size());
      c.order = rec.at("order").get<unsigned>();
      c.size = rec.at("size").get<std::int64_t>();
      const auto& t = rec.at("torus");
      c.torus = TorusElement(t.at("N").get<unsigned>(), t.at("c").get<std::int64_t>(),
                             t.at("d").get<std::int64_t>());
      const auto cp = rec.at("charpoly7").get<std::vector<std::int64_t>>();
      if (cp.size() != 8) throw FixtureMalformed("charpoly7 must have 8 coefficients");
      std::copy(cp.begin(), cp.end(), c.charpoly7.begin());
      out.push_back(c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw FixtureMalformed(std::string("class datafile: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FixtureMalformed(std::string("class datafile: ") + e.what());
  }
  return out;
}

inline void writeClassFile(const std::string& path, const std::vector<ConjClassRecord>& classes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << classesToJson(classes);
}

inline std::vector<ConjClassRecord> readClassFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureMissing("class datafile " + path + " not found");
  std::stringstream buf;
  buf << in.rdbuf();
  auto classes = classesFromJson(buf.str());
  validateClasses(classes);
  return classes;
}

/// dim V_lambda^Gamma = (1/|Gamma|) sum_classes size * chi_lambda(torus).
inline Integer invariantDim(const Weight& lambda, const std::vector<ConjClassRecord>& classes) {
  if (!isDominantG2(lambda)) {
    throw std::invalid_argument("invariantDim: weight " + lambda.str() + " is not dominant");
  }
  unsigned modulus = 1;
  for (const auto& c : classes) modulus = std::lcm(modulus, 2 * c.torus.N());
  CyclotomicNumber sum(modulus);
  for (const auto& c : classes) {
    sum += (charAt(lambda, c.torus) * Rational(c.size)).promote(modulus);
  }
  sum *= Rational(1, totalSize(classes));
  const Integer dim = toRationalInteger(sum);
  if (dim < 0) throw NonIntegral("negative invariant dimension " + dim.get_str());
  return dim;
}

}  // namespace g2count
