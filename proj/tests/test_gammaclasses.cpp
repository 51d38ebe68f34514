#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "fixtures.hpp"
#include "g2count/gammaclasses.hpp"
#include "oracles.hpp"

using namespace g2count;

TEST(AutGroup, HasOrder12096) {
  const auto& g = fixtures::group();
  EXPECT_EQ(g.size(), 12096u);
  EXPECT_EQ(g.elements[g.identity], Automorphism());
  EXPECT_TRUE(std::is_sorted(g.elements.begin(), g.elements.end()));
  EXPECT_GE(g.generators.size(), 2u);
}

TEST(AutGroup, ElementsAreAutomorphismsOfTheOrder) {
  const auto& g = fixtures::group();
  const auto& units = enumerateUnits();
  std::set<IntegralOctonion> unitSet(units.begin(), units.end());
  for (std::size_t i = 0; i < g.size(); i += 37) {
    const auto& a = g.elements[i];
    EXPECT_TRUE(a.isMultiplicative());
    for (const auto& u : units) EXPECT_TRUE(unitSet.count(a(u)));
  }
}

TEST(AutGroup, GroupAxiomsOnSamples) {
  const auto& g = fixtures::group();
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g.size()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int x = pick(rng), y = pick(rng), z = pick(rng);
    const int xy = g.multiply(x, y);
    EXPECT_EQ(g.elements[xy], g.elements[x].compose(g.elements[y]));
    EXPECT_EQ(g.multiply(xy, z), g.multiply(x, g.multiply(y, z)));
    EXPECT_EQ(g.multiply(x, g.inverse(x)), g.identity);
    EXPECT_EQ(g.elements[g.inverse(x)], g.elements[x].inverse());
    EXPECT_EQ(12096 % g.order(x), 0u);
  }
}

TEST(AutGroup, ClassesPartitionTheGroup) {
  const auto& cls = fixtures::classification();
  EXPECT_EQ(cls.classes.size(), 16u);
  EXPECT_EQ(totalSize(cls.classes), 12096);
  std::vector<std::int64_t> counted(cls.classes.size(), 0);
  for (int id : cls.classOf) ++counted[id];
  for (std::size_t i = 0; i < cls.classes.size(); ++i) {
    EXPECT_EQ(counted[i], cls.classes[i].size);
    EXPECT_EQ(12096 % cls.classes[i].size, 0);
    EXPECT_EQ(cls.classes[i].classId, static_cast<int>(i));
  }
  EXPECT_TRUE(std::is_sorted(cls.classes.begin(), cls.classes.end(), canonicalLess));
}

TEST(AutGroup, ClassesAreConjugationInvariant) {
  const auto& g = fixtures::group();
  const auto& cls = fixtures::classification();
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g.size()) - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const int x = pick(rng), h = pick(rng);
    const int conj = g.multiply(g.multiply(h, x), g.inverse(h));
    EXPECT_EQ(cls.classOf[conj], cls.classOf[x]);
    EXPECT_EQ(charpoly7(g.elements[conj]), charpoly7(g.elements[x]));
  }
}

TEST(AutGroup, PowerMapIsConsistentWithTori) {
  const auto& g = fixtures::group();
  const auto& cls = fixtures::classification();
  for (std::size_t i = 0; i < cls.classes.size(); ++i) {
    const int rep = cls.representatives[i];
    for (std::int64_t k = 1; k <= 12; ++k) {
      const auto& target = cls.classes[cls.classOf[g.power(rep, k)]];
      EXPECT_TRUE(sameG2Class(cls.classes[i].torus.power(k), target.torus));
    }
  }
}

TEST(AutGroup, EveryClassPassesTheTraceCheck) {
  const auto& g = fixtures::group();
  const auto& cls = fixtures::classification();
  for (std::size_t i = 0; i < cls.classes.size(); ++i) {
    const auto& c = cls.classes[i];
    EXPECT_EQ(c.order, c.torus.order());
    EXPECT_TRUE(charpolyMatches(c.torus, c.charpoly7));
    Rational trace(g.elements[cls.representatives[i]].traceDoubled(), 2);
    trace.canonicalize();
    EXPECT_EQ(charAt(roots::lambda1, c.torus), CyclotomicNumber(1, trace));
  }
  EXPECT_NO_THROW(validateClasses(cls.classes));
}

TEST(AutGroup, DatafileMatchesDerivation) {
  EXPECT_EQ(fixtures::classification().classes, fixtures::classes());
  EXPECT_EQ(classesToJson(fixtures::classification().classes), classesToJson(fixtures::classes()));
  std::ifstream in(fixtures::dataPath("g2c_classes.json"), std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), classesToJson(fixtures::classes()));
}

TEST(AutGroup, JsonRoundTrip) {
  const auto& classes = fixtures::classes();
  EXPECT_EQ(classesFromJson(classesToJson(classes)), classes);
  const auto path = std::filesystem::temp_directory_path() / "g2count_classes_roundtrip.json";
  writeClassFile(path.string(), classes);
  EXPECT_EQ(readClassFile(path.string()), classes);
  std::filesystem::remove(path);
}

TEST(AutGroup, BadDatafilesAreRejected) {
  EXPECT_THROW(readClassFile("/nonexistent/g2c_classes.json"), FixtureMissing);
  EXPECT_THROW(classesFromJson("{"), FixtureMalformed);
  EXPECT_THROW(classesFromJson("[]"), FixtureMalformed);
  EXPECT_THROW(classesFromJson(R"([{"order":1}])"), FixtureMalformed);
  auto classes = fixtures::classes();
  classes[1].size += 1;
  EXPECT_THROW(validateClasses(classes), GroupSizeUnexpected);
  classes = fixtures::classes();
  classes[3].torus = TorusElement(3, 0, 2);
  EXPECT_THROW(validateClasses(classes), TorusRecoveryFailed);
}

TEST(AutGroup, TorusRecovery) {
  const auto& cls = fixtures::classes();
  for (const auto& c : cls) EXPECT_EQ(recoverTorus(c.order, c.charpoly7), c.torus);
  EXPECT_THROW(recoverTorus(5, cls[10].charpoly7), TorusRecoveryFailed);  // order-7 eigenvalues
}

TEST(InvariantDim, Examples) {
  const auto& cls = fixtures::classes();
  EXPECT_EQ(invariantDim(Weight(0, 0), cls), 1);
  EXPECT_EQ(invariantDim(roots::beta, cls), 0);
  EXPECT_EQ(invariantDim(4 * roots::beta, cls), 1);
  EXPECT_EQ(invariantDim(roots::lambda1, cls), 0);
  EXPECT_THROW(invariantDim(roots::alpha1, cls), std::invalid_argument);
}

TEST(InvariantDim, MatchesMolienSeriesOnSymmetricPowers) {
  // Sym^n V7 = sum_j V_{(n - 2j) lambda1}
  constexpr int kMax = 8;
  const auto molien = oracle::symmetricPowerInvariants(fixtures::group(), kMax);
  for (int n = 0; n <= kMax; ++n) {
    Integer sum = 0;
    for (int m = n; m >= 0; m -= 2) sum += invariantDim(m * roots::lambda1, fixtures::classes());
    EXPECT_EQ(molien[n], Rational(sum)) << n;
  }
}

TEST(InvariantDim, BurnsideOnTheSevenDimensionalRepresentation) {
  // average trace = number of invariants = 0; average trace^2 = 1 (V7 is real irreducible)
  const auto& g = fixtures::group();
  Rational t1 = 0, t2 = 0;
  for (const auto& a : g.elements) {
    Rational tr(a.traceDoubled(), 2);
    tr.canonicalize();
    t1 += tr;
    t2 += tr * tr;
  }
  EXPECT_EQ(t1, 0);
  EXPECT_EQ(t2 / 12096, 1);
}

TEST(InvariantDim, NonNegativeOnRandomWeights) {
  std::mt19937 rng(100);
  std::uniform_int_distribution<std::int64_t> coord(0, 12);
  for (int i = 0; i < 100; ++i) {
    const Weight l = fromFundamentalCoords(coord(rng), coord(rng));
    EXPECT_GE(invariantDim(l, fixtures::classes()), 0) << l.str();
  }
}
