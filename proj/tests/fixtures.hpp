#pragma once

#include <string>
#include <vector>

#include "g2count/gammaclasses.hpp"

namespace fixtures {

inline std::string dataPath(const std::string& name) { return std::string(G2COUNT_DATA_DIR) + "/" + name; }

inline const std::vector<g2count::ConjClassRecord>& classes() {
  static const auto c = g2count::readClassFile(dataPath("g2c_classes.json"));
  return c;
}

inline const g2count::AutGroup& group() {
  static const auto g = g2count::enumerateAutGroup();
  return g;
}

inline const g2count::Classification& classification() {
  static const auto c = g2count::classify(group());
  return c;
}

}  // namespace fixtures
