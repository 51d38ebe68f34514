#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace g2count {

/// Dimension of the space of level-1 cusp forms of weight k (the number of
/// normalized cuspidal eigenforms). Zero for k < 2, k = 2 and odd k.
constexpr std::int64_t dimCuspForms(std::int64_t k) noexcept {
  if (k <= 2 || k % 2 != 0) return 0;
  if (k % 12 == 2) return k / 12 - 1;
  return k / 12;
}

/// Immutable table of dimCuspForms(0..maxK).
class CuspDimTable {
 public:
  explicit CuspDimTable(std::int64_t maxK) {
    if (maxK < 0) throw std::invalid_argument("CuspDimTable: maxK must be >= 0");
    dims_.reserve(static_cast<std::size_t>(maxK) + 1);
    for (std::int64_t k = 0; k <= maxK; ++k) dims_.push_back(dimCuspForms(k));
  }

  std::int64_t maxK() const noexcept { return static_cast<std::int64_t>(dims_.size()) - 1; }

  std::int64_t operator[](std::int64_t k) const {
    if (k < 0) return 0;
    if (k > maxK()) return dimCuspForms(k);
    return dims_[static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::int64_t> dims_;
};

}  // namespace g2count
