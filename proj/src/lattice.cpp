#include "demazure/lattice.hpp"

#include <stdexcept>
#include <string>

namespace demazure {

HighestWeight::HighestWeight(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (m < 0 || n < 0) {
    throw std::invalid_argument("highest weight must be dominant, got (" + std::to_string(m) +
                                ", " + std::to_string(n) + ")");
  }
}

std::int64_t pairing_alpha0(WeightCoord w, const HighestWeight& hw) {
  return hw.m() - 2 * (w.a - w.b);
}

std::int64_t pairing_alpha1(WeightCoord w, const HighestWeight& hw) {
  return hw.n() + 2 * (w.a - w.b);
}

std::int64_t pairing(int j, WeightCoord w, const HighestWeight& hw) {
  check_node(j);
  return j == 0 ? pairing_alpha0(w, hw) : pairing_alpha1(w, hw);
}

void check_node(int j) {
  if (j != 0 && j != 1) {
    throw std::invalid_argument("simple root index must be 0 or 1, got " + std::to_string(j));
  }
}

}  // namespace demazure
