#pragma once

#include <compare>
#include <cstdint>
#include <utility>

namespace demazure {

/// Dominant integral weight m*Lambda_0 + n*Lambda_1.
class HighestWeight {
 public:
  /// Throws std::invalid_argument unless m, n >= 0.
  HighestWeight(std::int64_t m, std::int64_t n);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }

  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

/// Lattice point lambda = Lambda - a*alpha_0 - b*alpha_1, stored relative
/// to its ambient highest weight. Any integers are allowed.
struct WeightCoord {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const WeightCoord&, const WeightCoord&) = default;
};

/// <lambda, alpha_0^vee> = m - 2(a - b).
std::int64_t pairing_alpha0(WeightCoord w, const HighestWeight& hw);

/// <lambda, alpha_1^vee> = n + 2(a - b).
std::int64_t pairing_alpha1(WeightCoord w, const HighestWeight& hw);

/// Pairing with the simple coroot j in {0, 1}.
std::int64_t pairing(int j, WeightCoord w, const HighestWeight& hw);

inline std::int64_t degree(WeightCoord w) { return w.a; }

inline std::int64_t finite_weight_dev(WeightCoord w) { return w.a - w.b; }

/// sigma(Lambda) = n*Lambda_0 + m*Lambda_1.
inline HighestWeight flip(const HighestWeight& hw) { return {hw.n(), hw.m()}; }

/// Diagram automorphism: swaps the coordinates and the ambient highest weight.
inline std::pair<WeightCoord, HighestWeight> diagram_flip(WeightCoord w,
                                                          const HighestWeight& hw) {
  return {WeightCoord{w.b, w.a}, flip(hw)};
}

/// Throws std::invalid_argument unless j is 0 or 1.
void check_node(int j);

}  // namespace demazure
