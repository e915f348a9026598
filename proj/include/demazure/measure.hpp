#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "demazure/lattice.hpp"
#include "demazure/numeric.hpp"
#include "demazure/weyl.hpp"

namespace demazure {

/// Finitely supported signed integer measure on the weight lattice of a
/// fixed highest weight. Entries are keyed by (a, b) and iterate in
/// lexicographic order; zero coefficients are never stored.
class SignedMeasure {
 public:
  using Map = std::map<WeightCoord, BigInt>;

  explicit SignedMeasure(HighestWeight hw) : hw_(hw) {}
  /// Zero coefficients in `entries` are dropped.
  SignedMeasure(HighestWeight hw, Map entries);

  const HighestWeight& highest_weight() const { return hw_; }
  const Map& entries() const { return entries_; }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  /// Coefficient at `w`, zero when `w` is outside the support.
  BigInt at(WeightCoord w) const;

  /// Adds `coeff` at `w`, erasing the entry if it cancels to zero.
  void add(WeightCoord w, const BigInt& coeff);

  /// True when every stored coefficient is strictly positive.
  bool is_positive() const;

  friend bool operator==(const SignedMeasure&, const SignedMeasure&) = default;

 private:
  HighestWeight hw_;
  Map entries_;
};

/// Index range of sum_{i=0}^{k} under the extended summation convention:
/// k >= 0 gives [0, k] with sign +1, k = -1 is empty, and k < -1 gives
/// [k+1, -1] with sign -1.
struct ConventionRange {
  std::int64_t first = 0;
  std::int64_t last = -1;
  int sign = 1;

  bool empty() const { return last < first; }
  std::int64_t count() const { return empty() ? 0 : last - first + 1; }
  std::vector<std::int64_t> indices() const;
};

ConventionRange convention_sum_bounds(std::int64_t k);

/// Unit point mass at the highest weight.
SignedMeasure delta(const HighestWeight& hw);

/// D_j for j in {0, 1}: delta_lambda -> sum_{i=0}^{<lambda, alpha_j^vee>} delta_{lambda - i alpha_j}.
/// Subtracting i*alpha_0 raises a by i; subtracting i*alpha_1 raises b by i.
SignedMeasure apply_demazure(int j, const SignedMeasure& mu);

/// D_sigma: pushes every entry through the diagram flip and swaps (m, n).
SignedMeasure apply_sigma(const SignedMeasure& mu);

SignedMeasure apply_generator(Generator g, const SignedMeasure& mu);

/// D_w delta_Lambda, letters applied right to left.
SignedMeasure apply_word(const WeylWord& w, const HighestWeight& hw);

/// Every intermediate measure of apply_word: element k is the result after
/// the rightmost k letters, so front() is delta(hw) and back() is D_w delta(hw).
std::vector<SignedMeasure> apply_word_trace(const WeylWord& w, const HighestWeight& hw);

}  // namespace demazure
