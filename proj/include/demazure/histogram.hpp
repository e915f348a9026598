#pragma once

#include <cstdint>
#include <map>

#include "demazure/numeric.hpp"

namespace demazure {

/// Finitely supported integer-valued measure on Z (value -> multiplicity).
/// Zero multiplicities are never stored; iteration is by ascending value.
class Histogram {
 public:
  using Map = std::map<std::int64_t, BigInt>;

  Histogram() = default;
  explicit Histogram(const Map& bins);

  void add(std::int64_t value, const BigInt& mult);

  /// Multiplicity at `value`, zero if absent.
  BigInt at(std::int64_t value) const;

  const Map& bins() const { return bins_; }
  bool empty() const { return bins_.empty(); }
  std::size_t size() const { return bins_.size(); }

  BigInt total() const;

  /// Mean of the histogram; throws ZeroMass.
  Rational mean() const;

  /// Variance of the histogram; throws ZeroMass.
  Rational variance() const;

  /// Image under v -> v + offset.
  Histogram shifted(std::int64_t offset) const;

  /// Image under v -> -v.
  Histogram reflected() const;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  Map bins_;
};

/// The point mass delta_k.
Histogram point_mass(std::int64_t value);

/// delta_[k] = sum_{i=0}^{k-1} delta_i, the measure of the q-integer [k]_q.
/// Requires k >= 0; [0]_q is the zero measure.
Histogram q_integer(std::int64_t k);

/// Convolution, i.e. product of the corresponding Laurent polynomials.
Histogram convolve(const Histogram& lhs, const Histogram& rhs);

}  // namespace demazure
