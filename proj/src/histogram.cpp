#include "demazure/histogram.hpp"

#include <stdexcept>

namespace demazure {

Histogram::Histogram(const Map& bins) {
  for (const auto& [v, c] : bins) add(v, c);
}

void Histogram::add(std::int64_t value, const BigInt& mult) {
  if (mult == 0) return;
  auto [it, inserted] = bins_.try_emplace(value, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) bins_.erase(it);
  }
}

BigInt Histogram::at(std::int64_t value) const {
  auto it = bins_.find(value);
  return it == bins_.end() ? BigInt(0) : it->second;
}

BigInt Histogram::total() const {
  BigInt sum = 0;
  for (const auto& [v, c] : bins_) sum += c;
  return sum;
}

Rational Histogram::mean() const {
  BigInt mass = 0, first = 0;
  for (const auto& [v, c] : bins_) {
    mass += c;
    first += c * BigInt(static_cast<long>(v));
  }
  if (mass == 0) throw ZeroMass();
  return make_rational(first, mass);
}

Rational Histogram::variance() const {
  BigInt mass = 0, first = 0, second = 0;
  for (const auto& [v, c] : bins_) {
    const BigInt x(static_cast<long>(v));
    mass += c;
    first += c * x;
    second += c * x * x;
  }
  if (mass == 0) throw ZeroMass();
  // (M * S2 - S1^2) / M^2
  return make_rational(mass * second - first * first, mass * mass);
}

Histogram Histogram::shifted(std::int64_t offset) const {
  Histogram out;
  for (const auto& [v, c] : bins_) out.bins_.emplace_hint(out.bins_.end(), v + offset, c);
  return out;
}

Histogram Histogram::reflected() const {
  Histogram out;
  for (const auto& [v, c] : bins_) out.bins_.emplace(-v, c);
  return out;
}

Histogram point_mass(std::int64_t value) {
  Histogram h;
  h.add(value, 1);
  return h;
}

Histogram q_integer(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("q-integer requires k >= 0");
  Histogram h;
  for (std::int64_t i = 0; i < k; ++i) h.add(i, 1);
  return h;
}

Histogram convolve(const Histogram& lhs, const Histogram& rhs) {
  Histogram out;
  for (const auto& [u, c] : lhs.bins()) {
    for (const auto& [v, d] : rhs.bins()) out.add(u + v, c * d);
  }
  return out;
}

}  // namespace demazure
