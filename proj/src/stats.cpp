#include "demazure/stats.hpp"

#include <stdexcept>

namespace demazure {

namespace {

BigInt ipow(std::int64_t base, unsigned e) {
  BigInt out = 1;
  const BigInt b(static_cast<long>(base));
  for (unsigned i = 0; i < e; ++i) out *= b;
  return out;
}

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace

std::string_view to_string(Functional f) {
  switch (f) {
    case Functional::A: return "a";
    case Functional::B: return "b";
    case Functional::AMinusB: return "a-b";
  }
  return "?";
}

std::int64_t evaluate(Functional f, WeightCoord w) {
  switch (f) {
    case Functional::A: return w.a;
    case Functional::B: return w.b;
    case Functional::AMinusB: return w.a - w.b;
  }
  return 0;
}

BigInt total_mass(const SignedMeasure& mu) {
  BigInt sum = 0;
  for (const auto& [w, p] : mu.entries()) sum += p;
  return sum;
}

Rational moment(const SignedMeasure& mu, unsigned p, unsigned q) {
  if (p + q > 3) throw std::invalid_argument("moments are supported up to total order 3");
  BigInt mass = 0, sum = 0;
  for (const auto& [w, c] : mu.entries()) {
    mass += c;
    sum += c * ipow(w.a, p) * ipow(w.b, q);
  }
  if (mass == 0) throw ZeroMass();
  return make_rational(sum, mass);
}

Rational expectation(const SignedMeasure& mu, Functional f) {
  BigInt mass = 0, sum = 0;
  for (const auto& [w, c] : mu.entries()) {
    mass += c;
    sum += c * big(evaluate(f, w));
  }
  if (mass == 0) throw ZeroMass();
  return make_rational(sum, mass);
}

Rational covariance(const SignedMeasure& mu, Functional f, Functional g) {
  BigInt mass = 0, sf = 0, sg = 0, sfg = 0;
  for (const auto& [w, c] : mu.entries()) {
    const BigInt x = big(evaluate(f, w));
    const BigInt y = big(evaluate(g, w));
    mass += c;
    sf += c * x;
    sg += c * y;
    sfg += c * x * y;
  }
  if (mass == 0) throw ZeroMass();
  return make_rational(mass * sfg - sf * sg, mass * mass);
}

Histogram pushforward(const SignedMeasure& mu, Functional f) {
  Histogram h;
  for (const auto& [w, c] : mu.entries()) h.add(evaluate(f, w), c);
  return h;
}

std::int64_t max_degree(const SignedMeasure& mu) {
  if (mu.empty()) throw EmptyMeasure();
  // Entries are ordered by (a, b), so the last key carries the largest a.
  return mu.entries().rbegin()->first.a;
}

}  // namespace demazure
