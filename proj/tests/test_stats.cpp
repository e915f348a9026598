#include <doctest.h>

#include <random>

#include "demazure/measure.hpp"
#include "demazure/stats.hpp"
#include "demazure/verify.hpp"

using namespace demazure;

namespace {

// Two-pass covariance: centre first, then average the product.
Rational centred_covariance(const SignedMeasure& mu, Functional f, Functional g) {
  Rational mass = 0, ef = 0, eg = 0;
  for (const auto& [w, c] : mu.entries()) {
    mass += Rational(c);
    ef += Rational(c) * evaluate(f, w);
    eg += Rational(c) * evaluate(g, w);
  }
  ef /= mass;
  eg /= mass;
  Rational sum = 0;
  for (const auto& [w, c] : mu.entries()) {
    sum += Rational(c) * (Rational(evaluate(f, w)) - ef) * (Rational(evaluate(g, w)) - eg);
  }
  return sum / mass;
}

SignedMeasure std_measure(std::int64_t N, int j, std::int64_t m, std::int64_t n) {
  return apply_word(standard_word(N, j), {m, n});
}

}  // namespace

TEST_CASE("total mass") {
  CHECK(total_mass(delta({2, 3})) == 1);
  CHECK(total_mass(std_measure(2, 0, 1, 0)) == 4);
  CHECK(total_mass(std_measure(1, 0, 10, 0)) == 11);
  SignedMeasure cancel({0, 0});
  cancel.add({0, 0}, 1);
  cancel.add({1, 0}, -1);
  CHECK(total_mass(cancel) == 0);
}

TEST_CASE("moments") {
  CHECK(moment(delta({1, 0}), 1, 0) == 0);
  CHECK(moment(std_measure(1, 0, 1, 0), 1, 0) == make_rational(1, 2));
  CHECK(moment(std_measure(2, 0, 10, 0), 1, 0) == make_rational(75, 11));
  CHECK(moment(delta({1, 0}), 0, 0) == 1);
  CHECK_THROWS_AS(moment(delta({1, 0}), 2, 2), std::invalid_argument);

  SignedMeasure cancel({0, 0});
  cancel.add({0, 0}, 1);
  cancel.add({1, 0}, -1);
  CHECK_THROWS_AS(moment(cancel, 1, 0), ZeroMass);
  CHECK_THROWS_AS(covariance(cancel, Functional::A, Functional::B), ZeroMass);
  CHECK_THROWS_AS(expectation(SignedMeasure({0, 0}), Functional::A), ZeroMass);
}

TEST_CASE("covariance examples") {
  CHECK(covariance(delta({3, 1}), Functional::A, Functional::B) == 0);
  CHECK(variance(std_measure(1, 0, 1, 0), Functional::AMinusB) == make_rational(1, 4));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const SignedMeasure image = apply_demazure(0, random_measure(rng));
    if (total_mass(image) == 0) continue;
    CHECK(covariance(image, Functional::B, Functional::AMinusB) == 0);
  }
}

TEST_CASE("one-pass covariance matches the centred definition") {
  std::mt19937_64 rng(11);
  const Functional fs[] = {Functional::A, Functional::B, Functional::AMinusB};
  for (int i = 0; i < 60; ++i) {
    const SignedMeasure mu = random_measure(rng);
    for (Functional f : fs) {
      for (Functional g : fs) CHECK(covariance(mu, f, g) == centred_covariance(mu, f, g));
    }
  }
}

TEST_CASE("pushforward") {
  CHECK(pushforward(std_measure(3, 0, 1, 0), Functional::A) ==
        Histogram({{0, 1}, {1, 3}, {2, 2}, {3, 1}, {4, 1}}));
  CHECK(pushforward(delta({4, 4}), Functional::A) == point_mass(0));
  Histogram odd;
  for (std::int64_t d = 0; d <= 10; ++d) odd.add(d, 2 * d + 1);
  CHECK(pushforward(std_measure(2, 0, 10, 0), Functional::A) == odd);
}

TEST_CASE("histogram consistency") {
  for (std::int64_t N = 0; N <= 6; ++N) {
    for (int j = 0; j < 2; ++j) {
      const SignedMeasure mu = std_measure(N, j, 2, 1);
      for (Functional f : {Functional::A, Functional::B, Functional::AMinusB}) {
        CHECK(pushforward(mu, f).total() == total_mass(mu));
      }
      CHECK(moment(mu, 1, 0) == pushforward(mu, Functional::A).mean());
      CHECK(variance(mu, Functional::AMinusB) == pushforward(mu, Functional::AMinusB).variance());
    }
  }
}

TEST_CASE("max degree") {
  CHECK(max_degree(delta({1, 1})) == 0);
  CHECK(max_degree(std_measure(8, 0, 1, 0)) == 16);
  CHECK(max_degree(std_measure(3, 0, 1, 0)) == 4);
  CHECK_THROWS_AS(max_degree(SignedMeasure({0, 0})), EmptyMeasure);
}

TEST_CASE("finite-weight anchors, mass recursion and diagonal trick on random measures") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 80; ++i) {
    const SignedMeasure mu = random_measure(rng);
    const std::int64_t m = mu.highest_weight().m(), n = mu.highest_weight().n();
    const BigInt mass = total_mass(mu);
    const SignedMeasure d0 = apply_demazure(0, mu);
    const SignedMeasure d1 = apply_demazure(1, mu);
    const Rational ef = expectation(mu, Functional::AMinusB);

    CHECK(Rational(total_mass(d0)) == Rational(mass) * (m + 1 - 2 * ef));
    CHECK(Rational(total_mass(d1)) == Rational(mass) * (n + 1 + 2 * ef));
    if (total_mass(d0) != 0) CHECK(expectation(d0, Functional::AMinusB) == make_rational(m, 2));
    if (total_mass(d1) != 0) CHECK(expectation(d1, Functional::AMinusB) == make_rational(-n, 2));

    // E_{D1 mu}[a^k] D1mu(Gamma) = mu(Gamma) E_mu[a^k (n + 1 + 2a - 2b)]
    for (unsigned k = 0; k <= 2; ++k) {
      if (total_mass(d1) != 0) {
        const Rational lhs = moment(d1, k, 0) * Rational(total_mass(d1));
        const Rational rhs =
            Rational(mass) * ((n + 1) * moment(mu, k, 0) + 2 * moment(mu, k + 1, 0) - 2 * moment(mu, k, 1));
        CHECK(lhs == rhs);
      }
      if (total_mass(d0) != 0) {
        const Rational lhs = moment(d0, 0, k) * Rational(total_mass(d0));
        const Rational rhs =
            Rational(mass) * ((m + 1) * moment(mu, 0, k) - 2 * moment(mu, 1, k) + 2 * moment(mu, 0, k + 1));
        CHECK(lhs == rhs);
      }
    }
  }
}
