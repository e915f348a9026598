#include <doctest.h>

#include <vector>

#include "demazure/histogram.hpp"

using namespace demazure;

namespace {

// Dense coefficient product of two polynomials given from exponent `lo`.
std::vector<long> poly_mul(const std::vector<long>& p, const std::vector<long>& q) {
  std::vector<long> out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t k = 0; k < q.size(); ++k) out[i + k] += p[i] * q[k];
  }
  return out;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_integer(0).empty());
  CHECK(q_integer(1) == point_mass(0));
  CHECK(q_integer(3) == Histogram({{0, 1}, {1, 1}, {2, 1}}));
  CHECK_THROWS_AS(q_integer(-1), std::invalid_argument);
}

TEST_CASE("variance of a q-integer is (k-1)(k+1)/12") {
  for (std::int64_t k = 1; k <= 40; ++k) {
    CHECK(q_integer(k).variance() == make_rational((k - 1) * (k + 1), 12));
    CHECK(q_integer(k).mean() == make_rational(k - 1, 2));
  }
}

TEST_CASE("convolution is polynomial multiplication") {
  const std::vector<std::vector<long>> polys{{1, 2, 3}, {4, 0, -1, 2}, {1}, {0, 5}, {2, -2}};
  for (const auto& p : polys) {
    for (const auto& q : polys) {
      Histogram hp, hq, expected;
      for (std::size_t i = 0; i < p.size(); ++i) hp.add(static_cast<std::int64_t>(i) - 1, p[i]);
      for (std::size_t i = 0; i < q.size(); ++i) hq.add(static_cast<std::int64_t>(i) + 2, q[i]);
      const auto prod = poly_mul(p, q);
      for (std::size_t i = 0; i < prod.size(); ++i) expected.add(static_cast<std::int64_t>(i) + 1, prod[i]);
      CHECK(convolve(hp, hq) == expected);
    }
  }
}

TEST_CASE("shift and reflect") {
  const Histogram h({{-1, 2}, {3, 5}});
  CHECK(h.shifted(4) == Histogram({{3, 2}, {7, 5}}));
  CHECK(h.reflected() == Histogram({{1, 2}, {-3, 5}}));
  CHECK(h.reflected().reflected() == h);
  CHECK(h.total() == 7);
  CHECK(h.at(3) == 5);
  CHECK(h.at(0) == 0);
}

TEST_CASE("zero-mass histogram statistics throw") {
  const Histogram h({{0, 1}, {1, -1}});
  CHECK_THROWS_AS(h.mean(), ZeroMass);
  CHECK_THROWS_AS(h.variance(), ZeroMass);
  CHECK_THROWS_AS(Histogram().mean(), ZeroMass);
}
