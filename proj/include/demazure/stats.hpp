#pragma once

#include <cstdint>
#include <string_view>

#include "demazure/histogram.hpp"
#include "demazure/measure.hpp"
#include "demazure/numeric.hpp"

namespace demazure {

/// Linear functionals on the lattice. A is the degree, AMinusB the finite weight.
enum class Functional { A, B, AMinusB };

std::string_view to_string(Functional f);

std::int64_t evaluate(Functional f, WeightCoord w);

/// mu(Gamma); may be zero or negative for signed inputs.
BigInt total_mass(const SignedMeasure& mu);

/// E_mu[a^p b^q] for p + q <= 3. Throws ZeroMass, or std::invalid_argument
/// when p + q exceeds 3.
Rational moment(const SignedMeasure& mu, unsigned p, unsigned q);

/// E_mu[f]. Throws ZeroMass.
Rational expectation(const SignedMeasure& mu, Functional f);

/// Cov_mu(f, g) = E[fg] - E[f]E[g]. Throws ZeroMass.
Rational covariance(const SignedMeasure& mu, Functional f, Functional g);

inline Rational variance(const SignedMeasure& mu, Functional f) { return covariance(mu, f, f); }

/// Image measure f_* mu on Z.
Histogram pushforward(const SignedMeasure& mu, Functional f);

/// Largest a over the support. Throws EmptyMeasure.
std::int64_t max_degree(const SignedMeasure& mu);

}  // namespace demazure
