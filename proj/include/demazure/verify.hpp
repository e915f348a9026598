#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "demazure/formulas.hpp"
#include "demazure/measure.hpp"

namespace demazure {

/// Outcome of one identity check.
struct CheckResult {
  std::string quantity;
  bool ok = true;
  std::string expected;
  std::string actual;
};

/// Identities that hold for every `after = D_j before`: idempotence of D_j,
/// the total-mass recursion, the diagonal trick for k = 0, 1, 2, and (when
/// the image mass is nonzero) the finite-weight anchor and the covariance
/// collapse. Quantities: idempotence, mass_recursion, diagonal,
/// finite_anchor, covariance.
std::vector<CheckResult> operator_identities(const SignedMeasure& before, int j,
                                             const SignedMeasure& after);

/// Signed sum and signed count of the summation convention for every k in
/// [lo, hi] against k(k+1)/2 and k+1. Quantity: gauss.
std::vector<CheckResult> gauss_convention_checks(std::int64_t lo, std::int64_t hi);

/// Nonnegative test measure: highest weight in [0,5]^2, 1..max_support
/// atoms with coordinates in [-5,5] and multiplicities in [1,9].
SignedMeasure random_measure(std::mt19937_64& rng, std::size_t max_support = 20);

/// Inclusive bounds "m<=A,n<=B,N<=C" on the verification grid.
struct Grid {
  std::int64_t max_m = 0;
  std::int64_t max_n = 0;
  std::int64_t max_N = 0;
};

/// Throws std::invalid_argument on malformed text.
Grid parse_grid(std::string_view text);

struct VerifyOptions {
  Grid grid;
  unsigned threads = 1;
  /// Harness self-test: perturbs the named closed-form quantity by one.
  std::string inject_fault;
};

struct Failure {
  std::string where;
  std::string quantity;
  std::string expected;
  std::string actual;
};

struct Tally {
  std::string quantity;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct VerifyReport {
  Grid grid;
  std::vector<Tally> tallies;
  std::optional<Failure> first_failure;

  bool ok() const { return !first_failure; }
  /// Plain-text summary; independent of the thread count.
  std::string render() const;
};

/// Quantities whose closed form can be perturbed through inject_fault.
const std::vector<std::string>& closed_form_quantities();

/// Runs the closed-form-versus-engine suite over every (m, n, j) cell of
/// the grid and all four families. Cells run on `threads` workers and are
/// merged in (m, n, j) order, so the report does not depend on scheduling.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace demazure
