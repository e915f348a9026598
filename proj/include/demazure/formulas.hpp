#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "demazure/histogram.hpp"
#include "demazure/lattice.hpp"
#include "demazure/numeric.hpp"
#include "demazure/stats.hpp"
#include "demazure/weyl.hpp"

namespace demazure {

/// The four word families: w_{N,0}, w_{N,1}, (sigma s_0)^N, (sigma s_1)^N.
enum class Family { Std0, Std1, Ext0, Ext1 };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

/// Identifies one Demazure module of a standard or extended family.
struct FamilyKey {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t N = 0;
  int j = 0;
  bool extended = false;

  static FamilyKey of(Family family, std::int64_t m, std::int64_t n, std::int64_t N);

  Family family() const;
  HighestWeight highest_weight() const { return {m, n}; }

  friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
};

/// The word indexing the family member.
WeylWord family_word(const FamilyKey& k);

/// Sanderson's dimension formula: 1 for N = 0, else (m+1)(m+n+1)^{N-1}
/// (j = 0) or (n+1)(m+n+1)^{N-1} (j = 1). D_sigma permutes point masses,
/// so the extended families share the value.
BigInt dim_closed(const FamilyKey& k);

/// Closed-form expected degree E[a] of w_{N,j}. Requires extended == false.
Rational expected_degree_closed(const FamilyKey& k);

/// Closed-form expected degree E[a] of (sigma s_j)^N. Requires extended == true.
Rational expected_degree_extended(const FamilyKey& k);

/// Dispatches on k.extended.
Rational expected_degree(const FamilyKey& k);

/// E[a - b]: m/2 when the leftmost letter is s0, -n/2 when it is s1, 0 for
/// N = 0. An odd number of flips negates it.
Rational expected_finite_closed(const FamilyKey& k);

/// Var(a - b). The diagram flip negates a - b, so extended keys share the
/// standard value.
Rational variance_finite_closed(const FamilyKey& k);

/// Finite-weight character as a histogram over a - b:
///   j = 0:  delta_{-(m+n) floor(N/2)} * [m+1] * [m+n+1]^{*(N-1)}
///   j = 1:  the j = 0 character of (n, m), reflected through 0.
/// Extended families with odd N are reflected once more.
Histogram qchar_finite(const FamilyKey& k);

/// One step of the recurrence for E[a] or E[b] of w_{N,j} from the same
/// expectation of w_{N-1,j}. For j = 0 the tracked axis is a when N is even
/// and b when N is odd; j = 1 is the other way round. Any other axis throws
/// ParityMismatch. Requires N >= 2 and a standard key.
Rational recurrence_step(const Rational& prev, const FamilyKey& k, Functional axis);

/// Both coordinate expectations produced by the snake recursion.
struct SnakeValues {
  Rational expected_a;
  Rational expected_b;
};

/// Runs the alternating a/b recursion from N = 1 up to k.N using only the
/// increment formulas and the finite-weight anchors. Standard families only.
SnakeValues snake_recursion(const FamilyKey& k);

inline Rational snake_expected(const FamilyKey& k) { return snake_recursion(k).expected_a; }

/// Maximal degree: A^{m,n}_{N,j} for standard keys, B^{m,n}_{N,j} for extended keys.
std::int64_t max_degree_closed(const FamilyKey& k);

/// expected_degree / max_degree_closed. Throws DegenerateDenominator when
/// the maximal degree is zero.
Rational degree_ratio(const FamilyKey& k);

/// lim_{N -> infinity} E[a] / max degree = (m+n+2) / (3(m+n+1)).
Rational limit_ratio_N(std::int64_t m, std::int64_t n);

enum class Direction { MToInfinity, NToInfinity };

/// Limit of E[a] / max degree as m or n grows with N fixed.
/// Throws DegenerateDenominator when the limit's denominator vanishes.
Rational limit_ratio_mn(std::int64_t N, int j, Direction direction, bool extended);

}  // namespace demazure
