#include "demazure/formulas.hpp"

#include <stdexcept>
#include <string>

namespace demazure {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

Rational frac(std::int64_t num, std::int64_t den) { return make_rational(big(num), big(den)); }

void require_standard(const FamilyKey& k, const char* what) {
  if (k.extended) throw std::invalid_argument(std::string(what) + " requires a standard family key");
}

void validate(const FamilyKey& k) {
  (void)HighestWeight(k.m, k.n);
  check_node(k.j);
  if (k.N < 0) throw std::invalid_argument("N must be nonnegative");
}

// The weight coefficient that enters first: m for j = 0, n for j = 1.
std::int64_t lead(const FamilyKey& k) { return k.j == 0 ? k.m : k.n; }

// (2(N-1)X(X+2) + (N-1)(N-2)(m+n)(m+n+2)) / (12(m+n+1)), X = lead(k).
Rational quadratic_part(const FamilyKey& k) {
  const BigInt N = big(k.N), x = big(lead(k)), s = big(k.m + k.n);
  const BigInt num = 2 * (N - 1) * x * (x + 2) + (N - 1) * (N - 2) * s * (s + 2);
  return make_rational(num, 12 * (s + 1));
}

// (X(X+2) + (N-2)(m+n)(m+n+2)) / 6: twice the finite-weight variance of w_{N-1,j}.
Rational recurrence_increment(const FamilyKey& k) {
  const BigInt N = big(k.N), x = big(lead(k)), s = big(k.m + k.n);
  return make_rational(x * (x + 2) + (N - 2) * s * (s + 2), 6);
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Std0: return "std0";
    case Family::Std1: return "std1";
    case Family::Ext0: return "ext0";
    case Family::Ext1: return "ext1";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::Std0, Family::Std1, Family::Ext0, Family::Ext1}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

FamilyKey FamilyKey::of(Family family, std::int64_t m, std::int64_t n, std::int64_t N) {
  const int j = (family == Family::Std1 || family == Family::Ext1) ? 1 : 0;
  const bool ext = family == Family::Ext0 || family == Family::Ext1;
  FamilyKey k{m, n, N, j, ext};
  validate(k);
  return k;
}

Family FamilyKey::family() const {
  if (extended) return j == 0 ? Family::Ext0 : Family::Ext1;
  return j == 0 ? Family::Std0 : Family::Std1;
}

WeylWord family_word(const FamilyKey& k) {
  validate(k);
  return k.extended ? extended_word(k.N, k.j) : standard_word(k.N, k.j);
}

BigInt dim_closed(const FamilyKey& k) {
  validate(k);
  if (k.N == 0) return 1;
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), big(k.m + k.n + 1).get_mpz_t(), static_cast<unsigned long>(k.N - 1));
  return big(lead(k) + 1) * power;
}

Rational expected_degree_closed(const FamilyKey& k) {
  validate(k);
  require_standard(k, "expected_degree_closed");
  if (k.N == 0) return 0;
  const std::int64_t s = k.m + k.n;
  if (k.j == 0) {
    return quadratic_part(k) + frac(floor_div(k.N - 1, 2) * s, 2) + frac(k.m, 2);
  }
  return quadratic_part(k) + frac(floor_div(k.N, 2) * s, 2);
}

Rational expected_degree_extended(const FamilyKey& k) {
  validate(k);
  if (!k.extended) throw std::invalid_argument("expected_degree_extended requires an extended key");
  if (k.N == 0) return 0;
  if (k.j == 0) {
    return quadratic_part(k) + frac(floor_div(k.N - 1, 2) * k.n, 2) +
           frac(floor_div(k.N, 2) * k.m, 2);
  }
  return quadratic_part(k) + frac(ceil_div(k.N - 1, 2) * k.m, 2) + frac(ceil_div(k.N, 2) * k.n, 2);
}

Rational expected_degree(const FamilyKey& k) {
  return k.extended ? expected_degree_extended(k) : expected_degree_closed(k);
}

Rational expected_finite_closed(const FamilyKey& k) {
  validate(k);
  if (k.N == 0) return 0;
  const int left = k.N % 2 == 1 ? k.j : 1 - k.j;
  const Rational anchor = left == 0 ? frac(k.m, 2) : frac(-k.n, 2);
  return k.extended && k.N % 2 == 1 ? Rational(-anchor) : anchor;
}

Rational variance_finite_closed(const FamilyKey& k) {
  validate(k);
  if (k.N == 0) return 0;
  const BigInt N = big(k.N), x = big(lead(k)), s = big(k.m + k.n);
  return make_rational(x * (x + 2) + (N - 1) * s * (s + 2), 12);
}

Histogram qchar_finite(const FamilyKey& k) {
  validate(k);
  if (k.N == 0) return point_mass(0);
  // j = 1 is the j = 0 character with m and n exchanged, reflected through 0.
  const std::int64_t p = lead(k);
  const std::int64_t s = k.m + k.n;
  Histogram h = point_mass(-s * floor_div(k.N, 2));
  h = convolve(h, q_integer(p + 1));
  const Histogram step = q_integer(s + 1);
  for (std::int64_t i = 1; i < k.N; ++i) h = convolve(h, step);
  bool reflect = k.j == 1;
  if (k.extended && k.N % 2 == 1) reflect = !reflect;
  return reflect ? h.reflected() : h;
}

Rational recurrence_step(const Rational& prev, const FamilyKey& k, Functional axis) {
  validate(k);
  require_standard(k, "recurrence_step");
  if (k.N < 2) throw std::invalid_argument("recurrence_step requires N >= 2");
  if (axis == Functional::AMinusB) throw ParityMismatch("recurrence tracks a or b, not a-b");
  const bool even = k.N % 2 == 0;
  const Functional expected = (k.j == 0) == even ? Functional::A : Functional::B;
  if (axis != expected) {
    throw ParityMismatch("recurrence for " + std::string(to_string(axis)) + " does not apply to " +
                         std::string(to_string(k.family())) + " at N=" + std::to_string(k.N));
  }
  FamilyKey before = k;
  before.N = k.N - 1;
  const Rational ratio = make_rational(dim_closed(before), dim_closed(k));
  return ratio * (big(k.m + k.n + 1) * prev + recurrence_increment(k));
}

SnakeValues snake_recursion(const FamilyKey& k) {
  validate(k);
  require_standard(k, "snake_recursion");
  if (k.N == 0) return {0, 0};
  const Rational half_m = frac(k.m, 2);
  const Rational half_n = frac(k.n, 2);
  const BigInt s1 = big(k.m + k.n + 1);

  // N = 1: only the first letter has acted.
  SnakeValues v = k.j == 0 ? SnakeValues{half_m, 0} : SnakeValues{0, half_n};
  for (std::int64_t N = 2; N <= k.N; ++N) {
    FamilyKey at = k;
    at.N = N;
    const Rational inc = recurrence_increment(at) / s1;
    const bool even = N % 2 == 0;
    if ((k.j == 0) == even) {
      // Leftmost letter is s1: a advances, then b = a + n/2.
      v.expected_a += inc;
      v.expected_b = v.expected_a + half_n;
    } else {
      // Leftmost letter is s0: b advances, then a = b + m/2.
      v.expected_b += inc;
      v.expected_a = v.expected_b + half_m;
    }
  }
  return v;
}

std::int64_t max_degree_closed(const FamilyKey& k) {
  validate(k);
  const std::int64_t N = k.N, m = k.m, n = k.n, s = m + n;
  const std::int64_t fl = floor_div(N, 2), cl = ceil_div(N, 2);
  if (!k.extended) {
    if (k.j == 0) return cl * m + s * (cl - 1) * cl;
    return fl * (m + 2 * n) + s * (fl - 1) * fl;
  }
  if (k.j == 0) return fl * m + s * floor_div(N - 1, 2) * fl;
  return cl * n + s * fl * cl;
}

Rational degree_ratio(const FamilyKey& k) {
  const std::int64_t top = max_degree_closed(k);
  if (top == 0) throw DegenerateDenominator("maximal degree is zero");
  return expected_degree(k) / Rational(big(top));
}

Rational limit_ratio_N(std::int64_t m, std::int64_t n) {
  (void)HighestWeight(m, n);
  return frac(m + n + 2, 3 * (m + n + 1));
}

Rational limit_ratio_mn(std::int64_t N, int j, Direction direction, bool extended) {
  check_node(j);
  if (N < 1) throw std::invalid_argument("limit_ratio_mn requires N >= 1");
  const std::int64_t fl = floor_div(N, 2), cl = ceil_div(N, 2);
  const std::int64_t sq = N * N;
  std::int64_t num = 0, den = 0;
  const bool m_dir = direction == Direction::MToInfinity;
  if (!extended) {
    if (j == 0) {
      num = m_dir ? sq - N + 6 * cl : sq - 3 * N - 4 + 6 * cl;
      den = m_dir ? 12 * cl * cl : 12 * cl * (cl - 1);
    } else {
      num = m_dir ? sq - 3 * N + 2 + 6 * fl : sq - N + 6 * fl;
      den = m_dir ? 12 * fl * fl : 12 * fl * (fl + 1);
    }
  } else {
    if (j == 0) {
      num = m_dir ? sq - N + 6 * fl : sq - 3 * N - 4 + 6 * cl;
      den = m_dir ? 12 * fl * cl : 12 * fl * (cl - 1);
    } else {
      num = m_dir ? sq - 3 * N + 2 + 6 * fl : sq - N + 6 * cl;
      den = m_dir ? 12 * fl * cl : 12 * cl * (fl + 1);
    }
  }
  if (den == 0) {
    throw DegenerateDenominator("limit ratio denominator vanishes at N=" + std::to_string(N));
  }
  return frac(num, den);
}

}  // namespace demazure
