#include "demazure/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "demazure/stats.hpp"

namespace demazure {

namespace {

const std::vector<std::string>& quantity_order() {
  static const std::vector<std::string> order{
      "gauss",       "dim",        "expected_degree", "snake",       "recurrence",
      "variance_finite", "qchar",  "max_degree",      "sigma_symmetry", "positivity",
      "word_engine", "idempotence", "mass_recursion", "diagonal",    "finite_anchor",
      "covariance"};
  return order;
}

std::size_t quantity_index(const std::string& q) {
  const auto& order = quantity_order();
  auto it = std::find(order.begin(), order.end(), q);
  if (it == order.end()) throw std::logic_error("unregistered quantity " + q);
  return static_cast<std::size_t>(it - order.begin());
}

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

std::string show(const Rational& r) { return to_string(r); }
std::string show(const BigInt& v) { return v.get_str(); }
std::string show(std::int64_t v) { return std::to_string(v); }
std::string show(bool v) { return v ? "true" : "false"; }
std::string show(const Histogram& h) {
  std::string out = "{";
  std::size_t shown = 0;
  for (const auto& [v, c] : h.bins()) {
    if (shown) out += ",";
    if (++shown > 12) {
      out += "...";
      break;
    }
    out += std::to_string(v) + ":" + c.get_str();
  }
  return out + "}";
}

template <class T>
CheckResult compare(std::string quantity, const T& expected, const T& actual) {
  const bool ok = expected == actual;
  return {std::move(quantity), ok, show(expected), show(actual)};
}

void perturb(Rational& v) { v += 1; }
void perturb(BigInt& v) { v += 1; }
void perturb(std::int64_t& v) { v += 1; }
void perturb(Histogram& h) { h.add(0, 1); }

// sum over mu of c * f(w)
template <class F>
BigInt weighted_sum(const SignedMeasure& mu, F f) {
  BigInt s = 0;
  for (const auto& [w, c] : mu.entries()) s += c * f(w);
  return s;
}

struct CellResult {
  std::vector<std::uint64_t> passed;
  std::vector<std::uint64_t> failed;
  std::optional<Failure> first;

  CellResult() : passed(quantity_order().size(), 0), failed(quantity_order().size(), 0) {}

  void record(const CheckResult& r, const std::string& where) {
    const std::size_t i = quantity_index(r.quantity);
    if (r.ok) {
      ++passed[i];
      return;
    }
    ++failed[i];
    if (!first) first = Failure{where, r.quantity, r.expected, r.actual};
  }

  void record_all(const std::vector<CheckResult>& rs, const std::string& where) {
    for (const auto& r : rs) record(r, where);
  }
};

class CellRunner {
 public:
  CellRunner(const VerifyOptions& opts, CellResult& out) : opts_(opts), out_(out) {}

  template <class T>
  void closed(const std::string& quantity, T closed_value, const T& brute, const std::string& where) {
    if (opts_.inject_fault == quantity) perturb(closed_value);
    out_.record(compare(quantity, closed_value, brute), where);
  }

  void family(const FamilyKey& key, const SignedMeasure& mu, const std::string& where) {
    out_.record({"positivity", mu.is_positive(), "true", show(mu.is_positive())}, where);
    closed("dim", dim_closed(key), total_mass(mu), where);
    closed("expected_degree", expected_degree(key), moment(mu, 1, 0), where);
    closed("variance_finite", variance_finite_closed(key), variance(mu, Functional::AMinusB), where);
    closed("qchar", qchar_finite(key), pushforward(mu, Functional::AMinusB), where);
    closed("max_degree", max_degree_closed(key), max_degree(mu), where);
  }

  void run(std::int64_t m, std::int64_t n, int j) {
    const HighestWeight hw(m, n);
    const Family std_family = j == 0 ? Family::Std0 : Family::Std1;
    const Family ext_family = j == 0 ? Family::Ext0 : Family::Ext1;
    SignedMeasure prev = delta(hw);
    for (std::int64_t N = 0; N <= opts_.grid.max_N; ++N) {
      const FamilyKey key = FamilyKey::of(std_family, m, n, N);
      const FamilyKey ext_key = FamilyKey::of(ext_family, m, n, N);
      const std::string where = location(key);

      SignedMeasure cur = delta(hw);
      if (N > 0) {
        // Leftmost letter of w_{N,j}: s_j for odd N, s_{1-j} for even N.
        const int left = N % 2 == 1 ? j : 1 - j;
        cur = apply_demazure(left, prev);
        out_.record_all(operator_identities(prev, left, cur), where);
      }

      family(key, cur, where);
      if (N >= 1) {
        const SnakeValues snake = snake_recursion(key);
        closed("snake", snake.expected_a, moment(cur, 1, 0), where);
        closed("snake", snake.expected_b, moment(cur, 0, 1), where);
      }
      if (N >= 2) {
        const Functional axis = (j == 0) == (N % 2 == 0) ? Functional::A : Functional::B;
        closed("recurrence", recurrence_step(expectation(prev, axis), key, axis),
               expectation(cur, axis), where);
      }
      // The flip of w_{N,j} over (m, n) is w_{N,1-j} over (n, m) with a and b exchanged.
      closed("sigma_symmetry", expected_degree_closed(FamilyKey{n, m, N, 1 - j, false}),
             moment(cur, 0, 1), where);

      const SignedMeasure ext = N % 2 == 1 ? apply_sigma(cur) : cur;
      const std::string ext_where = location(ext_key);
      family(ext_key, ext, ext_where);

      if (N == opts_.grid.max_N) {
        out_.record(compare("word_engine", true, apply_word(family_word(key), hw) == cur), where);
        out_.record(compare("word_engine", true, apply_word(family_word(ext_key), hw) == ext),
                    ext_where);
      }
      prev = std::move(cur);
    }

    if (j == 0) random_checks(m, n);
  }

 private:
  static std::string location(const FamilyKey& k) {
    return "m=" + std::to_string(k.m) + ",n=" + std::to_string(k.n) + ",N=" + std::to_string(k.N) +
           ",family=" + std::string(to_string(k.family()));
  }

  void random_checks(std::int64_t m, std::int64_t n) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(1000003 * m + n + 17));
    for (int draw = 0; draw < 4; ++draw) {
      const SignedMeasure mu = random_measure(rng);
      for (int j = 0; j < 2; ++j) {
        const std::string where = "random(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                                  ",draw=" + std::to_string(draw) + ",D" + std::to_string(j) + ")";
        out_.record_all(operator_identities(mu, j, apply_demazure(j, mu)), where);
      }
    }
  }

  const VerifyOptions& opts_;
  CellResult& out_;
};

}  // namespace

std::vector<CheckResult> operator_identities(const SignedMeasure& before, int j,
                                             const SignedMeasure& after) {
  check_node(j);
  std::vector<CheckResult> out;
  const HighestWeight& hw = before.highest_weight();
  const Rational m(big(hw.m())), n(big(hw.n()));

  out.push_back(compare("idempotence", true, apply_demazure(j, after) == after));

  // D_j mu(Gamma) = sum_lambda p_lambda (<lambda, alpha_j^vee> + 1)
  const auto successors = [&](WeightCoord w) { return big(pairing(j, w, hw) + 1); };
  out.push_back(compare("mass_recursion", weighted_sum(before, successors), total_mass(after)));

  // D_1 leaves a fixed and D_0 leaves b fixed, so their powers are carried along.
  for (unsigned k = 0; k <= 2; ++k) {
    const auto power = [&](WeightCoord w) {
      BigInt x = big(j == 1 ? w.a : w.b), out = 1;
      for (unsigned i = 0; i < k; ++i) out *= x;
      return out;
    };
    const BigInt lhs = weighted_sum(after, power);
    const BigInt rhs = weighted_sum(before, [&](WeightCoord w) -> BigInt { return power(w) * successors(w); });
    out.push_back(compare("diagonal", rhs, lhs));
  }

  if (total_mass(after) == 0) return out;

  const Rational anchor = j == 0 ? Rational(m / 2) : Rational(-n / 2);
  out.push_back(compare("finite_anchor", anchor, expectation(after, Functional::AMinusB)));

  const Rational var = variance(after, Functional::AMinusB);
  const Rational cov_a = covariance(after, Functional::A, Functional::AMinusB);
  const Rational cov_b = covariance(after, Functional::B, Functional::AMinusB);
  if (j == 0) {
    out.push_back(compare("covariance", Rational(0), cov_b));
    out.push_back(compare("covariance", var, cov_a));
  } else {
    out.push_back(compare("covariance", Rational(0), cov_a));
    out.push_back(compare("covariance", Rational(-var), cov_b));
  }
  return out;
}

std::vector<CheckResult> gauss_convention_checks(std::int64_t lo, std::int64_t hi) {
  std::vector<CheckResult> out;
  for (std::int64_t k = lo; k <= hi; ++k) {
    const ConventionRange r = convention_sum_bounds(k);
    std::int64_t sum = 0, count = 0;
    for (std::int64_t i : r.indices()) {
      sum += r.sign * i;
      count += r.sign;
    }
    const bool ok = sum == k * (k + 1) / 2 && count == k + 1;
    out.push_back({"gauss", ok,
                   std::to_string(k * (k + 1) / 2) + "," + std::to_string(k + 1),
                   std::to_string(sum) + "," + std::to_string(count)});
  }
  return out;
}

SignedMeasure random_measure(std::mt19937_64& rng, std::size_t max_support) {
  std::uniform_int_distribution<std::int64_t> weight(0, 5);
  std::uniform_int_distribution<std::int64_t> coord(-5, 5);
  std::uniform_int_distribution<long> mult(1, 9);
  std::uniform_int_distribution<std::size_t> support(1, std::max<std::size_t>(1, max_support));
  const std::int64_t m = weight(rng);
  const std::int64_t n = weight(rng);
  SignedMeasure mu(HighestWeight(m, n));
  const std::size_t atoms = support(rng);
  for (std::size_t i = 0; i < atoms; ++i) {
    const WeightCoord w{coord(rng), coord(rng)};
    const long c = mult(rng);
    if (mu.at(w) == 0) mu.add(w, c);
  }
  return mu;
}

Grid parse_grid(std::string_view text) {
  static const std::regex pattern(R"(\s*m\s*<=\s*(\d+)\s*,\s*n\s*<=\s*(\d+)\s*,\s*N\s*<=\s*(\d+)\s*)");
  std::cmatch match;
  if (!std::regex_match(text.begin(), text.end(), match, pattern)) {
    throw std::invalid_argument("grid must look like \"m<=A,n<=B,N<=C\", got \"" + std::string(text) + "\"");
  }
  try {
    return Grid{std::stoll(match[1].str()), std::stoll(match[2].str()), std::stoll(match[3].str())};
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("grid bound out of range");
  }
}

const std::vector<std::string>& closed_form_quantities() {
  static const std::vector<std::string> q{"dim",        "expected_degree", "snake",
                                          "recurrence", "variance_finite", "qchar",
                                          "max_degree", "sigma_symmetry"};
  return q;
}

VerifyReport run_verify(const VerifyOptions& options) {
  const auto& faults = closed_form_quantities();
  if (!options.inject_fault.empty() &&
      std::find(faults.begin(), faults.end(), options.inject_fault) == faults.end()) {
    throw std::invalid_argument("cannot inject a fault into '" + options.inject_fault + "'");
  }

  struct Cell {
    std::int64_t m, n;
    int j;
  };
  std::vector<Cell> cells;
  for (std::int64_t m = 0; m <= options.grid.max_m; ++m) {
    for (std::int64_t n = 0; n <= options.grid.max_n; ++n) {
      for (int j = 0; j < 2; ++j) cells.push_back({m, n, j});
    }
  }

  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      CellRunner(options, results[i]).run(cells[i].m, cells[i].n, cells[i].j);
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CellResult global;
  global.record_all(gauss_convention_checks(-20, 20), "convention");
  for (const auto& r : results) {
    for (std::size_t q = 0; q < r.passed.size(); ++q) {
      global.passed[q] += r.passed[q];
      global.failed[q] += r.failed[q];
    }
    if (!global.first && r.first) global.first = r.first;
  }

  VerifyReport report;
  report.grid = options.grid;
  report.first_failure = global.first;
  for (std::size_t q = 0; q < quantity_order().size(); ++q) {
    report.tallies.push_back({quantity_order()[q], global.passed[q], global.failed[q]});
  }
  return report;
}

std::string VerifyReport::render() const {
  std::ostringstream out;
  out << "grid: m<=" << grid.max_m << ",n<=" << grid.max_n << ",N<=" << grid.max_N << "\n";
  char line[128];
  std::snprintf(line, sizeof line, "%-16s %12s %8s\n", "quantity", "passed", "failed");
  out << line;
  std::uint64_t passed = 0, failed = 0;
  for (const auto& t : tallies) {
    std::snprintf(line, sizeof line, "%-16s %12llu %8llu\n", t.quantity.c_str(),
                  static_cast<unsigned long long>(t.passed), static_cast<unsigned long long>(t.failed));
    out << line;
    passed += t.passed;
    failed += t.failed;
  }
  std::snprintf(line, sizeof line, "%-16s %12llu %8llu\n", "total",
                static_cast<unsigned long long>(passed), static_cast<unsigned long long>(failed));
  out << line;
  if (first_failure) {
    out << "first failure: " << first_failure->where << ",quantity=" << first_failure->quantity
        << " expected=" << first_failure->expected << " actual=" << first_failure->actual << "\n";
  }
  out << "status: " << (ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace demazure
