#include "demazure/measure.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>
#include <vector>

namespace demazure {

SignedMeasure::SignedMeasure(HighestWeight hw, Map entries) : hw_(hw), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
}

BigInt SignedMeasure::at(WeightCoord w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void SignedMeasure::add(WeightCoord w, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = entries_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) entries_.erase(it);
  }
}

bool SignedMeasure::is_positive() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.second > 0; });
}

std::vector<std::int64_t> ConventionRange::indices() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = first; i <= last; ++i) out.push_back(i);
  return out;
}

ConventionRange convention_sum_bounds(std::int64_t k) {
  if (k >= 0) return {0, k, +1};
  if (k == -1) return {0, -1, +1};
  return {k + 1, -1, -1};
}

SignedMeasure delta(const HighestWeight& hw) {
  SignedMeasure mu(hw);
  mu.add({0, 0}, 1);
  return mu;
}

SignedMeasure apply_demazure(int j, const SignedMeasure& mu) {
  check_node(j);
  const HighestWeight& hw = mu.highest_weight();

  // D_j moves mass along lines of constant b (j = 0) or constant a (j = 1).
  // Each source entry adds a constant over an interval of the line, so the
  // image is accumulated as a difference array per line and prefix-summed.
  struct Event {
    std::int64_t line;
    std::int64_t pos;
    bool negate;
    const BigInt* coeff;
  };
  std::vector<Event> events;
  events.reserve(2 * mu.support_size());
  for (const auto& [w, p] : mu.entries()) {
    const ConventionRange r = convention_sum_bounds(pairing(j, w, hw));
    if (r.empty()) continue;
    const std::int64_t line = j == 0 ? w.b : w.a;
    const std::int64_t base = j == 0 ? w.a : w.b;
    events.push_back({line, base + r.first, r.sign < 0, &p});
    events.push_back({line, base + r.last + 1, r.sign > 0, &p});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& x, const Event& y) { return std::tie(x.line, x.pos) < std::tie(y.line, y.pos); });

  std::vector<std::pair<WeightCoord, BigInt>> image;
  BigInt running = 0;
  for (std::size_t i = 0; i < events.size();) {
    const std::int64_t line = events[i].line, pos = events[i].pos;
    for (; i < events.size() && events[i].line == line && events[i].pos == pos; ++i) {
      if (events[i].negate) {
        running -= *events[i].coeff;
      } else {
        running += *events[i].coeff;
      }
    }
    // A line's running sum returns to zero at its last event.
    if (running == 0 || i == events.size() || events[i].line != line) continue;
    for (std::int64_t p = pos; p < events[i].pos; ++p) {
      image.emplace_back(j == 0 ? WeightCoord{p, line} : WeightCoord{line, p}, running);
    }
  }
  if (j == 0) {
    std::sort(image.begin(), image.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return SignedMeasure(hw, SignedMeasure::Map(std::make_move_iterator(image.begin()),
                                              std::make_move_iterator(image.end())));
}

SignedMeasure apply_sigma(const SignedMeasure& mu) {
  SignedMeasure::Map out;
  for (const auto& [w, p] : mu.entries()) out.emplace(WeightCoord{w.b, w.a}, p);
  return SignedMeasure(flip(mu.highest_weight()), std::move(out));
}

SignedMeasure apply_generator(Generator g, const SignedMeasure& mu) {
  switch (g) {
    case Generator::S0: return apply_demazure(0, mu);
    case Generator::S1: return apply_demazure(1, mu);
    case Generator::Sigma: return apply_sigma(mu);
  }
  return mu;
}

SignedMeasure apply_word(const WeylWord& w, const HighestWeight& hw) {
  SignedMeasure mu = delta(hw);
  auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) mu = apply_generator(*it, mu);
  return mu;
}

std::vector<SignedMeasure> apply_word_trace(const WeylWord& w, const HighestWeight& hw) {
  std::vector<SignedMeasure> trace{delta(hw)};
  auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    trace.push_back(apply_generator(*it, trace.back()));
  }
  return trace;
}

}  // namespace demazure
