#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace demazure {

enum class Generator { S0, S1, Sigma };

/// Word in {s0, s1, sigma}. Letters are stored leftmost first; as an
/// operator the word acts right to left, so the rightmost letter is applied
/// to delta_Lambda first.
class WeylWord {
 public:
  WeylWord() = default;
  explicit WeylWord(std::vector<Generator> letters) : letters_(std::move(letters)) {}

  std::span<const Generator> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Whitespace-separated tokens "s0 s1 sigma", leftmost first.
  std::string to_string() const;

  /// Inverse of to_string; throws std::invalid_argument on unknown tokens.
  static WeylWord parse(std::string_view text);

  friend bool operator==(const WeylWord&, const WeylWord&) = default;

 private:
  std::vector<Generator> letters_;
};

std::string_view to_string(Generator g);

/// w_{N,j}: the alternating word of length N whose rightmost letter is s_j.
WeylWord standard_word(std::int64_t N, int j);

/// (sigma s_j)^N, normalized to sigma^(N mod 2) w_{N,j}.
WeylWord extended_word(std::int64_t N, int j);

/// Number of reflection letters; sigma does not count.
std::int64_t word_length(const WeylWord& w);

}  // namespace demazure
