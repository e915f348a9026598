#include "demazure/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "demazure/lattice.hpp"

namespace demazure {

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::S0: return "s0";
    case Generator::S1: return "s1";
    case Generator::Sigma: return "sigma";
  }
  return "?";
}

std::string WeylWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += demazure::to_string(letters_[i]);
  }
  return out;
}

WeylWord WeylWord::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Generator> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "s0") {
      letters.push_back(Generator::S0);
    } else if (tok == "s1") {
      letters.push_back(Generator::S1);
    } else if (tok == "sigma") {
      letters.push_back(Generator::Sigma);
    } else {
      throw std::invalid_argument("unknown generator '" + tok + "'");
    }
  }
  return WeylWord(std::move(letters));
}

WeylWord standard_word(std::int64_t N, int j) {
  check_node(j);
  if (N < 0) throw std::invalid_argument("word length must be nonnegative");
  // Position i from the right carries s_j for even i, s_{1-j} for odd i.
  std::vector<Generator> letters(static_cast<std::size_t>(N));
  for (std::int64_t i = 0; i < N; ++i) {
    const bool own = (i % 2 == 0);
    const int node = own ? j : 1 - j;
    letters[static_cast<std::size_t>(N - 1 - i)] = node == 0 ? Generator::S0 : Generator::S1;
  }
  return WeylWord(std::move(letters));
}

WeylWord extended_word(std::int64_t N, int j) {
  WeylWord base = standard_word(N, j);
  if (N % 2 == 0) return base;
  std::vector<Generator> letters{Generator::Sigma};
  letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return WeylWord(std::move(letters));
}

std::int64_t word_length(const WeylWord& w) {
  return std::count_if(w.letters().begin(), w.letters().end(),
                       [](Generator g) { return g != Generator::Sigma; });
}

}  // namespace demazure
