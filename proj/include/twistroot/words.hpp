#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twistroot/errors.hpp"

namespace twistroot {

// One letter of a free-group word: generator index (1-based) and sign.
// Kept as an explicit pair so that x3 and x3^-1 share an index.
struct Letter {
  std::uint32_t index = 1;  // 1..rank
  std::int8_t sign = 1;     // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return Letter{l.index, static_cast<std::int8_t>(-l.sign)}; }

// A freely reduced word in F_rank. The empty word is the identity.
// Instances are always reduced: the factory functions below enforce it,
// so equality of reduced letter sequences is equality in the group.
class Word {
public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

private:
  friend Word reduce(std::size_t rank, const std::vector<Letter>& letters);
  friend Word concat(const Word& a, const Word& b);
  friend Word invert(const Word& w);

  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence: one left-to-right pass
// over a stack. Throws RankViolation if a letter index is 0 or > rank.
Word reduce(std::size_t rank, const std::vector<Letter>& letters);

// Reduced product. Ranks must agree.
Word concat(const Word& a, const Word& b);

// Reversed letters with flipped signs; reduced by construction.
Word invert(const Word& w);

// True iff the sequence contains no adjacent cancelling pair and all
// indices lie in 1..rank. Used as a validity predicate in tests.
bool is_freely_reduced(std::size_t rank, const std::vector<Letter>& letters);

// Convenience builders.
Word word_from_ints(std::size_t rank, const std::vector<int>& signed_indices);
Word generator(std::size_t rank, std::uint32_t index, int sign = 1);

// Text form: "x1*x2^-1*x3"; the empty word renders as "1".
std::string render(const Word& w);

// Parses the same grammar, whitespace-insensitive, with integer exponents
// ("x2^-3" expands to three letters). "1" or blank input is the identity.
Word parse_word(std::size_t rank, const std::string& text);

}  // namespace twistroot
