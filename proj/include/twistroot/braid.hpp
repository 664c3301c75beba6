#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twistroot/autos.hpp"

namespace twistroot {

// One Artin generator occurrence: s_i or s_i^-1, 1 <= i <= strands-1.
struct BraidLetter {
  std::uint32_t index = 1;
  std::int8_t sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word in the braid group B_strands, stored verbatim (no reduction).
class BraidWord {
public:
  BraidWord() = default;
  BraidWord(std::size_t strands, std::vector<BraidLetter> letters);

  std::size_t strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  std::size_t strands_ = 2;
  std::vector<BraidLetter> letters_;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& b);
BraidWord repeat(const BraidWord& b, std::size_t k);

// Total letters the free-group images may occupy during one verification.
// Composition aborts with ResourceLimit once the running automorphism
// exceeds the budget, so runaway growth fails fast instead of thrashing.
struct LetterBudget {
  std::size_t max_total_letters = 10'000'000;
};

// s1 s1 s2 s3 ... sk in B_{k+1}: the k-chain word whose k-th power is
// central. Requires k >= 1.
BraidWord chain_word(std::size_t k);

// (s1 s2 ... s_{n-1})^n in B_n, the full twist. Requires n >= 2.
BraidWord full_twist(std::size_t n);

// Action on F_strands:
//   s_i:  x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,  others fixed.
// Concatenation maps to composition (compose(f, g) = f after g).
Automorphism artin_automorphism(const BraidWord& b, const LetterBudget& budget = {});

// f^k for the Artin image of b, composed iteratively with free reduction
// after every step (the braid word itself is never expanded).
Automorphism artin_power(const BraidWord& b, std::size_t k, const LetterBudget& budget = {});

// artin(chain_word(k))^k == artin(full_twist(k+1)).
bool verify_chain_relation(std::size_t k, const LetterBudget& budget = {});

// artin(full_twist(k+1)) commutes with the image of every s_i, i <= k.
bool verify_centrality(std::size_t k, const LetterBudget& budget = {});

// Text form "s1 s1 s2 s3^-1"; parser accepts the same grammar.
std::string render(const BraidWord& b);
BraidWord parse_braid(std::size_t strands, const std::string& text);

}  // namespace twistroot
