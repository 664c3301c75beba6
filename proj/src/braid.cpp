#include "twistroot/braid.hpp"

#include <cctype>
#include <sstream>

namespace twistroot {

namespace {

void check_letter(std::size_t strands, BraidLetter l) {
  if (l.index == 0 || l.index + 1 > strands) {
    throw RankViolation("braid generator s" + std::to_string(l.index) + " outside B_" +
                        std::to_string(strands));
  }
  if (l.sign != 1 && l.sign != -1) throw RankViolation("braid letter sign must be +1 or -1");
}

void check_budget(const Endomorphism& f, const LetterBudget& budget) {
  if (f.total_image_length() > budget.max_total_letters) {
    throw ResourceLimit("free-group images exceed the letter budget of " +
                        std::to_string(budget.max_total_letters));
  }
}

// Images of one Artin generator (or its inverse) as an endomorphism.
Endomorphism generator_action(std::size_t n, BraidLetter l) {
  std::vector<Word> images;
  images.reserve(n);
  for (std::uint32_t j = 1; j <= n; ++j) images.push_back(generator(n, j));
  int i = static_cast<int>(l.index);
  if (l.sign > 0) {
    images[l.index - 1] = word_from_ints(n, {i, i + 1, -i});
    images[l.index] = word_from_ints(n, {i});
  } else {
    images[l.index - 1] = word_from_ints(n, {i + 1});
    images[l.index] = word_from_ints(n, {-(i + 1), i, i + 1});
  }
  return Endomorphism(n, std::move(images));
}

Endomorphism artin_endomorphism(const BraidWord& b, const LetterBudget& budget) {
  Endomorphism acc = Endomorphism::identity(b.strands());
  for (BraidLetter l : b.letters()) {
    acc = compose(acc, generator_action(b.strands(), l));
    check_budget(acc, budget);
  }
  return acc;
}

}  // namespace

BraidWord::BraidWord(std::size_t strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw UnsupportedRank("braid groups need at least 2 strands");
  for (BraidLetter l : letters_) check_letter(strands_, l);
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw RankMismatch("concat of braids on " + std::to_string(a.strands()) + " and " +
                       std::to_string(b.strands()) + " strands");
  }
  std::vector<BraidLetter> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(ls));
}

BraidWord invert(const BraidWord& b) {
  std::vector<BraidLetter> ls;
  ls.reserve(b.length());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    ls.push_back(BraidLetter{it->index, static_cast<std::int8_t>(-it->sign)});
  }
  return BraidWord(b.strands(), std::move(ls));
}

BraidWord repeat(const BraidWord& b, std::size_t k) {
  std::vector<BraidLetter> ls;
  ls.reserve(b.length() * k);
  for (std::size_t i = 0; i < k; ++i) ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return BraidWord(b.strands(), std::move(ls));
}

BraidWord chain_word(std::size_t k) {
  if (k < 1) throw UnsupportedRank("chain words need k >= 1");
  std::vector<BraidLetter> ls;
  ls.push_back(BraidLetter{1, 1});
  for (std::uint32_t i = 1; i <= k; ++i) ls.push_back(BraidLetter{i, 1});
  return BraidWord(k + 1, std::move(ls));
}

BraidWord full_twist(std::size_t n) {
  if (n < 2) throw UnsupportedRank("the full twist needs n >= 2 strands");
  std::vector<BraidLetter> ls;
  ls.reserve(n * (n - 1));
  for (std::size_t rep = 0; rep < n; ++rep) {
    for (std::uint32_t i = 1; i + 1 <= n; ++i) ls.push_back(BraidLetter{i, 1});
  }
  return BraidWord(n, std::move(ls));
}

Automorphism artin_automorphism(const BraidWord& b, const LetterBudget& budget) {
  return Automorphism(artin_endomorphism(b, budget), artin_endomorphism(invert(b), budget));
}

Automorphism artin_power(const BraidWord& b, std::size_t k, const LetterBudget& budget) {
  Automorphism base = artin_automorphism(b, budget);
  Automorphism acc = Automorphism::identity(b.strands());
  for (std::size_t i = 0; i < k; ++i) {
    acc = compose(acc, base);
    check_budget(acc.forward(), budget);
    check_budget(acc.inverse(), budget);
  }
  return acc;
}

bool verify_chain_relation(std::size_t k, const LetterBudget& budget) {
  Automorphism lhs = artin_power(chain_word(k), k, budget);
  Automorphism rhs = artin_automorphism(full_twist(k + 1), budget);
  return lhs == rhs;
}

bool verify_centrality(std::size_t k, const LetterBudget& budget) {
  if (k < 1) throw UnsupportedRank("centrality check needs k >= 1");
  const std::size_t n = k + 1;
  Automorphism twist = artin_automorphism(full_twist(n), budget);
  for (std::uint32_t i = 1; i <= k; ++i) {
    Automorphism gen = artin_automorphism(BraidWord(n, {BraidLetter{i, 1}}), budget);
    if (compose(twist, gen) != compose(gen, twist)) return false;
  }
  return true;
}

std::string render(const BraidWord& b) {
  std::ostringstream out;
  const auto& ls = b.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long exp = static_cast<long long>(j - i) * ls[i].sign;
    if (i > 0) out << ' ';
    out << 's' << ls[i].index;
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

BraidWord parse_braid(std::size_t strands, const std::string& text) {
  std::vector<BraidLetter> ls;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) {
      ++pos;
    }
  };
  auto integer = [&]() -> long long {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected integer at offset " + std::to_string(start));
    return std::stoll(text.substr(start, pos - start));
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != 's' && text[pos] != 'S') {
      throw ParseError(std::string("expected 's' at offset ") + std::to_string(pos));
    }
    ++pos;
    long long index = integer();
    if (index <= 0) throw ParseError("braid generator index must be positive");
    long long exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = integer();
    }
    BraidLetter base{static_cast<std::uint32_t>(index),
                     static_cast<std::int8_t>(exp >= 0 ? 1 : -1)};
    for (long long c = 0; c < (exp < 0 ? -exp : exp); ++c) ls.push_back(base);
    skip();
  }
  return BraidWord(strands, std::move(ls));
}

}  // namespace twistroot
