#include "twistroot/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace twistroot {

namespace {

void check_index(std::size_t rank, Letter l) {
  if (l.index == 0 || l.index > rank) {
    throw RankViolation("letter index " + std::to_string(l.index) +
                        " outside rank " + std::to_string(rank));
  }
  if (l.sign != 1 && l.sign != -1) {
    throw RankViolation("letter sign must be +1 or -1");
  }
}

void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

Word reduce(std::size_t rank, const std::vector<Letter>& letters) {
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_index(rank, l);
    push_reduced(w.letters_, l);
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) {
    throw RankMismatch("concat of words of rank " + std::to_string(a.rank()) +
                       " and " + std::to_string(b.rank()));
  }
  Word w(a.rank());
  w.letters_ = a.letters_;
  w.letters_.reserve(a.length() + b.length());
  // Both inputs are reduced, so cancellation only happens at the seam.
  for (Letter l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

Word invert(const Word& w) {
  Word r(w.rank());
  r.letters_.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    r.letters_.push_back(inverse(*it));
  }
  return r;
}

bool is_freely_reduced(std::size_t rank, const std::vector<Letter>& letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].index == 0 || letters[i].index > rank) return false;
    if (letters[i].sign != 1 && letters[i].sign != -1) return false;
    if (i + 1 < letters.size() && letters[i].index == letters[i + 1].index &&
        letters[i].sign == -letters[i + 1].sign) {
      return false;
    }
  }
  return true;
}

Word word_from_ints(std::size_t rank, const std::vector<int>& signed_indices) {
  std::vector<Letter> ls;
  ls.reserve(signed_indices.size());
  for (int v : signed_indices) {
    if (v == 0) throw RankViolation("0 is not a signed generator index");
    ls.push_back(Letter{static_cast<std::uint32_t>(std::abs(v)),
                        static_cast<std::int8_t>(v > 0 ? 1 : -1)});
  }
  return reduce(rank, ls);
}

Word generator(std::size_t rank, std::uint32_t index, int sign) {
  return reduce(rank, {Letter{index, static_cast<std::int8_t>(sign >= 0 ? 1 : -1)}});
}

std::string render(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  // Runs of equal letters collapse into one power term.
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long exp = static_cast<long long>(j - i) * ls[i].sign;
    if (i > 0) out << '*';
    out << 'x' << ls[i].index;
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  long long integer() {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
      throw ParseError("expected integer at offset " + std::to_string(start));
    }
    return std::stoll(text.substr(start, pos - start));
  }
};

}  // namespace

Word parse_word(std::size_t rank, const std::string& text) {
  Cursor c{text};
  std::vector<Letter> ls;
  bool first = true;
  while (!c.done()) {
    if (!first) {
      if (c.peek() == '*') {
        ++c.pos;
        if (c.done()) throw ParseError("dangling '*' in word");
      }
      // '*' separators are optional; whitespace alone also separates terms.
    }
    c.skip_space();
    if (first && c.peek() == '1') {
      ++c.pos;
      if (!c.done()) throw ParseError("'1' must be the whole word");
      break;
    }
    if (c.peek() != 'x' && c.peek() != 'X') {
      throw ParseError(std::string("expected 'x' at offset ") + std::to_string(c.pos));
    }
    ++c.pos;
    long long index = c.integer();
    if (index <= 0) throw ParseError("generator index must be positive");
    long long exp = 1;
    c.skip_space();
    if (c.pos < c.text.size() && c.peek() == '^') {
      ++c.pos;
      exp = c.integer();
    }
    Letter base{static_cast<std::uint32_t>(index), static_cast<std::int8_t>(exp >= 0 ? 1 : -1)};
    for (long long k = 0; k < std::llabs(exp); ++k) ls.push_back(base);
    first = false;
  }
  return reduce(rank, ls);
}

}  // namespace twistroot
