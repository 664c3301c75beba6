#include "twistroot/autos.hpp"

#include <sstream>

namespace twistroot {

Endomorphism::Endomorphism(std::size_t rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (images_.size() != rank_) {
    throw RankMismatch("endomorphism of rank " + std::to_string(rank_) + " needs " +
                       std::to_string(rank_) + " images, got " + std::to_string(images_.size()));
  }
  for (const Word& w : images_) {
    if (w.rank() != rank_) {
      throw RankMismatch("image word has rank " + std::to_string(w.rank()) +
                         ", expected " + std::to_string(rank_));
    }
  }
}

Endomorphism Endomorphism::identity(std::size_t rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (std::uint32_t i = 1; i <= rank; ++i) images.push_back(generator(rank, i));
  return Endomorphism(rank, std::move(images));
}

const Word& Endomorphism::image(std::uint32_t generator_index) const {
  if (generator_index == 0 || generator_index > rank_) {
    throw RankViolation("generator index " + std::to_string(generator_index) +
                        " outside rank " + std::to_string(rank_));
  }
  return images_[generator_index - 1];
}

std::size_t Endomorphism::total_image_length() const {
  std::size_t total = 0;
  for (const Word& w : images_) total += w.length();
  return total;
}

Word apply(const Endomorphism& f, const Word& w) {
  if (f.rank() != w.rank()) {
    throw RankMismatch("applying rank-" + std::to_string(f.rank()) + " map to rank-" +
                       std::to_string(w.rank()) + " word");
  }
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& img = f.image(l.index);
    if (l.sign > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        out.push_back(inverse(*it));
      }
    }
  }
  return reduce(f.rank(), out);
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank() != g.rank()) {
    throw RankMismatch("composing maps of ranks " + std::to_string(f.rank()) + " and " +
                       std::to_string(g.rank()));
  }
  std::vector<Word> images;
  images.reserve(g.rank());
  for (const Word& w : g.images()) images.push_back(apply(f, w));
  return Endomorphism(f.rank(), std::move(images));
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
  if (forward_.rank() != inverse_.rank()) {
    throw RankMismatch("automorphism halves have different ranks");
  }
  const Endomorphism id = Endomorphism::identity(forward_.rank());
  if (compose(forward_, inverse_) != id || compose(inverse_, forward_) != id) {
    throw ConstructionInconsistency("claimed inverse fails to invert the forward map");
  }
}

Automorphism Automorphism::identity(std::size_t rank) {
  return Automorphism(Endomorphism::identity(rank), Endomorphism::identity(rank));
}

Word apply(const Automorphism& f, const Word& w) { return apply(f.forward(), w); }

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  // (f g)^-1 = g^-1 f^-1; the constructor re-verifies the pair.
  return Automorphism(compose(f.forward(), g.forward()), compose(g.inverse(), f.inverse()));
}

Automorphism invert(const Automorphism& f) { return Automorphism(f.inverse(), f.forward()); }

Automorphism power(const Automorphism& f, long long k) {
  Automorphism base = k < 0 ? invert(f) : f;
  Automorphism acc = Automorphism::identity(f.rank());
  long long steps = k < 0 ? -k : k;
  for (long long i = 0; i < steps; ++i) acc = compose(acc, base);
  return acc;
}

IntegerMatrix abelianize(const Endomorphism& f) {
  IntegerMatrix m(f.rank(), f.rank());
  for (std::size_t j = 0; j < f.rank(); ++j) {
    for (Letter l : f.images()[j].letters()) {
      m.at(l.index - 1, j) += l.sign;
    }
  }
  return m;
}

IntegerMatrix abelianize(const Automorphism& f) { return abelianize(f.forward()); }

Automorphism nielsen_root(std::size_t n) {
  if (n < 3) {
    throw UnsupportedRank("the Nielsen square root needs rank >= 3, got " + std::to_string(n));
  }
  std::vector<Word> fwd(n), inv(n);
  fwd[0] = word_from_ints(n, {1, 3});
  fwd[1] = word_from_ints(n, {-3, 2, 3});
  fwd[2] = word_from_ints(n, {-3, 2});
  inv[0] = word_from_ints(n, {1, -2, 3});
  inv[1] = word_from_ints(n, {-3, 2, 3});
  inv[2] = word_from_ints(n, {-3, 2});
  for (std::uint32_t i = 4; i <= n; ++i) {
    fwd[i - 1] = generator(n, i);
    inv[i - 1] = generator(n, i);
  }
  return Automorphism(Endomorphism(n, std::move(fwd)), Endomorphism(n, std::move(inv)));
}

Automorphism nielsen_transformation(std::size_t n) {
  if (n < 2) {
    throw UnsupportedRank("the Nielsen map x1 -> x1*x2 needs rank >= 2");
  }
  std::vector<Word> fwd(n), inv(n);
  fwd[0] = word_from_ints(n, {1, 2});
  inv[0] = word_from_ints(n, {1, -2});
  for (std::uint32_t i = 2; i <= n; ++i) {
    fwd[i - 1] = generator(n, i);
    inv[i - 1] = generator(n, i);
  }
  return Automorphism(Endomorphism(n, std::move(fwd)), Endomorphism(n, std::move(inv)));
}

std::string render(const Endomorphism& f) {
  std::ostringstream out;
  for (const Word& w : f.images()) out << render(w) << '\n';
  return out.str();
}

Endomorphism parse_endomorphism(std::size_t rank, const std::string& text) {
  std::vector<Word> images;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    bool blank = true;
    for (char ch : line) {
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    }
    if (blank) continue;
    images.push_back(parse_word(rank, line));
  }
  if (images.size() != rank) {
    throw ParseError("expected " + std::to_string(rank) + " image lines, got " +
                     std::to_string(images.size()));
  }
  return Endomorphism(rank, std::move(images));
}

}  // namespace twistroot
