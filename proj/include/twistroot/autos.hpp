#pragma once

#include <string>
#include <vector>

#include "twistroot/matrix.hpp"
#include "twistroot/words.hpp"

namespace twistroot {

// Endomorphism of F_rank given by the images of the generators.
// images[i-1] is the image of x_i; every image is a reduced word of the
// same rank.
class Endomorphism {
public:
  Endomorphism() = default;
  Endomorphism(std::size_t rank, std::vector<Word> images);

  static Endomorphism identity(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::uint32_t generator_index) const;

  // Sum of image lengths; the braid layer budgets against this.
  std::size_t total_image_length() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

private:
  std::size_t rank_ = 0;
  std::vector<Word> images_;
};

// Substitutes images into w and reduces.
Word apply(const Endomorphism& f, const Word& w);

// compose(f, g) = f after g: apply(compose(f,g), w) == apply(f, apply(g, w)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

// An endomorphism bundled with a verified two-sided inverse. Construction
// checks both compositions against the identity and throws
// ConstructionInconsistency otherwise, so holding an Automorphism is proof
// of invertibility.
class Automorphism {
public:
  Automorphism(Endomorphism forward, Endomorphism inverse);

  static Automorphism identity(std::size_t rank);

  std::size_t rank() const { return forward_.rank(); }
  const Endomorphism& forward() const { return forward_; }
  const Endomorphism& inverse() const { return inverse_; }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.forward_ == b.forward_;
  }

private:
  Endomorphism forward_;
  Endomorphism inverse_;
};

Word apply(const Automorphism& f, const Word& w);
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism invert(const Automorphism& f);

// f^k; negative k powers the inverse. power(f, 0) is the identity.
Automorphism power(const Automorphism& f, long long k);

// Matrix of the induced map on Z^rank: column i holds the exponent-sum
// vector of the image of x_i, so abelianize(compose(f,g)) =
// abelianize(f) * abelianize(g).
IntegerMatrix abelianize(const Endomorphism& f);
IntegerMatrix abelianize(const Automorphism& f);

// Square root of the standard Nielsen map x1 -> x1*x2 on F_n, n >= 3:
//   x1 -> x1*x3,  x2 -> x3^-1*x2*x3,  x3 -> x3^-1*x2,  x_k -> x_k (k > 3).
// Throws UnsupportedRank for n < 3.
Automorphism nielsen_root(std::size_t n);

// The standard Nielsen automorphism x1 -> x1*x2 (other generators fixed).
Automorphism nielsen_transformation(std::size_t n);

// Fixture grammar: one generator image per line, in the word grammar.
std::string render(const Endomorphism& f);
Endomorphism parse_endomorphism(std::size_t rank, const std::string& text);

}  // namespace twistroot
