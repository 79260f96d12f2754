#ifndef AUTGRP_PERMUTATION_HPP_
#define AUTGRP_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace autgrp {

// Letters are 1..d throughout the library.
using Letter = std::uint32_t;

// A bijection of {1..d}. images()[i - 1] is the image of letter i.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  // Throws Error(letter_out_of_range | repeated_letter) unless `images` is a
  // bijection of {1..images.size()}.
  static Permutation from_images(std::vector<Letter> images);

  // Builds a permutation from disjoint cycles; letters not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Letter>> const& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::vector<Letter> const& images() const noexcept { return images_; }

  Letter operator()(Letter x) const { return images_[x - 1]; }

  bool is_identity() const noexcept;

  // Canonical cycles: fixed points omitted, each cycle starts at its minimum,
  // cycles sorted by their minimum.
  std::vector<std::vector<Letter>> cycles() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  explicit Permutation(std::vector<Letter> images) : images_(std::move(images)) {}

  std::vector<Letter> images_;
};

// Left factor acts first: compose(p, q)(i) == q(p(i)).
Permutation compose(Permutation const& p, Permutation const& q);

Permutation invert(Permutation const& p);

// Accepts `id` or cycles such as `(1324)` or `(12)(34)`. Letters inside a
// cycle are single digits, or comma separated (`(1,10,3)`) for d > 9.
Permutation parse_permutation(std::string_view text, std::size_t degree);

// Canonical form, `id` for the identity.
std::string to_string(Permutation const& p);

}  // namespace autgrp

#endif  // AUTGRP_PERMUTATION_HPP_
