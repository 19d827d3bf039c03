#ifndef QSEMI_PERMUTATION_HPP_
#define QSEMI_PERMUTATION_HPP_

#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <cstdint>     // for uint8_t
#include <functional>  // for hash
#include <span>        // for span
#include <string>      // for string
#include <vector>      // for vector

namespace qsemi {

  //! Points of {1, ..., n} and letters of the free monoid share this type.
  using letter_type = std::uint8_t;

  //! Largest supported degree.
  inline constexpr std::size_t max_degree = 252;

  //! A bijection of {1, ..., n}.
  //!
  //! Points are 1-based everywhere in the interface: `p(i)` is the image of
  //! the point `i`, and `images()[i - 1] == p(i)`. Composition follows
  //! `(a * b)(x) == a(b(x))`.
  class Permutation {
   public:
    Permutation() = default;

    //! Throws InvalidArgument unless \p images is a bijection of {1..n}.
    explicit Permutation(std::vector<letter_type> images);

    static Permutation identity(std::size_t n);

    //! Builds a permutation from disjoint cycles of 1-based points; points
    //! not mentioned are fixed.
    static Permutation
    from_cycles(std::size_t n, std::vector<std::vector<std::size_t>> const& cycles);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    //! Image of the 1-based point \p i (unchecked).
    [[nodiscard]] letter_type operator()(std::size_t i) const noexcept {
      return _images[i - 1];
    }

    [[nodiscard]] std::span<letter_type const> images() const noexcept {
      return _images;
    }

    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] bool        is_identity() const noexcept;
    [[nodiscard]] std::size_t number_of_fixed_points() const noexcept;

    //! Cycle notation with space separated points, e.g. "(1 2 3 4)(5 6 7 8)";
    //! the identity is "()".
    [[nodiscard]] std::string cycle_string() const;

    //! Comma separated image table, e.g. "2,3,4,1".
    [[nodiscard]] std::string image_string() const;

    friend Permutation operator*(Permutation const& a, Permutation const& b);

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<letter_type> _images;
  };

  //! Hash of a letter sequence; shared by permutations and words.
  [[nodiscard]] std::size_t hash_letters(std::span<letter_type const> s) noexcept;

}  // namespace qsemi

template <>
struct std::hash<qsemi::Permutation> {
  std::size_t operator()(qsemi::Permutation const& p) const noexcept {
    return qsemi::hash_letters(p.images());
  }
};

#endif  // QSEMI_PERMUTATION_HPP_
