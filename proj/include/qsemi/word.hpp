#ifndef QSEMI_WORD_HPP_
#define QSEMI_WORD_HPP_

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <initializer_list>  // for initializer_list
#include <span>              // for span
#include <string>            // for string
#include <string_view>       // for string_view
#include <vector>            // for vector

#include "permutation.hpp"  // for letter_type, hash_letters

namespace qsemi {

  //! An element of the free monoid on x_1, ..., x_n; letter j stands for x_j.
  //! Words compare lexicographically.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<letter_type> letters) : _letters(letters) {}
    explicit Word(std::vector<letter_type> letters)
        : _letters(std::move(letters)) {}
    explicit Word(std::span<letter_type const> letters)
        : _letters(letters.begin(), letters.end()) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    //! 0-based access to the letter at position i + 1.
    [[nodiscard]] letter_type operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    [[nodiscard]] std::span<letter_type const> letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] auto begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _letters.end();
    }

    //! Factor of length \p len starting at 0-based offset \p first.
    [[nodiscard]] std::span<letter_type const> factor(std::size_t first,
                                                      std::size_t len) const {
      return std::span<letter_type const>(_letters).subspan(first, len);
    }

    //! Largest letter, 0 for the empty word.
    [[nodiscard]] letter_type max_letter() const noexcept;

    Word& operator+=(Word const& other) {
      _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
      return *this;
    }
    friend Word operator+(Word a, Word const& b) {
      a += b;
      return a;
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<letter_type> _letters;
  };

  //! Sequence concatenation, the monoid operation of FM_n.
  [[nodiscard]] inline Word concat(Word const& a, Word const& b) {
    return a + b;
  }

  //! Shorter words first, then lexicographic.
  [[nodiscard]] bool shortlex_less(Word const& a, Word const& b) noexcept;

  //! Reverses \p w and relabels each letter j as n + 1 - j.
  [[nodiscard]] Word mirror(Word const& w, std::size_t n);

  //! Comma separated 1-based letters, e.g. "1,2,3"; the empty word is "".
  [[nodiscard]] std::string to_string(Word const& w);

  //! Inverse of to_string; throws InvalidArgument on malformed input or on a
  //! letter outside {1, ..., n}.
  [[nodiscard]] Word parse_word(std::string_view text, std::size_t n);

}  // namespace qsemi

template <>
struct std::hash<qsemi::Word> {
  std::size_t operator()(qsemi::Word const& w) const noexcept {
    return qsemi::hash_letters(w.letters());
  }
};

#endif  // QSEMI_WORD_HPP_
