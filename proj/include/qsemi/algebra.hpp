#ifndef QSEMI_ALGEBRA_HPP_
#define QSEMI_ALGEBRA_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t, uint64_t
#include <map>       // for map
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "quaternion.hpp"  // for GroupTable
#include "rewrite.hpp"     // for Normalizer
#include "sampling.hpp"    // for WordGenerator
#include "word.hpp"        // for Word

namespace qsemi {

  //! Element of the monoid algebra F_p[M] for a monoid M given by a
  //! Normalizer. Keys are normal forms, coefficients lie in [1, p).
  class AlgebraElement {
   public:
    using coefficient_type = std::uint32_t;
    using terms_type       = std::map<Word, coefficient_type>;

    //! The zero element. Throws InvalidArgument unless p is a prime below
    //! 2^16 (so products of coefficients fit in 32 bits).
    explicit AlgebraElement(coefficient_type p = 2);

    //! Sum of c * w over \p terms, normalising every word with \p nf.
    static AlgebraElement
    from_terms(std::vector<std::pair<std::uint64_t, Word>> const& terms,
               coefficient_type                                p,
               Normalizer const&                               nf);

    [[nodiscard]] coefficient_type modulus() const noexcept {
      return _p;
    }
    [[nodiscard]] terms_type const& terms() const noexcept {
      return _terms;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _terms.empty();
    }
    [[nodiscard]] std::size_t support_size() const noexcept {
      return _terms.size();
    }

    //! Adds c * w; \p w must already be a normal form.
    void add_term(Word const& w, std::uint64_t c);

    AlgebraElement& operator+=(AlgebraElement const& that);
    AlgebraElement& scale(std::uint64_t c);

    friend AlgebraElement operator+(AlgebraElement x, AlgebraElement const& y) {
      return x += y;
    }
    friend bool operator==(AlgebraElement const&, AlgebraElement const&) = default;

   private:
    void check_same_modulus(AlgebraElement const& that) const;

    coefficient_type _p;
    terms_type       _terms;
  };

  [[nodiscard]] bool is_prime(std::uint64_t p) noexcept;

  //! Bilinear extension of concatenation. Throws InvalidArgument if the
  //! moduli differ.
  [[nodiscard]] AlgebraElement
  algebra_mul(AlgebraElement const& x, AlgebraElement const& y, Normalizer const& nf);

  //! "c*1,2,3 + c*2,1,3"; "0" for zero and "c*" for a multiple of the
  //! identity. Terms are listed in key order.
  [[nodiscard]] std::string to_string(AlgebraElement const& x);

  //! Inverse of to_string. Also accepts '-' between terms (coefficient
  //! negated mod p) and a bare word with implicit coefficient 1.
  [[nodiscard]] AlgebraElement
  parse_element(std::string const& text, AlgebraElement::coefficient_type p, Normalizer const& nf);

  struct ZeroDivisorConfig {
    AlgebraElement::coefficient_type p           = 2;
    std::size_t                      trials      = 10'000;
    std::size_t                      max_support = 3;
    std::size_t                      max_len     = 10;
    std::uint64_t                    seed        = 0;
    //! Words are drawn with relation words spliced in when this is set.
    GroupTable const* relations = nullptr;
  };

  struct ZeroDivisorResult {
    std::size_t trials = 0;
    //! Products whose support was smaller than |supp x| * |supp y|.
    std::size_t                                          collisions = 0;
    std::optional<std::pair<AlgebraElement, AlgebraElement>> witness;
    std::optional<std::size_t>                           witness_trial;
  };

  //! Samples nonzero pairs (x, y) and reports the first one, by trial index,
  //! with x * y = 0.
  [[nodiscard]] ZeroDivisorResult zero_divisor_search(Normalizer const&        nf,
                                                      ZeroDivisorConfig const& cfg);

  //! Random element with support at most \p max_support and words of length
  //! at most \p max_len, or exactly \p max_len if \p homogeneous. May be
  //! zero when terms cancel.
  [[nodiscard]] AlgebraElement random_element(WordGenerator&                   gen,
                                              AlgebraElement::coefficient_type p,
                                              std::size_t                      max_support,
                                              std::size_t                      max_len,
                                              Normalizer const&                nf,
                                              bool homogeneous = false);

}  // namespace qsemi

#endif  // QSEMI_ALGEBRA_HPP_
