#ifndef QSEMI_SAMPLING_HPP_
#define QSEMI_SAMPLING_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <random>   // for mt19937_64

#include "quaternion.hpp"  // for GroupTable
#include "word.hpp"        // for Word

namespace qsemi {

  //! Seeded random words. biased() splices in pieces of relation words so
  //! that sampled words actually contain relation factors; a uniformly
  //! random length-n window is almost never one.
  class WordGenerator {
   public:
    //! \p relations may be null, in which case biased() == uniform letters.
    WordGenerator(GroupTable const* relations, std::size_t alphabet, std::uint64_t seed)
        : _relations(relations), _alphabet(alphabet), _rng(seed) {}

    //! Uniform in [0, bound).
    std::size_t below(std::size_t bound) {
      return std::uniform_int_distribution<std::size_t>(0, bound - 1)(_rng);
    }

    Word uniform(std::size_t len);

    //! Length uniform in [0, max_len].
    Word biased(std::size_t max_len);

    //! Exactly \p len letters.
    Word biased_exact(std::size_t len);

   private:
    GroupTable const* _relations;
    std::size_t       _alphabet;
    std::mt19937_64   _rng;
  };

}  // namespace qsemi

#endif  // QSEMI_SAMPLING_HPP_
