// Negative controls shared by the unit tests and the acceptance binary.

#ifndef QSEMI_TESTS_CONTROLS_HPP_
#define QSEMI_TESTS_CONTROLS_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "qsemi/permutation.hpp"  // for Permutation
#include "qsemi/quaternion.hpp"   // for GroupTable
#include "qsemi/rewrite.hpp"      // for Normalizer
#include "qsemi/word.hpp"         // for Word

namespace qsemi::testing {

  // Regular representation of the cyclic group of order n.
  inline GroupTable cyclic_table(std::size_t n) {
    std::vector<std::size_t> cycle;
    for (std::size_t i = 1; i <= n; ++i) {
      cycle.push_back(i);
    }
    Permutation const        c = Permutation::from_cycles(n, {cycle});
    std::vector<Permutation> elts{Permutation::identity(n)};
    for (std::size_t i = 1; i < n; ++i) {
      elts.push_back(c * elts.back());
    }
    return GroupTable::from_elements(std::move(elts));
  }

  // g with its element at \p index replaced by the transposition (a b).
  inline GroupTable
  with_transposition(GroupTable const& g, std::size_t index, std::size_t a, std::size_t b) {
    std::vector<Permutation> elts(g.elements().begin(), g.elements().end());
    elts[index] = Permutation::from_cycles(g.degree(), {{a, b}});
    return GroupTable::from_elements(std::move(elts));
  }

  // Free monoid on 2 letters modulo a_1 = a_2 and a_1^2 = a_1: every
  // nonempty word collapses to (1). Over F_2, a * (1 + a) = a + a = 0.
  class CollapsingQuotient final : public Normalizer {
   public:
    std::size_t alphabet_size() const override {
      return 2;
    }
    Word normal_form(Word const& w) const override {
      return w.empty() ? Word{} : Word{1};
    }
  };

}  // namespace qsemi::testing

#endif  // QSEMI_TESTS_CONTROLS_HPP_
