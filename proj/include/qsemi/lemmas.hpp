#ifndef QSEMI_LEMMAS_HPP_
#define QSEMI_LEMMAS_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "permutation.hpp"  // for Permutation
#include "quaternion.hpp"   // for GroupTable
#include "rewrite.hpp"      // for RewriteConfig
#include "word.hpp"         // for Word

namespace qsemi {

  // Exhaustive and sampled checks of the combinatorial statements about
  // relation words of S_n(H). Every oracle takes an arbitrary GroupTable, so
  // the same code runs against H, its mirror image and negative controls.
  //
  // The Sym* identifiers are the right-to-left analogs: words read backwards
  // with every index i replaced by n + 1 - i. Rather than transcribing each
  // mirrored statement, the original oracle is run on g.mirrored(), whose
  // relation words are exactly the reversed, relabelled relation words of g.

  enum class LemmaId {
    not_possible,
    max_one,
    big,
    overlapp,
    stepss,
    step3,
    sym_not_possible,
    sym_max_one,
    sym_step3,
    sym_overlapp,
    sym_stepss
  };

  [[nodiscard]] std::string_view lemma_name(LemmaId id) noexcept;

  //! Every quantified variable of a failing instance.
  struct Counterexample {
    std::vector<std::pair<std::string, Permutation>> permutations;
    std::vector<std::pair<std::string, long long>>   indices;
    std::vector<std::pair<std::string, Word>>        words;
    std::string                                      reason;
  };

  struct LemmaReport {
    LemmaId     lemma_id = LemmaId::not_possible;
    std::size_t k        = 0;
    bool        passed = true;
    //! Present iff !passed; the first violation in quantifier order.
    std::optional<Counterexample> counterexample;
    //! Quantifier tuples (or sampled pairs/words) examined.
    std::uint64_t instances = 0;
    //! Instances whose word-equality hypothesis held; for Step3, class
    //! members showing the second prefix shape.
    std::uint64_t hypothesis_hits = 0;
    //! Quantifier tuples admitted by the side conditions but naming a
    //! position outside {1, ..., n}; reported, never counted as failures.
    std::uint64_t flagged = 0;
  };

  //! (sigma(p), sigma(p+1)) != (tau(q), tau(q+1)) for 1 <= p <= n/2 - 1 and
  //! n/2 < q <= n - 1.
  [[nodiscard]] LemmaReport verify_not_possible(GroupTable const& g);

  //! sigma(n-j+i..n) == tau(i..j) with 1 <= i < n/2 - 1, i <= j <= n implies
  //! j == i, or j == n and sigma == tau.
  [[nodiscard]] LemmaReport verify_max_one(GroupTable const& g);

  //! sigma(j..j+n/2) == tau(i..i+n/2) with 1 <= i, j <= n/2 implies i == j
  //! and sigma == tau.
  [[nodiscard]] LemmaReport verify_big(GroupTable const& g);

  //! sigma(j..l) tau(l+1..m) == lambda(i..m-j+i) with 1 <= j <= l < m <= n,
  //! i in {1, 2}, m >= n - 1 and sigma != tau implies j == l and l + 1 == m.
  [[nodiscard]] LemmaReport verify_overlapp(GroupTable const& g);

  //! Equal words w1, w2 of length r <= n + max_extra with different first
  //! letters start with sigma(1..n-1) and tau(1..n-1), and exactly one of
  //! sigma(n) == w1_n, tau(n) == w2_n holds or both do. Pairs are drawn
  //! from the classes of deterministic seed words built from relation words.
  [[nodiscard]] LemmaReport verify_stepss(GroupTable const&    g,
                                          RewriteConfig const& cfg,
                                          std::size_t          max_extra,
                                          std::uint64_t        seed = 0);

  //! Every member of the class of tau(i+1..n) w2 starts with tau(i+1..n) or
  //! with tau(i+1..n-1) gamma(1..n-1); \p samples words w2 per (tau, i).
  [[nodiscard]] LemmaReport verify_step3(GroupTable const&    g,
                                         RewriteConfig const& cfg,
                                         std::size_t          samples,
                                         std::uint64_t        seed = 0);

  //! SymNotPossible, SymMaxOne, SymStep3, SymOverlapp, SymStepss.
  [[nodiscard]] std::vector<LemmaReport>
  verify_symmetric_analogs(GroupTable const&    g,
                           RewriteConfig const& cfg,
                           std::size_t          max_extra,
                           std::size_t          samples,
                           std::uint64_t        seed = 0);

}  // namespace qsemi

#endif  // QSEMI_LEMMAS_HPP_
