#ifndef QSEMI_REWRITE_HPP_
#define QSEMI_REWRITE_HPP_

#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <shared_mutex>   // for shared_mutex
#include <span>           // for span
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "permutation.hpp"  // for Permutation
#include "quaternion.hpp"   // for GroupTable
#include "word.hpp"         // for Word

namespace qsemi {

  //! Caps on congruence class enumeration.
  struct RewriteConfig {
    std::size_t max_class_size  = 1'000'000;
    std::size_t max_word_length = 0;

    //! max_class_size = 1,000,000 and max_word_length = 3n.
    [[nodiscard]] static RewriteConfig defaults(std::size_t n) {
      return RewriteConfig{1'000'000, 3 * n};
    }

    //! Throws InvalidArgument unless both caps are positive.
    void validate() const;
  };

  //! An occurrence of a relation word (sigma(1), ..., sigma(n)) in a word.
  struct RelationFactor {
    std::size_t position;  //!< 1-based start of the factor
    std::size_t element;   //!< index of sigma in the GroupTable

    friend bool operator==(RelationFactor const&, RelationFactor const&) = default;
  };

  //! Every length-n factor of \p w whose letters are the image tuple of an
  //! element of \p g, in increasing order of position.
  [[nodiscard]] std::vector<RelationFactor> find_relation_factors(Word const&       w,
                                                                  GroupTable const& g);

  //! Replaces the factor (from(1), ..., from(n)) at 1-based \p position by
  //! (to(1), ..., to(n)). Throws BadFactor unless that factor is present
  //! and both permutations belong to \p g.
  [[nodiscard]] Word rewrite_step(Word const&        w,
                                  std::size_t        position,
                                  Permutation const& from,
                                  Permutation const& to,
                                  GroupTable const&  g);

  //! The set of words equal to a given word in S_n(H); all members have the
  //! same length. Members are kept sorted, so the representative is the
  //! first one.
  class CongruenceClass {
   public:
    explicit CongruenceClass(std::vector<Word> members);

    [[nodiscard]] Word const& representative() const noexcept {
      return _members.front();
    }
    [[nodiscard]] std::span<Word const> members() const noexcept {
      return _members;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _members.size();
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _members.front().size();
    }
    [[nodiscard]] bool contains(Word const& w) const;

    friend bool operator==(CongruenceClass const&, CongruenceClass const&) = default;

   private:
    std::vector<Word> _members;
  };

  //! Closure of {w} under rewrite_step at every factor and towards every
  //! element of \p g. Throws ClassTooLarge past cfg.max_class_size and
  //! InvalidArgument if |w| > cfg.max_word_length or a letter is outside
  //! {1, ..., n}.
  [[nodiscard]] CongruenceClass
  class_of(Word const& w, GroupTable const& g, RewriteConfig const& cfg);

  //! Decides pi(w1) == pi(w2).
  [[nodiscard]] bool words_equal(Word const&          w1,
                                 Word const&          w2,
                                 GroupTable const&    g,
                                 RewriteConfig const& cfg);

  //! Lexicographically least member of class_of(w).
  [[nodiscard]] Word
  canonical_form(Word const& w, GroupTable const& g, RewriteConfig const& cfg);

  //! Longest proper overlap between relation words: the largest
  //! 1 <= j <= n - 1 such that the length-j suffix of some sigma-tuple is the
  //! length-j prefix of some tau-tuple.
  struct OverlapReport {
    std::size_t max_overlap = 0;
    //! A length-n overlap (sigma-tuple == tau-tuple) only for sigma == tau.
    bool full_overlap_is_trivial = true;
    //! Witness for max_overlap: (sigma index, tau index).
    std::size_t sigma = 0;
    std::size_t tau   = 0;
  };

  [[nodiscard]] OverlapReport relation_overlaps(GroupTable const& g);

  //! A monoid with a computable normal form. The algebra sampler is written
  //! against this interface so that it can be pointed at other quotients.
  class Normalizer {
   public:
    virtual ~Normalizer() = default;

    [[nodiscard]] virtual std::size_t alphabet_size() const = 0;
    [[nodiscard]] virtual Word        normal_form(Word const& w) const = 0;
  };

  //! S_n(H) with a per-process memo of canonical forms. Safe to share
  //! between threads.
  class WordProblem final : public Normalizer {
   public:
    WordProblem(GroupTable g, RewriteConfig cfg);

    [[nodiscard]] GroupTable const& group() const noexcept {
      return _group;
    }
    [[nodiscard]] RewriteConfig const& config() const noexcept {
      return _config;
    }

    [[nodiscard]] std::size_t alphabet_size() const override {
      return _group.degree();
    }

    //! Cached canonical_form.
    [[nodiscard]] Word normal_form(Word const& w) const override;

    [[nodiscard]] CongruenceClass class_of(Word const& w) const {
      return qsemi::class_of(w, _group, _config);
    }

    [[nodiscard]] bool equal(Word const& a, Word const& b) const;

    [[nodiscard]] std::size_t cache_size() const;

   private:
    static constexpr std::size_t max_cache_entries = 4'000'000;

    GroupTable                              _group;
    RewriteConfig                           _config;
    mutable std::shared_mutex               _mutex;
    mutable std::unordered_map<Word, Word> _cache;
  };

}  // namespace qsemi

#endif  // QSEMI_REWRITE_HPP_
