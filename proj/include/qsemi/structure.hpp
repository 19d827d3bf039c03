#ifndef QSEMI_STRUCTURE_HPP_
#define QSEMI_STRUCTURE_HPP_

#include <chrono>         // for milliseconds
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t, uint32_t
#include <iosfwd>         // for ostream
#include <limits>         // for numeric_limits
#include <map>            // for map
#include <optional>       // for optional
#include <span>           // for span
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "rewrite.hpp"  // for Normalizer, WordProblem
#include "word.hpp"     // for Word

namespace qsemi {

  ////////////////////////////////////////////////////////////////////////
  // Unique products
  ////////////////////////////////////////////////////////////////////////

  //! Finite subsets C and D of a monoid, stored as lists of pairwise
  //! distinct normal forms.
  class SubsetSpec {
   public:
    //! Normalises every word; throws InvalidArgument if a list is empty or
    //! two of its words are equal in the monoid.
    static SubsetSpec make(std::vector<Word> left,
                           std::vector<Word> right,
                           Normalizer const& nf);

    [[nodiscard]] std::span<Word const> left() const noexcept {
      return _left;
    }
    [[nodiscard]] std::span<Word const> right() const noexcept {
      return _right;
    }

   private:
    SubsetSpec() = default;
    std::vector<Word> _left;
    std::vector<Word> _right;
  };

  //! Every element of CD with the (c-index, d-index) pairs presenting it.
  struct ProductReport {
    std::map<Word, std::vector<std::pair<std::size_t, std::size_t>>> products;
    std::size_t unique_count = 0;
  };

  [[nodiscard]] ProductReport product_report(SubsetSpec const& s, Normalizer const& nf);

  //! True iff CD has at least two uniquely presented elements. Throws
  //! InvalidArgument unless |C| + |D| > 2. On a false result the complete
  //! product report is written to \p diagnostics.
  [[nodiscard]] bool check_tup(SubsetSpec const& s,
                               Normalizer const& nf,
                               std::ostream*     diagnostics = nullptr);

  ////////////////////////////////////////////////////////////////////////
  // Cancellativity
  ////////////////////////////////////////////////////////////////////////

  struct CancellationViolation {
    Word a;
    Word b;
    Word c;
    //! ac == bc (true) or ca == cb (false) while a != b.
    bool right_side;
  };

  struct CancellationReport {
    bool          passed          = true;
    std::uint64_t trials          = 0;
    //! Checks (two per trial) in which ac == bc, resp. ca == cb, held.
    std::uint64_t antecedent_hits = 0;
    //! Of those, the ones with a != b as words.
    std::uint64_t nontrivial_hits = 0;
    std::optional<CancellationViolation> violation;
  };

  //! Samples words a, b, c with |a| == |b| <= max_len and |c| <= max_len and
  //! checks ac == bc => a == b and ca == cb => a == b. In half of the trials
  //! b is drawn from the class of a. In the other half b is read off a
  //! member of the class of ac (resp. ca) that still ends (starts) with c,
  //! so that the hypothesis holds; in half of those a and c are built around
  //! a relation word split between them.
  [[nodiscard]] CancellationReport check_cancellative_samples(WordProblem const& wp,
                                                              std::size_t        trials,
                                                              std::size_t        max_len,
                                                              std::uint64_t      seed);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  //! Normal forms of all words of length <= max_len, in shortlex order,
  //! produced on demand.
  class RepresentativeList {
   public:
    RepresentativeList(Normalizer const& nf, std::size_t max_len);

    //! The i-th representative, or nullptr past the end.
    [[nodiscard]] Word const* get(std::size_t i);

    //! Enumerates everything; only sensible for small max_len.
    std::vector<Word> const& materialize();

   private:
    bool advance_odometer();

    Normalizer const*        _nf;
    std::size_t              _max_len;
    std::vector<letter_type> _odometer;
    bool                     _exhausted = false;
    bool                     _started   = false;
    std::vector<Word>        _reps;
  };

  //! Exact number of representatives of length <= max_len, when known in
  //! closed form (max_len <= n).
  [[nodiscard]] std::optional<long double>
  representative_count(WordProblem const& wp, std::size_t max_len);

  //! Number of non-empty subsets of size <= max_size of an N-set.
  [[nodiscard]] long double subset_count(long double n, std::size_t max_size);

  //! Non-empty subsets of {0, 1, 2, ...} with at most max_size elements,
  //! in colex order (increasing value of the characteristic vector read as
  //! a binary number): {0}, {1}, {0,1}, {2}, {0,2}, {1,2}, ...
  class BoundedSubsets {
   public:
    explicit BoundedSubsets(std::size_t max_size);

    //! Sorted indices of the current subset.
    [[nodiscard]] std::span<std::size_t const> current() const noexcept {
      return _indices;
    }
    [[nodiscard]] std::size_t max_index() const noexcept {
      return _indices.back();
    }
    void advance();

   private:
    std::size_t              _max_size;
    std::vector<std::size_t> _indices;
  };

  //! All SubsetSpecs over the representatives of length <= max_len with
  //! 1 <= |C|, |D| <= max_size and |C| + |D| > 2: C in colex order, and for
  //! each C, D in colex order.
  class SubsetSpecStream {
   public:
    SubsetSpecStream(Normalizer const& nf, std::size_t max_len, std::size_t max_size);

    [[nodiscard]] std::optional<SubsetSpec> next();

    //! Specs yielded so far.
    [[nodiscard]] std::uint64_t yielded() const noexcept {
      return _yielded;
    }

   private:
    Normalizer const*  _nf;
    RepresentativeList _reps;
    std::size_t        _max_size;
    BoundedSubsets     _left;
    BoundedSubsets     _right;
    bool               _done = false;
    std::uint64_t      _yielded = 0;
  };

  [[nodiscard]] SubsetSpecStream
  enumerate_subset_specs(Normalizer const& nf, std::size_t max_len, std::size_t max_size);

  ////////////////////////////////////////////////////////////////////////
  // Sweeps
  ////////////////////////////////////////////////////////////////////////

  struct SweepLimits {
    std::uint64_t                            max_specs = std::numeric_limits<std::uint64_t>::max();
    std::optional<std::chrono::milliseconds> time_budget;
    //! Allow the parallel sweep over a precomputed product table when both
    //! universes are small enough; otherwise products are computed lazily
    //! by a single thread.
    bool in_memory = true;
  };

  struct SweepFailure {
    //! Position in the enumeration order, counting every (C, D) pair.
    std::uint64_t     grid_index;
    std::vector<Word> left;
    std::vector<Word> right;
    std::size_t       unique_count;
  };

  struct SweepSummary {
    std::size_t   k                = 0;
    std::size_t   max_len          = 0;
    std::size_t   max_size         = 0;
    std::uint64_t specs_checked    = 0;
    //! numeric_limits<size_t>::max() when no spec was checked.
    std::size_t   min_unique_count = std::numeric_limits<std::size_t>::max();
    double        elapsed_ms       = 0;
    //! Every spec of the universe was checked.
    bool          complete         = false;
    //! Size of the universe, when known (may exceed 2^64).
    std::optional<long double> specs_total;
    std::optional<SweepFailure> failure;

    [[nodiscard]] bool passed() const noexcept {
      return complete && !failure && specs_checked > 0 && min_unique_count >= 2;
    }
  };

  //! check_tup over every spec of enumerate_subset_specs(wp, max_len,
  //! max_size), via an interned table of products. Stops at the first spec
  //! with fewer than two unique products, or when a limit is reached.
  [[nodiscard]] SweepSummary tup_sweep(WordProblem const& wp,
                                       std::size_t        max_len,
                                       std::size_t        max_size,
                                       SweepLimits        limits   = {},
                                       std::ostream*      progress = nullptr);

  //! The same sweep with C drawn from \p left_pool and D from
  //! \p right_pool (both normalised and deduplicated first).
  [[nodiscard]] SweepSummary tup_sweep_pools(Normalizer const& nf,
                                             std::vector<Word> left_pool,
                                             std::vector<Word> right_pool,
                                             std::size_t       max_size,
                                             SweepLimits       limits   = {},
                                             std::ostream*     progress = nullptr);

  enum class Filler { constant, relation };

  //! Length-n words split across a relation word: C-words
  //! filler(n - j) sigma(1..j) and D-words sigma(j+1..n) filler(j), for all
  //! sigma and 1 <= j < n. Filler::constant pads with 1s on the left and n's
  //! on the right; Filler::relation pads with (j+1, ..., n) and (1, ..., j).
  [[nodiscard]] std::pair<std::vector<Word>, std::vector<Word>>
  split_relation_pools(WordProblem const& wp, Filler filler);

}  // namespace qsemi

#endif  // QSEMI_STRUCTURE_HPP_
