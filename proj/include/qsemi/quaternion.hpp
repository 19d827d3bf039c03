#ifndef QSEMI_QUATERNION_HPP_
#define QSEMI_QUATERNION_HPP_

#include <algorithm>      // for equal
#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <span>           // for span
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "permutation.hpp"  // for Permutation, letter_type

namespace qsemi {

  //! Parameters of the generalized quaternion group Q_{4k}, acting on
  //! n = 4k points.
  class QuaternionConfig {
   public:
    //! Throws InvalidArgument unless 2 <= k and 4k <= max_degree.
    explicit QuaternionConfig(std::size_t k);

    [[nodiscard]] std::size_t k() const noexcept {
      return _k;
    }
    [[nodiscard]] std::size_t n() const noexcept {
      return 4 * _k;
    }

   private:
    std::size_t _k;
  };

  //! The group word t^t_exponent u^(has_u ? 1 : 0).
  struct GroupLabel {
    std::size_t t_exponent;
    bool        has_u;

    friend bool operator==(GroupLabel const&, GroupLabel const&) = default;
  };

  //! Point identified with the group element \p g: t^i is i + 1 and t^i u is
  //! i + 2k + 1.
  [[nodiscard]] std::size_t point_of(QuaternionConfig const& cfg, GroupLabel g);
  [[nodiscard]] GroupLabel  label_of_point(QuaternionConfig const& cfg,
                                           std::size_t             point);

  //! Product of group words in Q_{4k}, in normal form t^i u^j.
  [[nodiscard]] GroupLabel multiply(QuaternionConfig const& cfg,
                                    GroupLabel              a,
                                    GroupLabel              b);

  //! Left multiplication by \p g on the points {1, ..., 4k}.
  [[nodiscard]] Permutation left_multiplication(QuaternionConfig const& cfg,
                                                GroupLabel              g);

  //! t = (1, 2, ..., 2k)(2k + 1, ..., 4k).
  [[nodiscard]] Permutation build_t(QuaternionConfig const& cfg);

  //! u built from the Cayley action and checked against its cycle form;
  //! throws ConsistencyError if the two disagree.
  [[nodiscard]] Permutation build_u(QuaternionConfig const& cfg);

  //! u transcribed from its closed cycle form
  //! (1, 2k+1, 1+k, 3k+1)(m, 4k-(m-2), m+k, 3k-(m-2)) for 2 <= m <= k.
  [[nodiscard]] Permutation displayed_u(QuaternionConfig const& cfg);

  //! A finite set of permutations of equal degree with O(1) membership.
  //!
  //! Tables produced by generate_group are the regular representation H of
  //! Q_{4k} and carry a GroupLabel for every element. Tables made with
  //! from_elements are arbitrary (possibly non-closed) sets; they exist so
  //! that the oracles can be run against negative controls.
  class GroupTable {
   public:
    //! Throws InvalidArgument if the permutations differ in degree, are
    //! repeated, or \p elements is empty.
    static GroupTable from_elements(std::vector<Permutation> elements);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _degree;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] Permutation const& operator[](std::size_t i) const {
      return _elements[i];
    }
    [[nodiscard]] std::span<Permutation const> elements() const noexcept {
      return _elements;
    }

    //! Index of the element whose image table is \p images.
    [[nodiscard]] std::optional<std::size_t>
    find(std::span<letter_type const> images) const;

    [[nodiscard]] bool contains(Permutation const& p) const {
      return find(p.images()).has_value();
    }

    [[nodiscard]] bool has_labels() const noexcept {
      return !_labels.empty();
    }
    [[nodiscard]] std::optional<GroupLabel> label(std::size_t i) const;
    [[nodiscard]] std::optional<std::size_t> index_of(GroupLabel g) const;

    //! Closed under composition and inverses, with the identity present.
    [[nodiscard]] bool is_group() const;

    //! Conjugate of every element by the reversal x -> n + 1 - x. Running
    //! an oracle on the mirrored table checks the right-to-left analog of
    //! its statement.
    [[nodiscard]] GroupTable mirrored() const;

   private:
    friend GroupTable generate_group(QuaternionConfig const& cfg);

    struct SpanHash {
      using is_transparent = void;
      std::size_t operator()(std::span<letter_type const> s) const noexcept {
        return hash_letters(s);
      }
      std::size_t operator()(std::vector<letter_type> const& s) const noexcept {
        return hash_letters(s);
      }
    };
    struct SpanEqual {
      using is_transparent = void;
      bool operator()(std::span<letter_type const> a,
                      std::span<letter_type const> b) const noexcept {
        return std::equal(a.begin(), a.end(), b.begin(), b.end());
      }
    };

    GroupTable() = default;
    void build_index();

    std::size_t                     _degree = 0;
    std::vector<Permutation>        _elements;
    std::vector<GroupLabel>         _labels;
    std::unordered_map<std::vector<letter_type>, std::size_t, SpanHash, SpanEqual>
        _index;
  };

  //! Closure of {t, u}: the 4k elements of H, each labelled t^i u^j.
  //! Throws ClosureError if the closure does not have exactly 4k elements,
  //! or if a label does not match its permutation.
  [[nodiscard]] GroupTable generate_group(QuaternionConfig const& cfg);

  //! u maps a point of {1, ..., n/2} into {n/2 + 1, ..., n}. Requires a
  //! labelled table.
  [[nodiscard]] bool check_other(GroupTable const& g);

  //! Every element preserves both halves {1..n/2}, {n/2+1..n} or swaps them.
  [[nodiscard]] bool check_disjoi(GroupTable const& g);

  //! Every non-identity element is fixed-point-free.
  [[nodiscard]] bool check_stabilizer_free(GroupTable const& g);

}  // namespace qsemi

#endif  // QSEMI_QUATERNION_HPP_
