#include "qsemi/quaternion.hpp"

#include <string>  // for string, to_string

#include "qsemi/errors.hpp"  // for InvalidArgument, ConsistencyError, ...

namespace qsemi {

  QuaternionConfig::QuaternionConfig(std::size_t k) : _k(k) {
    if (k < 2) {
      throw InvalidArgument("expected k >= 2, found k = " + std::to_string(k));
    }
    if (4 * k > max_degree) {
      throw InvalidArgument("k = " + std::to_string(k)
                            + " gives more than " + std::to_string(max_degree)
                            + " points");
    }
  }

  std::size_t point_of(QuaternionConfig const& cfg, GroupLabel g) {
    return g.t_exponent + (g.has_u ? 2 * cfg.k() : 0) + 1;
  }

  GroupLabel label_of_point(QuaternionConfig const& cfg, std::size_t point) {
    std::size_t const two_k = 2 * cfg.k();
    if (point < 1 || point > 2 * two_k) {
      throw InvalidArgument("point out of range");
    }
    return point <= two_k ? GroupLabel{point - 1, false}
                          : GroupLabel{point - two_k - 1, true};
  }

  // Normal form t^i u^j with u t = t^{-1} u and u^2 = t^k.
  GroupLabel multiply(QuaternionConfig const& cfg, GroupLabel a, GroupLabel b) {
    std::size_t const two_k = 2 * cfg.k();
    if (!a.has_u) {
      return {(a.t_exponent + b.t_exponent) % two_k, b.has_u};
    }
    std::size_t e = (a.t_exponent + two_k - b.t_exponent) % two_k;
    if (!b.has_u) {
      return {e, true};
    }
    return {(e + cfg.k()) % two_k, false};
  }

  Permutation left_multiplication(QuaternionConfig const& cfg, GroupLabel g) {
    std::vector<letter_type> img(cfg.n());
    for (std::size_t p = 1; p <= cfg.n(); ++p) {
      img[p - 1] = static_cast<letter_type>(
          point_of(cfg, multiply(cfg, g, label_of_point(cfg, p))));
    }
    return Permutation(std::move(img));
  }

  Permutation build_t(QuaternionConfig const& cfg) {
    std::size_t const        k = cfg.k();
    std::vector<std::size_t> lower, upper;
    for (std::size_t i = 1; i <= 2 * k; ++i) {
      lower.push_back(i);
      upper.push_back(2 * k + i);
    }
    return Permutation::from_cycles(cfg.n(), {lower, upper});
  }

  Permutation displayed_u(QuaternionConfig const& cfg) {
    std::size_t const                     k = cfg.k();
    std::vector<std::vector<std::size_t>> cycles;
    cycles.push_back({1, 2 * k + 1, 1 + k, 2 * k + 1 + k});
    for (std::size_t m = 2; m <= k; ++m) {
      cycles.push_back(
          {m, 4 * k - (m - 2), m + k, 4 * k - (m - 2) - k});
    }
    return Permutation::from_cycles(cfg.n(), cycles);
  }

  Permutation build_u(QuaternionConfig const& cfg) {
    Permutation u = left_multiplication(cfg, {0, true});
    if (u != displayed_u(cfg)) {
      throw ConsistencyError("Cayley action of u is " + u.cycle_string()
                             + " but the cycle form gives "
                             + displayed_u(cfg).cycle_string());
    }
    return u;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupTable
  ////////////////////////////////////////////////////////////////////////

  GroupTable GroupTable::from_elements(std::vector<Permutation> elements) {
    if (elements.empty()) {
      throw InvalidArgument("a group table needs at least one element");
    }
    GroupTable g;
    g._degree = elements.front().degree();
    for (auto const& p : elements) {
      if (p.degree() != g._degree) {
        throw InvalidArgument("permutations of different degree");
      }
    }
    g._elements = std::move(elements);
    g.build_index();
    return g;
  }

  void GroupTable::build_index() {
    _index.clear();
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      auto img = _elements[i].images();
      if (!_index
               .emplace(std::vector<letter_type>(img.begin(), img.end()), i)
               .second) {
        throw InvalidArgument("repeated element " + _elements[i].cycle_string());
      }
    }
  }

  std::optional<std::size_t>
  GroupTable::find(std::span<letter_type const> images) const {
    auto it = _index.find(images);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<GroupLabel> GroupTable::label(std::size_t i) const {
    if (_labels.empty()) {
      return std::nullopt;
    }
    return _labels.at(i);
  }

  std::optional<std::size_t> GroupTable::index_of(GroupLabel g) const {
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      if (_labels[i] == g) {
        return i;
      }
    }
    return std::nullopt;
  }

  bool GroupTable::is_group() const {
    if (!contains(Permutation::identity(_degree))) {
      return false;
    }
    for (auto const& a : _elements) {
      if (!contains(a.inverse())) {
        return false;
      }
      for (auto const& b : _elements) {
        if (!contains(a * b)) {
          return false;
        }
      }
    }
    return true;
  }

  GroupTable GroupTable::mirrored() const {
    std::size_t const        n = _degree;
    std::vector<Permutation> conj;
    conj.reserve(_elements.size());
    for (auto const& s : _elements) {
      std::vector<letter_type> img(n);
      for (std::size_t p = 1; p <= n; ++p) {
        img[p - 1] = static_cast<letter_type>(n + 1 - s(n + 1 - p));
      }
      conj.emplace_back(std::move(img));
    }
    GroupTable result = from_elements(std::move(conj));
    result._labels    = _labels;
    return result;
  }

  GroupTable generate_group(QuaternionConfig const& cfg) {
    std::size_t const n     = cfg.n();
    std::size_t const order = n;
    Permutation const t     = build_t(cfg);
    Permutation const u     = build_u(cfg);

    std::vector<Permutation> closure = {Permutation::identity(n)};
    std::unordered_map<Permutation, std::size_t> seen = {{closure[0], 0}};
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (auto const* gen : {&t, &u}) {
        Permutation next = *gen * closure[i];
        if (seen.emplace(next, closure.size()).second) {
          closure.push_back(std::move(next));
          if (closure.size() > order) {
            throw ClosureError("closure of {t, u} exceeds " + std::to_string(order)
                               + " elements");
          }
        }
      }
    }
    if (closure.size() != order) {
      throw ClosureError("closure of {t, u} has " + std::to_string(closure.size())
                         + " elements, expected " + std::to_string(order));
    }

    // Element index e is the left multiplication by the group element that
    // sits at point e + 1, i.e. t^i u^j is stored at index i + 2kj.
    GroupTable g;
    g._degree = n;
    std::size_t const two_k = 2 * cfg.k();
    Permutation       t_pow = Permutation::identity(n);
    g._elements.resize(order);
    g._labels.resize(order);
    for (std::size_t i = 0; i < two_k; ++i) {
      for (bool has_u : {false, true}) {
        Permutation p = has_u ? t_pow * u : t_pow;
        if (!seen.contains(p)) {
          throw ClosureError("t^" + std::to_string(i) + (has_u ? "u" : "")
                             + " is missing from the closure");
        }
        GroupLabel  lbl{i, has_u};
        std::size_t idx = point_of(cfg, lbl) - 1;
        if (p != left_multiplication(cfg, lbl)) {
          throw ClosureError("label mismatch at " + p.cycle_string());
        }
        g._elements[idx] = std::move(p);
        g._labels[idx]   = lbl;
      }
      t_pow = t * t_pow;
    }
    g.build_index();
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural predicates
  ////////////////////////////////////////////////////////////////////////

  bool check_other(GroupTable const& g) {
    auto idx = g.index_of({0, true});
    if (!idx) {
      throw InvalidArgument("check_other needs a table with u labelled");
    }
    Permutation const& u    = g[*idx];
    std::size_t const  half = g.degree() / 2;
    for (std::size_t p = 1; p <= half; ++p) {
      if (u(p) > half) {
        return true;
      }
    }
    return false;
  }

  bool check_disjoi(GroupTable const& g) {
    std::size_t const n    = g.degree();
    std::size_t const half = n / 2;
    for (auto const& s : g.elements()) {
      std::size_t lower_to_lower = 0;
      for (std::size_t p = 1; p <= half; ++p) {
        lower_to_lower += (s(p) <= half);
      }
      if (n % 2 != 0 || (lower_to_lower != 0 && lower_to_lower != half)) {
        return false;
      }
    }
    return true;
  }

  bool check_stabilizer_free(GroupTable const& g) {
    for (auto const& s : g.elements()) {
      if (!s.is_identity() && s.number_of_fixed_points() != 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace qsemi
