#include "qsemi/algebra.hpp"

#include <algorithm>  // for min, max
#include <charconv>   // for from_chars
#include <tuple>      // for tie
#include <sstream>    // for ostringstream

#include "qsemi/errors.hpp"    // for InvalidArgument
#include "qsemi/parallel.hpp"  // for parallel_for, derive_seed

namespace qsemi {

  bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  AlgebraElement::AlgebraElement(coefficient_type p) : _p(p) {
    if (p >= (1u << 16) || !is_prime(p)) {
      throw InvalidArgument("modulus must be a prime below 65536, got " + std::to_string(p));
    }
  }

  AlgebraElement
  AlgebraElement::from_terms(std::vector<std::pair<std::uint64_t, Word>> const& terms,
                             coefficient_type                                p,
                             Normalizer const&                               nf) {
    AlgebraElement x(p);
    for (auto const& [c, w] : terms) {
      x.add_term(nf.normal_form(w), c);
    }
    return x;
  }

  void AlgebraElement::add_term(Word const& w, std::uint64_t c) {
    c %= _p;
    if (c == 0) {
      return;
    }
    auto [it, inserted] = _terms.emplace(w, static_cast<coefficient_type>(c));
    if (!inserted) {
      it->second = static_cast<coefficient_type>((it->second + c) % _p);
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  void AlgebraElement::check_same_modulus(AlgebraElement const& that) const {
    if (_p != that._p) {
      throw InvalidArgument("moduli differ: " + std::to_string(_p) + " and "
                            + std::to_string(that._p));
    }
  }

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& that) {
    check_same_modulus(that);
    for (auto const& [w, c] : that._terms) {
      add_term(w, c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::scale(std::uint64_t c) {
    c %= _p;
    if (c == 0) {
      _terms.clear();
      return *this;
    }
    for (auto& [w, coef] : _terms) {
      coef = static_cast<coefficient_type>((coef * c) % _p);
    }
    return *this;
  }

  AlgebraElement
  algebra_mul(AlgebraElement const& x, AlgebraElement const& y, Normalizer const& nf) {
    if (x.modulus() != y.modulus()) {
      throw InvalidArgument("moduli differ: " + std::to_string(x.modulus()) + " and "
                            + std::to_string(y.modulus()));
    }
    AlgebraElement result(x.modulus());
    for (auto const& [wx, cx] : x.terms()) {
      for (auto const& [wy, cy] : y.terms()) {
        result.add_term(nf.normal_form(wx + wy), std::uint64_t(cx) * cy);
      }
    }
    return result;
  }

  std::string to_string(AlgebraElement const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (auto const& [w, c] : x.terms()) {
      out << (first ? "" : " + ") << c << '*' << to_string(w);
      first = false;
    }
    return out.str();
  }

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
      }
      while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  AlgebraElement parse_element(std::string const&               text,
                               AlgebraElement::coefficient_type p,
                               Normalizer const&                nf) {
    AlgebraElement   x(p);
    std::string_view rest = trim(text);
    if (rest == "0") {
      return x;
    }
    if (rest.empty()) {
      throw InvalidArgument("empty algebra element");
    }
    bool negative = false;
    if (rest.front() == '-') {
      negative = true;
      rest     = trim(rest.substr(1));
    }
    while (true) {
      auto const       next = rest.find_first_of("+-");
      std::string_view term = trim(rest.substr(0, next));
      std::uint64_t    coef = 1;
      auto const       star = term.find('*');
      if (star != std::string_view::npos) {
        auto const digits = trim(term.substr(0, star));
        auto [ptr, ec]    = std::from_chars(digits.data(), digits.data() + digits.size(), coef);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
          throw InvalidArgument("bad coefficient in \"" + std::string(term) + "\"");
        }
        term = trim(term.substr(star + 1));
      } else if (term.empty()) {
        throw InvalidArgument("empty term in \"" + text + "\"");
      }
      coef %= p;
      if (negative) {
        coef = (p - coef) % p;
      }
      x.add_term(nf.normal_form(parse_word(std::string(term), nf.alphabet_size())), coef);
      if (next == std::string_view::npos) {
        break;
      }
      negative = rest[next] == '-';
      rest     = rest.substr(next + 1);
    }
    return x;
  }

  AlgebraElement random_element(WordGenerator&                   gen,
                                AlgebraElement::coefficient_type p,
                                std::size_t                      max_support,
                                std::size_t                      max_len,
                                Normalizer const&                nf,
                                bool                             homogeneous) {
    AlgebraElement    x(p);
    std::size_t const support = 1 + gen.below(max_support);
    for (std::size_t s = 0; s < support; ++s) {
      Word const w = homogeneous ? gen.biased_exact(max_len) : gen.biased(max_len);
      x.add_term(nf.normal_form(w), 1 + gen.below(p - 1));
    }
    return x;
  }

  namespace {

    // x = sum pad sigma_a(1..j), y = sum sigma_a(j+1..n) pad': the diagonal
    // products all equal the relation class, so their coefficients merge.
    std::optional<std::pair<AlgebraElement, AlgebraElement>>
    split_pair(WordGenerator& gen, ZeroDivisorConfig const& cfg, Normalizer const& nf) {
      GroupTable const& g = *cfg.relations;
      std::size_t const n = g.degree();
      if (cfg.max_len + 1 < n) {
        return std::nullopt;
      }
      // both halves must fit in max_len letters
      std::size_t const lo      = cfg.max_len >= n ? 1 : n - cfg.max_len;
      std::size_t const hi      = std::min(cfg.max_len, n - 1);
      std::size_t const j       = lo + gen.below(hi - lo + 1);
      Word const        left    = gen.biased(cfg.max_len - j);
      Word const        right   = gen.biased(cfg.max_len - (n - j));
      std::size_t const support = 1 + gen.below(cfg.max_support);
      AlgebraElement    x(cfg.p), y(cfg.p);
      for (std::size_t s = 0; s < support; ++s) {
        auto const img = g[gen.below(g.size())].images();
        x.add_term(nf.normal_form(left + Word(img.subspan(0, j))), 1 + gen.below(cfg.p - 1));
        y.add_term(nf.normal_form(Word(img.subspan(j)) + right), 1 + gen.below(cfg.p - 1));
      }
      return std::pair{std::move(x), std::move(y)};
    }

  }  // namespace

  ZeroDivisorResult zero_divisor_search(Normalizer const& nf, ZeroDivisorConfig const& cfg) {
    if (cfg.max_support == 0) {
      throw InvalidArgument("max_support must be positive");
    }
    AlgebraElement const probe(cfg.p);  // validates p
    (void) probe;

    struct Trial {
      bool                                                   collision = false;
      std::optional<std::pair<AlgebraElement, AlgebraElement>> witness;
    };
    std::vector<Trial> trials(cfg.trials);
    parallel_for(cfg.trials, [&](std::size_t t) {
      WordGenerator  gen(cfg.relations, nf.alphabet_size(), derive_seed(cfg.seed, t));
      AlgebraElement x(cfg.p), y(cfg.p);
      if (cfg.relations != nullptr && gen.below(2) == 0) {
        if (auto xy = split_pair(gen, cfg, nf)) {
          std::tie(x, y) = std::move(*xy);
        }
      }
      while (x.is_zero()) {
        x = random_element(gen, cfg.p, cfg.max_support, cfg.max_len, nf);
      }
      while (y.is_zero()) {
        y = random_element(gen, cfg.p, cfg.max_support, cfg.max_len, nf);
      }
      AlgebraElement const xy = algebra_mul(x, y, nf);
      trials[t].collision     = xy.support_size() < x.support_size() * y.support_size();
      if (xy.is_zero()) {
        trials[t].witness.emplace(std::move(x), std::move(y));
      }
    });

    ZeroDivisorResult result;
    result.trials = cfg.trials;
    for (std::size_t t = 0; t < trials.size(); ++t) {
      result.collisions += trials[t].collision;
      if (trials[t].witness && !result.witness) {
        result.witness       = std::move(trials[t].witness);
        result.witness_trial = t;
      }
    }
    return result;
  }

}  // namespace qsemi
