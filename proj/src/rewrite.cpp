#include "qsemi/rewrite.hpp"

#include <algorithm>      // for sort, copy
#include <mutex>          // for unique_lock
#include <string>         // for string, to_string
#include <unordered_set>  // for unordered_set

#include "qsemi/errors.hpp"  // for BadFactor, ClassTooLarge, InvalidArgument

namespace qsemi {

  namespace {

    void check_letters(Word const& w, std::size_t n) {
      for (auto x : w) {
        if (x < 1 || x > n) {
          throw InvalidArgument("letter " + std::to_string(x) + " outside {1, ..., "
                                + std::to_string(n) + "}");
        }
      }
    }

    // Letters are assumed to lie in {1, ..., n}. A window is looked up in
    // the table only once it holds n distinct letters.
    template <typename Func>
    void for_each_factor(Word const& w, GroupTable const& g, Func&& f) {
      std::size_t const n = g.degree();
      if (w.size() < n) {
        return;
      }
      std::vector<std::size_t> count(n + 1, 0);
      std::size_t              distinct = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        distinct += (count[w[i]]++ == 0);
        if (i + 1 < n) {
          continue;
        }
        std::size_t const first = i + 1 - n;
        if (distinct == n) {
          if (auto e = g.find(w.factor(first, n))) {
            f(RelationFactor{first + 1, *e});
          }
        }
        distinct -= (--count[w[first]] == 0);
      }
    }

  }  // namespace

  void RewriteConfig::validate() const {
    if (max_class_size == 0 || max_word_length == 0) {
      throw InvalidArgument("max_class_size and max_word_length must be positive");
    }
  }

  std::vector<RelationFactor> find_relation_factors(Word const& w, GroupTable const& g) {
    check_letters(w, g.degree());
    std::vector<RelationFactor> out;
    for_each_factor(w, g, [&out](RelationFactor f) { out.push_back(f); });
    return out;
  }

  Word rewrite_step(Word const&        w,
                    std::size_t        position,
                    Permutation const& from,
                    Permutation const& to,
                    GroupTable const&  g) {
    std::size_t const n = g.degree();
    if (!g.contains(from) || !g.contains(to)) {
      throw BadFactor("rewrite permutations must belong to the group table");
    }
    if (position < 1 || position + n - 1 > w.size()
        || !std::equal(from.images().begin(), from.images().end(),
                       w.begin() + (position - 1))) {
      throw BadFactor("no factor " + from.image_string() + " at position "
                      + std::to_string(position) + " of " + to_string(w));
    }
    std::vector<letter_type> out(w.begin(), w.end());
    std::copy(to.images().begin(), to.images().end(), out.begin() + (position - 1));
    return Word(std::move(out));
  }

  CongruenceClass::CongruenceClass(std::vector<Word> members)
      : _members(std::move(members)) {
    if (_members.empty()) {
      throw InvalidArgument("a congruence class cannot be empty");
    }
    std::sort(_members.begin(), _members.end());
  }

  bool CongruenceClass::contains(Word const& w) const {
    return std::binary_search(_members.begin(), _members.end(), w);
  }

  CongruenceClass class_of(Word const& w, GroupTable const& g, RewriteConfig const& cfg) {
    cfg.validate();
    if (w.size() > cfg.max_word_length) {
      throw InvalidArgument("word of length " + std::to_string(w.size())
                            + " exceeds max_word_length = "
                            + std::to_string(cfg.max_word_length));
    }
    check_letters(w, g.degree());

    std::unordered_set<Word> seen  = {w};
    std::vector<Word>        queue = {w};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      // queue may reallocate while we push, so take a copy of the word
      Word const current = queue[i];
      for_each_factor(current, g, [&](RelationFactor f) {
        std::vector<letter_type> buf(current.begin(), current.end());
        for (std::size_t e = 0; e < g.size(); ++e) {
          if (e == f.element) {
            continue;
          }
          auto img = g[e].images();
          std::copy(img.begin(), img.end(), buf.begin() + (f.position - 1));
          Word next(std::span<letter_type const>(buf.data(), buf.size()));
          if (seen.insert(next).second) {
            if (seen.size() > cfg.max_class_size) {
              throw ClassTooLarge("class of " + to_string(w) + " has more than "
                                  + std::to_string(cfg.max_class_size)
                                  + " members");
            }
            queue.push_back(std::move(next));
          }
        }
      });
    }
    return CongruenceClass(std::move(queue));
  }

  bool words_equal(Word const&          w1,
                   Word const&          w2,
                   GroupTable const&    g,
                   RewriteConfig const& cfg) {
    if (w1.size() != w2.size()) {
      return false;
    }
    if (w1 == w2) {
      return true;
    }
    return class_of(w1, g, cfg).contains(w2);
  }

  Word canonical_form(Word const& w, GroupTable const& g, RewriteConfig const& cfg) {
    return class_of(w, g, cfg).representative();
  }

  OverlapReport relation_overlaps(GroupTable const& g) {
    std::size_t const n = g.degree();
    OverlapReport     report;
    for (std::size_t s = 0; s < g.size(); ++s) {
      auto sigma = g[s].images();
      for (std::size_t t = 0; t < g.size(); ++t) {
        auto tau = g[t].images();
        for (std::size_t j = 1; j <= n; ++j) {
          if (!std::equal(sigma.end() - j, sigma.end(), tau.begin())) {
            continue;
          }
          if (j == n) {
            report.full_overlap_is_trivial &= (s == t);
          } else if (j > report.max_overlap) {
            report.max_overlap = j;
            report.sigma       = s;
            report.tau         = t;
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // WordProblem
  ////////////////////////////////////////////////////////////////////////

  WordProblem::WordProblem(GroupTable g, RewriteConfig cfg)
      : _group(std::move(g)), _config(cfg) {
    _config.validate();
  }

  Word WordProblem::normal_form(Word const& w) const {
    if (w.size() < _group.degree()) {
      check_letters(w, _group.degree());
      return w;
    }
    {
      std::shared_lock lock(_mutex);
      auto             it = _cache.find(w);
      if (it != _cache.end()) {
        return it->second;
      }
    }
    CongruenceClass cls = qsemi::class_of(w, _group, _config);
    std::unique_lock lock(_mutex);
    if (_cache.size() + cls.size() > max_cache_entries) {
      _cache.clear();
    }
    for (auto const& m : cls.members()) {
      _cache.emplace(m, cls.representative());
    }
    return cls.representative();
  }

  bool WordProblem::equal(Word const& a, Word const& b) const {
    if (a.size() != b.size()) {
      return false;
    }
    return a == b || normal_form(a) == normal_form(b);
  }

  std::size_t WordProblem::cache_size() const {
    std::shared_lock lock(_mutex);
    return _cache.size();
  }

}  // namespace qsemi
