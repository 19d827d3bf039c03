#include "qsemi/structure.hpp"

#include <algorithm>      // for sort, unique, min
#include <atomic>         // for atomic
#include <cmath>          // for pow
#include <ostream>        // for ostream
#include <string>         // for string, to_string
#include <tuple>          // for tie
#include <unordered_set>  // for unordered_set

#include "qsemi/errors.hpp"    // for InvalidArgument
#include "qsemi/parallel.hpp"  // for parallel_for, derive_seed
#include "qsemi/sampling.hpp"  // for WordGenerator

namespace qsemi {

  ////////////////////////////////////////////////////////////////////////
  // Unique products
  ////////////////////////////////////////////////////////////////////////

  SubsetSpec SubsetSpec::make(std::vector<Word> left,
                              std::vector<Word> right,
                              Normalizer const& nf) {
    if (left.empty() || right.empty()) {
      throw InvalidArgument("C and D must be non-empty");
    }
    auto normalise = [&nf](std::vector<Word>& words, char const* name) {
      std::unordered_set<Word> seen;
      for (auto& w : words) {
        w = nf.normal_form(w);
        if (!seen.insert(w).second) {
          throw InvalidArgument(std::string(name) + " contains two words equal to "
                                + to_string(w));
        }
      }
    };
    normalise(left, "C");
    normalise(right, "D");
    SubsetSpec s;
    s._left  = std::move(left);
    s._right = std::move(right);
    return s;
  }

  ProductReport product_report(SubsetSpec const& s, Normalizer const& nf) {
    ProductReport report;
    for (std::size_t i = 0; i < s.left().size(); ++i) {
      for (std::size_t j = 0; j < s.right().size(); ++j) {
        report.products[nf.normal_form(s.left()[i] + s.right()[j])].emplace_back(i, j);
      }
    }
    for (auto const& [w, pres] : report.products) {
      report.unique_count += (pres.size() == 1);
    }
    return report;
  }

  bool check_tup(SubsetSpec const& s, Normalizer const& nf, std::ostream* diagnostics) {
    if (s.left().size() + s.right().size() <= 2) {
      throw InvalidArgument("check_tup requires |C| + |D| > 2");
    }
    ProductReport const report = product_report(s, nf);
    if (report.unique_count >= 2) {
      return true;
    }
    if (diagnostics != nullptr) {
      auto& out = *diagnostics;
      out << "t.u.p. violated: " << report.unique_count << " unique product(s)\n";
      for (std::size_t i = 0; i < s.left().size(); ++i) {
        out << "  C[" << i << "] = " << to_string(s.left()[i]) << '\n';
      }
      for (std::size_t j = 0; j < s.right().size(); ++j) {
        out << "  D[" << j << "] = " << to_string(s.right()[j]) << '\n';
      }
      for (auto const& [w, pres] : report.products) {
        out << "  " << to_string(w) << " <-";
        for (auto [i, j] : pres) {
          out << " (" << i << ", " << j << ")";
        }
        out << '\n';
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cancellativity
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct TrialResult {
      std::uint64_t                        hits       = 0;
      std::uint64_t                        nontrivial = 0;
      std::optional<CancellationViolation> violation;
    };

    Word pick_cofactor(WordProblem const& wp,
                       WordGenerator&     gen,
                       Word const&        a,
                       Word const&        c,
                       bool               right_side) {
      Word const        product = right_side ? a + c : c + a;
      CongruenceClass   cls     = wp.class_of(product);
      std::vector<Word> options;
      for (auto const& m : cls.members()) {
        auto const fixed = right_side ? m.factor(a.size(), c.size()) : m.factor(0, c.size());
        if (std::equal(fixed.begin(), fixed.end(), c.begin())) {
          options.emplace_back(right_side ? m.factor(0, a.size())
                                          : m.factor(c.size(), a.size()));
        }
      }
      return options[gen.below(options.size())];
    }

    // (a, c) with a relation word split across a | c, or across c | a for
    // the left-hand law.
    std::pair<Word, Word> straddling(WordGenerator&    gen,
                                     GroupTable const& g,
                                     std::size_t       max_len,
                                     bool              right_side) {
      std::size_t const n = g.degree();
      if (max_len + 1 < n) {
        return {gen.biased(max_len), gen.biased(max_len)};
      }
      std::size_t const lo   = max_len >= n ? 1 : n - max_len;
      std::size_t const hi   = std::min(max_len, n - 1);
      std::size_t const j    = lo + gen.below(hi - lo + 1);
      auto const        img  = g[gen.below(g.size())].images();
      Word              head = gen.biased(max_len - j) + Word(img.subspan(0, j));
      Word              tail = Word(img.subspan(j)) + gen.biased(max_len - (n - j));
      if (right_side) {
        return {std::move(head), std::move(tail)};
      }
      return {std::move(tail), std::move(head)};
    }

  }  // namespace

  CancellationReport check_cancellative_samples(WordProblem const& wp,
                                                std::size_t        trials,
                                                std::size_t        max_len,
                                                std::uint64_t      seed) {
    if (2 * max_len > wp.config().max_word_length) {
      throw InvalidArgument("2 * max_len exceeds max_word_length");
    }
    std::vector<TrialResult> results(trials);
    parallel_for(trials, [&](std::size_t t) {
      WordGenerator gen(&wp.group(), wp.alphabet_size(), derive_seed(seed, t));
      std::size_t   mode = gen.below(4);
      TrialResult&  res  = results[t];
      Word          a    = gen.biased(max_len);
      Word          c    = gen.biased(max_len);
      for (bool right_side : {true, false}) {
        Word b;
        if (mode < 2) {
          CongruenceClass const cls = wp.class_of(a);
          b                         = cls.members()[gen.below(cls.size())];
        } else {
          if (mode == 3) {
            std::tie(a, c) = straddling(gen, wp.group(), max_len, right_side);
          }
          b = pick_cofactor(wp, gen, a, c, right_side);
        }
        bool const antecedent = right_side ? wp.equal(a + c, b + c) : wp.equal(c + a, c + b);
        if (!antecedent) {
          continue;
        }
        ++res.hits;
        res.nontrivial += (a != b);
        if (!res.violation && !wp.equal(a, b)) {
          res.violation = CancellationViolation{a, b, c, right_side};
        }
      }
    });

    CancellationReport report;
    report.trials = trials;
    for (auto& r : results) {
      report.antecedent_hits += r.hits;
      report.nontrivial_hits += r.nontrivial;
      if (r.violation && !report.violation) {
        report.violation = std::move(r.violation);
        report.passed    = false;
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  RepresentativeList::RepresentativeList(Normalizer const& nf, std::size_t max_len)
      : _nf(&nf), _max_len(max_len) {}

  // Steps the odometer through all words in shortlex order.
  bool RepresentativeList::advance_odometer() {
    if (!_started) {
      _started = true;
      return true;
    }
    std::size_t const n = _nf->alphabet_size();
    for (std::size_t i = _odometer.size(); i-- > 0;) {
      if (_odometer[i] < n) {
        ++_odometer[i];
        return true;
      }
      _odometer[i] = 1;
    }
    if (_odometer.size() == _max_len) {
      return false;
    }
    _odometer.assign(_odometer.size() + 1, 1);
    return true;
  }

  Word const* RepresentativeList::get(std::size_t i) {
    while (_reps.size() <= i && !_exhausted) {
      if (!advance_odometer()) {
        _exhausted = true;
        break;
      }
      Word w(_odometer);
      if (_nf->normal_form(w) == w) {
        _reps.push_back(std::move(w));
      }
    }
    return i < _reps.size() ? &_reps[i] : nullptr;
  }

  std::vector<Word> const& RepresentativeList::materialize() {
    while (get(_reps.size()) != nullptr) {
    }
    return _reps;
  }

  std::optional<long double> representative_count(WordProblem const& wp,
                                                  std::size_t        max_len) {
    std::size_t const n = wp.alphabet_size();
    if (max_len > n) {
      return std::nullopt;
    }
    long double total = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
      total += std::pow(static_cast<long double>(n), static_cast<long double>(len));
    }
    if (max_len == n) {
      // the relation words form one class; nothing else of length n rewrites
      total -= static_cast<long double>(wp.group().size() - 1);
    }
    return total;
  }

  long double subset_count(long double n, std::size_t max_size) {
    long double total = 0;
    long double binom = 1;
    for (std::size_t r = 1; r <= max_size && r <= n; ++r) {
      binom = binom * (n - static_cast<long double>(r - 1)) / static_cast<long double>(r);
      total += binom;
    }
    return total;
  }

  BoundedSubsets::BoundedSubsets(std::size_t max_size)
      : _max_size(max_size), _indices{0} {
    if (max_size == 0) {
      throw InvalidArgument("max_size must be positive");
    }
  }

  // Next larger characteristic number with at most max_size bits: add 1 if
  // that keeps the popcount in bounds, otherwise add the lowest set bit.
  void BoundedSubsets::advance() {
    if (_indices.size() < _max_size && _indices.front() > 0) {
      _indices.insert(_indices.begin(), 0);
      return;
    }
    std::size_t run = 1;
    while (run < _indices.size() && _indices[run] == _indices[0] + run) {
      ++run;
    }
    std::size_t const carried = _indices[0] + run;
    _indices.erase(_indices.begin(), _indices.begin() + run);
    _indices.insert(_indices.begin(), carried);
  }

  SubsetSpecStream::SubsetSpecStream(Normalizer const& nf,
                                     std::size_t       max_len,
                                     std::size_t       max_size)
      : _nf(&nf), _reps(nf, max_len), _max_size(max_size), _left(max_size),
        _right(max_size) {}

  std::optional<SubsetSpec> SubsetSpecStream::next() {
    while (!_done) {
      if (_reps.get(_left.max_index()) == nullptr) {
        _done = true;
        break;
      }
      if (_reps.get(_right.max_index()) == nullptr) {
        _left.advance();
        _right = BoundedSubsets(_max_size);
        continue;
      }
      auto const c = _left.current();
      auto const d = _right.current();
      std::optional<SubsetSpec> out;
      if (c.size() + d.size() > 2) {
        std::vector<Word> cw, dw;
        for (auto i : c) {
          cw.push_back(*_reps.get(i));
        }
        for (auto j : d) {
          dw.push_back(*_reps.get(j));
        }
        out = SubsetSpec::make(std::move(cw), std::move(dw), *_nf);
      }
      _right.advance();
      if (out) {
        ++_yielded;
        return out;
      }
    }
    return std::nullopt;
  }

  SubsetSpecStream
  enumerate_subset_specs(Normalizer const& nf, std::size_t max_len, std::size_t max_size) {
    return SubsetSpecStream(nf, max_len, max_size);
  }

  ////////////////////////////////////////////////////////////////////////
  // Sweeps
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Clock = std::chrono::steady_clock;

    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();

    // Interned normal forms of c * d, filled row by row on demand.
    template <typename LeftAt, typename RightAt>
    class ProductTable {
     public:
      ProductTable(Normalizer const& nf, LeftAt left, RightAt right)
          : _nf(nf), _left(left), _right(right) {}

      // Row i, valid for every column <= last.
      std::uint32_t const* row(std::size_t i, std::size_t last) {
        if (_rows.size() <= i) {
          _rows.resize(i + 1);
        }
        auto& r = _rows[i];
        while (r.size() <= last) {
          Word const w  = _nf.normal_form(*_left(i) + *_right(r.size()));
          auto [it, ok] = _ids.emplace(w, static_cast<std::uint32_t>(_ids.size()));
          r.push_back(it->second);
        }
        return r.data();
      }

     private:
      Normalizer const&                        _nf;
      LeftAt                                   _left;
      RightAt                                  _right;
      std::vector<std::vector<std::uint32_t>>  _rows;
      std::unordered_map<Word, std::uint32_t>  _ids;
    };

    std::size_t count_unique(std::uint32_t const* ids, std::size_t m) noexcept {
      std::size_t unique = 0;
      for (std::size_t a = 0; a < m; ++a) {
        bool alone = true;
        for (std::size_t b = 0; b < m && alone; ++b) {
          alone = (a == b) || ids[a] != ids[b];
        }
        unique += alone;
      }
      return unique;
    }

    // Flattened list of the first `count` colex subsets.
    struct SubsetList {
      std::vector<std::uint32_t> indices;
      std::vector<std::uint8_t>  sizes;
      std::vector<std::uint32_t> offsets;

      std::size_t size() const noexcept {
        return sizes.size();
      }
    };

    SubsetList list_subsets(std::size_t universe, std::size_t max_size) {
      SubsetList     out;
      BoundedSubsets it(max_size);
      for (; it.max_index() < universe; it.advance()) {
        out.offsets.push_back(static_cast<std::uint32_t>(out.indices.size()));
        out.sizes.push_back(static_cast<std::uint8_t>(it.current().size()));
        for (auto i : it.current()) {
          out.indices.push_back(static_cast<std::uint32_t>(i));
        }
      }
      return out;
    }

    std::vector<Word> normalise_pool(Normalizer const& nf, std::vector<Word> pool) {
      for (auto& w : pool) {
        w = nf.normal_form(w);
      }
      std::sort(pool.begin(), pool.end(), shortlex_less);
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
      return pool;
    }

    void report_progress(std::ostream* progress, SweepSummary const& s) {
      if (progress != nullptr) {
        *progress << "tup-sweep: " << s.specs_checked << " specs checked, min unique "
                  << s.min_unique_count << std::endl;
      }
    }

    // Both universes finite and listed in memory: every C subset is an
    // independent work item.
    SweepSummary sweep_in_memory(Normalizer const&        nf,
                                 std::vector<Word> const& left,
                                 std::vector<Word> const& right,
                                 std::size_t              max_size,
                                 SweepLimits const&       limits,
                                 std::ostream*            progress,
                                 SweepSummary             summary) {
      auto const start    = Clock::now();
      auto       left_at  = [&left](std::size_t i) { return &left[i]; };
      auto       right_at = [&right](std::size_t j) { return &right[j]; };
      ProductTable table(nf, left_at, right_at);
      std::vector<std::uint32_t const*> rows(left.size());
      for (std::size_t i = 0; i < left.size(); ++i) {
        rows[i] = table.row(i, right.size() - 1);
      }
      SubsetList const cs = list_subsets(left.size(), max_size);
      SubsetList const ds = list_subsets(right.size(), max_size);

      struct Partial {
        std::uint64_t              checked    = 0;
        std::size_t                min_unique = std::numeric_limits<std::size_t>::max();
        std::optional<std::size_t> failing_d;
        bool                       ran        = false;
      };
      std::vector<Partial>      partial(cs.size());
      std::atomic<bool>         stop{false};
      std::atomic<std::uint64_t> total{0};
      std::atomic<std::size_t>  next_report{0};

      parallel_for(cs.size(), [&](std::size_t ci) {
        if (stop.load(std::memory_order_relaxed)) {
          return;
        }
        Partial&             p     = partial[ci];
        std::uint8_t const   csize = cs.sizes[ci];
        std::uint32_t const* cidx  = &cs.indices[cs.offsets[ci]];
        std::uint32_t        ids[64];
        for (std::size_t di = 0; di < ds.size(); ++di) {
          std::uint8_t const dsize = ds.sizes[di];
          if (csize + dsize <= 2) {
            continue;
          }
          std::uint32_t const* didx = &ds.indices[ds.offsets[di]];
          std::size_t          m    = 0;
          for (std::uint8_t a = 0; a < csize; ++a) {
            std::uint32_t const* row = rows[cidx[a]];
            for (std::uint8_t b = 0; b < dsize; ++b) {
              ids[m++] = row[didx[b]];
            }
          }
          std::size_t const unique = count_unique(ids, m);
          ++p.checked;
          p.min_unique = std::min(p.min_unique, unique);
          if (unique < 2) {
            p.failing_d = di;
            stop        = true;
            break;
          }
        }
        p.ran = true;
        std::uint64_t const done = total += p.checked;
        if (limits.time_budget && Clock::now() - start > *limits.time_budget) {
          stop = true;
        }
        if (done >= limits.max_specs) {
          stop = true;
        }
        if (progress != nullptr && ci >= next_report.load()) {
          next_report = ci + std::max<std::size_t>(1, cs.size() / 16);
          *progress << "tup-sweep: " << ci + 1 << "/" << cs.size() << " C-subsets done"
                    << std::endl;
        }
      });

      summary.complete = true;
      for (std::size_t ci = 0; ci < cs.size(); ++ci) {
        auto const& p = partial[ci];
        if (!p.ran) {
          summary.complete = false;
          continue;
        }
        summary.specs_checked += p.checked;
        summary.min_unique_count = std::min(summary.min_unique_count, p.min_unique);
        if (p.failing_d && !summary.failure) {
          SweepFailure f;
          f.grid_index = static_cast<std::uint64_t>(ci) * ds.size() + *p.failing_d;
          for (std::uint8_t a = 0; a < cs.sizes[ci]; ++a) {
            f.left.push_back(left[cs.indices[cs.offsets[ci] + a]]);
          }
          for (std::uint8_t b = 0; b < ds.sizes[*p.failing_d]; ++b) {
            f.right.push_back(right[ds.indices[ds.offsets[*p.failing_d] + b]]);
          }
          f.unique_count  = p.min_unique;
          summary.failure = std::move(f);
        }
      }
      if (summary.failure) {
        summary.complete = false;
      }
      summary.elapsed_ms
          = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      report_progress(progress, summary);
      return summary;
    }

    // Sequential sweep over lazily produced universes.
    template <typename LeftAt, typename RightAt>
    SweepSummary sweep_lazy(Normalizer const&  nf,
                            LeftAt             left_at,
                            RightAt            right_at,
                            std::size_t        max_size,
                            SweepLimits const& limits,
                            std::ostream*      progress,
                            SweepSummary       summary) {
      auto const   start = Clock::now();
      ProductTable table(nf, left_at, right_at);
      std::vector<std::uint32_t> ids(max_size * max_size);
      std::vector<std::uint32_t const*> rows(max_size);
      std::uint64_t grid = 0;
      bool          stopped = false;

      for (BoundedSubsets cs(max_size); !stopped && left_at(cs.max_index()) != nullptr;
           cs.advance()) {
        auto const c = cs.current();
        for (BoundedSubsets ds(max_size); right_at(ds.max_index()) != nullptr;
             ds.advance(), ++grid) {
          auto const d = ds.current();
          if (c.size() + d.size() <= 2) {
            continue;
          }
          if (summary.specs_checked >= limits.max_specs) {
            stopped = true;
            break;
          }
          if ((summary.specs_checked & 0xFFF) == 0) {
            if (limits.time_budget && Clock::now() - start > *limits.time_budget) {
              stopped = true;
              break;
            }
            if (progress != nullptr && (summary.specs_checked & 0xFFFFFF) == 0
                && summary.specs_checked != 0) {
              report_progress(progress, summary);
            }
          }
          std::size_t const dmax = ds.max_index();
          for (std::size_t a = 0; a < c.size(); ++a) {
            rows[a] = table.row(c[a], dmax);
          }
          std::size_t m = 0;
          for (std::size_t a = 0; a < c.size(); ++a) {
            for (auto j : d) {
              ids[m++] = rows[a][j];
            }
          }
          std::size_t const unique = count_unique(ids.data(), m);
          ++summary.specs_checked;
          summary.min_unique_count = std::min(summary.min_unique_count, unique);
          if (unique < 2) {
            SweepFailure f{grid, {}, {}, unique};
            for (auto i : c) {
              f.left.push_back(*left_at(i));
            }
            for (auto j : d) {
              f.right.push_back(*right_at(j));
            }
            summary.failure = std::move(f);
            stopped         = true;
            break;
          }
        }
      }
      summary.complete = !stopped;
      summary.elapsed_ms
          = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      report_progress(progress, summary);
      return summary;
    }

    constexpr long double in_memory_subset_limit = 2e7L;

  }  // namespace

  SweepSummary tup_sweep(WordProblem const& wp,
                         std::size_t        max_len,
                         std::size_t        max_size,
                         SweepLimits        limits,
                         std::ostream*      progress) {
    SweepSummary summary;
    summary.k        = wp.alphabet_size() / 4;
    summary.max_len  = max_len;
    summary.max_size = max_size;
    auto const count = representative_count(wp, max_len);
    if (count) {
      long double const s = subset_count(*count, max_size);
      summary.specs_total = s * s - *count * *count;
    }
    if (limits.in_memory && count
        && subset_count(*count, max_size) <= in_memory_subset_limit) {
      RepresentativeList reps(wp, max_len);
      auto const&        all = reps.materialize();
      return sweep_in_memory(wp, all, all, max_size, limits, progress, summary);
    }
    RepresentativeList reps(wp, max_len);
    auto               at = [&reps](std::size_t i) { return reps.get(i); };
    return sweep_lazy(wp, at, at, max_size, limits, progress, summary);
  }

  SweepSummary tup_sweep_pools(Normalizer const& nf,
                               std::vector<Word> left_pool,
                               std::vector<Word> right_pool,
                               std::size_t       max_size,
                               SweepLimits       limits,
                               std::ostream*     progress) {
    left_pool  = normalise_pool(nf, std::move(left_pool));
    right_pool = normalise_pool(nf, std::move(right_pool));
    if (left_pool.empty() || right_pool.empty()) {
      throw InvalidArgument("empty pool");
    }
    SweepSummary summary;
    summary.k        = nf.alphabet_size() / 4;
    summary.max_size = max_size;
    for (auto const* pool : {&left_pool, &right_pool}) {
      for (auto const& w : *pool) {
        summary.max_len = std::max(summary.max_len, w.size());
      }
    }
    long double const nl = static_cast<long double>(left_pool.size());
    long double const nr = static_cast<long double>(right_pool.size());
    summary.specs_total
        = subset_count(nl, max_size) * subset_count(nr, max_size) - nl * nr;
    if (limits.in_memory && subset_count(nl, max_size) <= in_memory_subset_limit
        && subset_count(nr, max_size) <= in_memory_subset_limit) {
      return sweep_in_memory(nf, left_pool, right_pool, max_size, limits, progress, summary);
    }
    auto left_at = [&left_pool](std::size_t i) {
      return i < left_pool.size() ? &left_pool[i] : nullptr;
    };
    auto right_at = [&right_pool](std::size_t j) {
      return j < right_pool.size() ? &right_pool[j] : nullptr;
    };
    return sweep_lazy(nf, left_at, right_at, max_size, limits, progress, summary);
  }

  std::pair<std::vector<Word>, std::vector<Word>> split_relation_pools(WordProblem const& wp,
                                                                       Filler filler) {
    GroupTable const& g = wp.group();
    std::size_t const n = g.degree();
    std::vector<Word> left, right;
    for (auto const& sigma : g.elements()) {
      auto const img = sigma.images();
      for (std::size_t j = 1; j < n; ++j) {
        std::vector<letter_type> c, d;
        for (std::size_t x = 0; x < n - j; ++x) {
          c.push_back(filler == Filler::constant ? 1 : static_cast<letter_type>(j + 1 + x));
        }
        c.insert(c.end(), img.begin(), img.begin() + j);
        d.insert(d.end(), img.begin() + j, img.end());
        for (std::size_t x = 0; x < j; ++x) {
          d.push_back(filler == Filler::constant ? static_cast<letter_type>(n)
                                                 : static_cast<letter_type>(x + 1));
        }
        left.emplace_back(std::move(c));
        right.emplace_back(std::move(d));
      }
    }
    return {normalise_pool(wp, std::move(left)), normalise_pool(wp, std::move(right))};
  }

}  // namespace qsemi
