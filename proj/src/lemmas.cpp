#include "qsemi/lemmas.hpp"

#include <algorithm>  // for equal
#include <random>     // for mt19937_64, uniform_int_distribution

namespace qsemi {

  namespace {

    void fail(LemmaReport& report, Counterexample ce) {
      report.passed         = false;
      report.counterexample = std::move(ce);
    }

    LemmaReport start_report(LemmaId id, GroupTable const& g) {
      LemmaReport r;
      r.lemma_id = id;
      r.k        = g.degree() / 4;
      return r;
    }

    // Elements whose image tuple starts with `prefix`.
    std::vector<std::size_t> prefix_matches(GroupTable const&            g,
                                            std::span<letter_type const> prefix) {
      std::vector<std::size_t> out;
      for (std::size_t e = 0; e < g.size(); ++e) {
        auto img = g[e].images();
        if (std::equal(prefix.begin(), prefix.end(), img.begin())) {
          out.push_back(e);
        }
      }
      return out;
    }

    class WordSampler {
     public:
      WordSampler(std::size_t n, std::uint64_t seed) : _n(n), _rng(seed) {}

      std::size_t below(std::size_t bound) {
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(_rng);
      }

      void random_letters(std::vector<letter_type>& out, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
          out.push_back(static_cast<letter_type>(below(_n) + 1));
        }
      }

     private:
      std::size_t     _n;
      std::mt19937_64 _rng;
    };

    void append(std::vector<letter_type>&    out,
                std::span<letter_type const> s,
                std::size_t                  first,
                std::size_t                  len) {
      out.insert(out.end(), s.begin() + first, s.begin() + first + len);
    }

  }  // namespace

  std::string_view lemma_name(LemmaId id) noexcept {
    switch (id) {
      case LemmaId::not_possible:
        return "NotPossible";
      case LemmaId::max_one:
        return "MaxOne";
      case LemmaId::big:
        return "Big";
      case LemmaId::overlapp:
        return "Overlapp";
      case LemmaId::stepss:
        return "Stepss";
      case LemmaId::step3:
        return "Step3";
      case LemmaId::sym_not_possible:
        return "SymNotPossible";
      case LemmaId::sym_max_one:
        return "SymMaxOne";
      case LemmaId::sym_step3:
        return "SymStep3";
      case LemmaId::sym_overlapp:
        return "SymOverlapp";
      case LemmaId::sym_stepss:
        return "SymStepss";
    }
    return "Unknown";
  }

  LemmaReport verify_not_possible(GroupTable const& g) {
    LemmaReport       report = start_report(LemmaId::not_possible, g);
    std::size_t const n    = g.degree();
    std::size_t const half = n / 2;
    for (std::size_t s = 0; s < g.size(); ++s) {
      auto const& sigma = g[s];
      for (std::size_t t = 0; t < g.size(); ++t) {
        auto const& tau = g[t];
        for (std::size_t p = 1; p + 1 <= half; ++p) {
          for (std::size_t q = half + 1; q <= n - 1; ++q) {
            ++report.instances;
            if (sigma(p) == tau(q) && sigma(p + 1) == tau(q + 1)) {
              ++report.hypothesis_hits;
              fail(report,
                   {{{"sigma", sigma}, {"tau", tau}},
                    {{"p", p}, {"q", q}},
                    {},
                    "x_sigma(p) x_sigma(p+1) == x_tau(q) x_tau(q+1)"});
              return report;
            }
          }
        }
      }
    }
    return report;
  }

  LemmaReport verify_max_one(GroupTable const& g) {
    LemmaReport       report = start_report(LemmaId::max_one, g);
    std::size_t const n    = g.degree();
    std::size_t const half = n / 2;
    for (std::size_t s = 0; s < g.size(); ++s) {
      auto const& sigma = g[s];
      for (std::size_t t = 0; t < g.size(); ++t) {
        auto const& tau = g[t];
        for (std::size_t i = 1; i + 1 < half; ++i) {
          for (std::size_t j = i; j <= n; ++j) {
            ++report.instances;
            bool equal = true;
            for (std::size_t x = 0; x <= j - i && equal; ++x) {
              equal = sigma(n - j + i + x) == tau(i + x);
            }
            if (!equal) {
              continue;
            }
            ++report.hypothesis_hits;
            if (!(j == i || (j == n && s == t))) {
              fail(report,
                   {{{"sigma", sigma}, {"tau", tau}},
                    {{"i", i}, {"j", j}},
                    {},
                    "suffix of sigma equals factor of tau with j != i"});
              return report;
            }
          }
        }
      }
    }
    return report;
  }

  LemmaReport verify_big(GroupTable const& g) {
    LemmaReport       report = start_report(LemmaId::big, g);
    std::size_t const half = g.degree() / 2;
    for (std::size_t s = 0; s < g.size(); ++s) {
      auto const& sigma = g[s];
      for (std::size_t t = 0; t < g.size(); ++t) {
        auto const& tau = g[t];
        for (std::size_t i = 1; i <= half; ++i) {
          for (std::size_t j = 1; j <= half; ++j) {
            ++report.instances;
            bool equal = true;
            for (std::size_t x = 0; x <= half && equal; ++x) {
              equal = sigma(j + x) == tau(i + x);
            }
            if (!equal) {
              continue;
            }
            ++report.hypothesis_hits;
            if (!(i == j && s == t)) {
              fail(report,
                   {{{"sigma", sigma}, {"tau", tau}},
                    {{"i", i}, {"j", j}},
                    {},
                    "factors of length n/2 + 1 agree with (i, sigma) != (j, tau)"});
              return report;
            }
          }
        }
      }
    }
    return report;
  }

  LemmaReport verify_overlapp(GroupTable const& g) {
    LemmaReport       report = start_report(LemmaId::overlapp, g);
    std::size_t const n = g.degree();
    std::vector<letter_type> lhs;
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t l = j; l <= n; ++l) {
        for (std::size_t m = std::max(l + 1, n - 1); m <= n; ++m) {
          for (std::size_t i = 1; i <= 2; ++i) {
            if (m - j + i > n) {
              ++report.flagged;
              continue;
            }
            for (std::size_t s = 0; s < g.size(); ++s) {
              for (std::size_t t = 0; t < g.size(); ++t) {
                if (s == t) {
                  continue;
                }
                lhs.clear();
                for (std::size_t x = j; x <= l; ++x) {
                  lhs.push_back(g[s](x));
                }
                for (std::size_t x = l + 1; x <= m; ++x) {
                  lhs.push_back(g[t](x));
                }
                for (std::size_t e = 0; e < g.size(); ++e) {
                  ++report.instances;
                  auto const& lambda = g[e];
                  bool        equal  = true;
                  for (std::size_t x = 0; x < lhs.size() && equal; ++x) {
                    equal = lhs[x] == lambda(i + x);
                  }
                  if (!equal) {
                    continue;
                  }
                  ++report.hypothesis_hits;
                  if (!(j == l && l + 1 == m)) {
                    fail(report,
                         {{{"sigma", g[s]}, {"tau", g[t]}, {"lambda", lambda}},
                          {{"i", i}, {"j", j}, {"l", l}, {"m", m}},
                          {},
                          "overlap word equals a lambda factor with j != l or "
                          "l + 1 != m"});
                    return report;
                  }
                }
              }
            }
          }
        }
      }
    }
    return report;
  }

  LemmaReport verify_stepss(GroupTable const&    g,
                            RewriteConfig const& cfg,
                            std::size_t          max_extra,
                            std::uint64_t        seed) {
    LemmaReport       report = start_report(LemmaId::stepss, g);
    std::size_t const n = g.degree();
    WordSampler       rng(n, seed ^ 0x5eed5eed5eedULL);
    constexpr std::size_t variants = 2;

    std::vector<Word> seeds;
    for (std::size_t r = n; r <= n + max_extra && r <= cfg.max_word_length; ++r) {
      std::size_t const tail = r - n;
      for (std::size_t s = 0; s < g.size(); ++s) {
        auto sigma = g[s].images();
        for (std::size_t v = 0; v < variants; ++v) {
          std::vector<letter_type> w(sigma.begin(), sigma.end());
          rng.random_letters(w, tail);
          seeds.emplace_back(std::move(w));

          // a second relation word overlapping the first in one letter
          if (tail >= n - 1) {
            for (auto e : prefix_matches(g, sigma.subspan(n - 1, 1))) {
              std::vector<letter_type> w2(sigma.begin(), sigma.end());
              append(w2, g[e].images(), 1, n - 1);
              rng.random_letters(w2, tail - (n - 1));
              seeds.emplace_back(std::move(w2));
            }
          }
          // two adjacent relation words
          if (tail >= n) {
            std::vector<letter_type> w3(sigma.begin(), sigma.end());
            append(w3, g[rng.below(g.size())].images(), 0, n);
            rng.random_letters(w3, tail - n);
            seeds.emplace_back(std::move(w3));
          }
        }
      }
    }

    for (auto const& sw : seeds) {
      CongruenceClass const cls     = class_of(sw, g, cfg);
      auto const            members = cls.members();
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          Word const& w1 = members[a];
          Word const& w2 = members[b];
          if (w1[0] == w2[0]) {
            continue;
          }
          ++report.instances;
          std::size_t const r = w1.size();
          auto              make_ce = [&](std::string reason) {
            return Counterexample{{}, {{"r", r}}, {{"w1", w1}, {"w2", w2}}, std::move(reason)};
          };
          if (r < n) {
            fail(report, make_ce("equal words with different first letters and r < n"));
            return report;
          }
          auto sigmas = prefix_matches(g, w1.factor(0, n - 1));
          auto taus   = prefix_matches(g, w2.factor(0, n - 1));
          if (sigmas.empty() || taus.empty()) {
            fail(report, make_ce("a prefix of length n - 1 is not a relation prefix"));
            return report;
          }
          ++report.hypothesis_hits;
          bool ok = false;
          for (auto s : sigmas) {
            for (auto t : taus) {
              ok |= (g[s](n) == w1[n - 1]) || (g[t](n) == w2[n - 1]);
            }
          }
          if (!ok) {
            auto ce = make_ce("sigma(n) != i_n and tau(n) != j_n");
            ce.permutations = {{"sigma", g[sigmas[0]]}, {"tau", g[taus[0]]}};
            fail(report, std::move(ce));
            return report;
          }
        }
      }
    }
    return report;
  }

  LemmaReport verify_step3(GroupTable const&    g,
                           RewriteConfig const& cfg,
                           std::size_t          samples,
                           std::uint64_t        seed) {
    LemmaReport       report = start_report(LemmaId::step3, g);
    std::size_t const n = g.degree();
    WordSampler       rng(n, seed ^ 0x57e93ULL);

    for (std::size_t t = 0; t < g.size(); ++t) {
      auto const tau = g[t].images();
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t sample = 0; sample < samples; ++sample) {
          // w = tau(i+1..n) w2 with w2 biased towards relation words
          std::vector<letter_type> w(tau.begin() + i, tau.end());
          switch (rng.below(4)) {
            case 0:
              rng.random_letters(w, rng.below(n + 1));
              break;
            case 1: {
              auto rho = prefix_matches(g, tau.subspan(n - 1, 1));
              if (!rho.empty()) {
                append(w, g[rho[rng.below(rho.size())]].images(), 1, n - 1);
              }
              rng.random_letters(w, rng.below(n / 2 + 1));
              break;
            }
            case 2:
              rng.random_letters(w, rng.below(n / 2 + 1));
              append(w, g[rng.below(g.size())].images(), 0, n);
              rng.random_letters(w, rng.below(n / 2 + 1));
              break;
            default:
              append(w, g[rng.below(g.size())].images(), 0, n);
              rng.random_letters(w, rng.below(n / 2 + 1));
              break;
          }
          if (w.size() > cfg.max_word_length) {
            w.resize(cfg.max_word_length);
          }
          Word const word(std::move(w));
          Word const w2(word.factor(n - i, word.size() - (n - i)));
          CongruenceClass const cls = class_of(word, g, cfg);
          for (auto const& w1 : cls.members()) {
            ++report.instances;
            // first shape: tau(i+1..n) is a prefix
            if (w1.size() >= n - i
                && std::equal(tau.begin() + i, tau.end(), w1.begin())) {
              continue;
            }
            // second shape: tau(i+1..n-1) gamma(1..n-1)
            std::size_t const head = n - 1 - i;
            if (w1.size() >= head + n - 1
                && std::equal(tau.begin() + i, tau.end() - 1, w1.begin())
                && !prefix_matches(g, w1.factor(head, n - 1)).empty()) {
              ++report.hypothesis_hits;
              continue;
            }
            fail(report,
                 {{{"tau", g[t]}},
                  {{"i", i}},
                  {{"w2", w2}, {"w1", w1}},
                  "class member has neither prefix shape"});
            return report;
          }
        }
      }
    }
    return report;
  }

  std::vector<LemmaReport> verify_symmetric_analogs(GroupTable const&    g,
                                                    RewriteConfig const& cfg,
                                                    std::size_t          max_extra,
                                                    std::size_t          samples,
                                                    std::uint64_t        seed) {
    GroupTable const         mirror = g.mirrored();
    std::vector<LemmaReport> out;
    auto relabel = [&out](LemmaReport r, LemmaId id) {
      r.lemma_id = id;
      out.push_back(std::move(r));
    };
    relabel(verify_not_possible(mirror), LemmaId::sym_not_possible);
    relabel(verify_max_one(mirror), LemmaId::sym_max_one);
    relabel(verify_step3(mirror, cfg, samples, seed), LemmaId::sym_step3);
    relabel(verify_overlapp(mirror), LemmaId::sym_overlapp);
    relabel(verify_stepss(mirror, cfg, max_extra, seed), LemmaId::sym_stepss);
    return out;
  }

}  // namespace qsemi
