#include "qsemi/cli.hpp"

#include <algorithm>  // for reverse, max
#include <chrono>     // for seconds
#include <iomanip>    // for setw
#include <optional>   // for optional
#include <ostream>    // for ostream

#include "CLI11.hpp"

#include "qsemi/algebra.hpp"     // for zero_divisor_search
#include "qsemi/errors.hpp"      // for Error
#include "qsemi/lemmas.hpp"      // for verify_*
#include "qsemi/quaternion.hpp"  // for generate_group
#include "qsemi/rewrite.hpp"     // for WordProblem
#include "qsemi/serialize.hpp"   // for to_json
#include "qsemi/structure.hpp"   // for tup_sweep

namespace qsemi {

  namespace {

    struct Common {
      std::size_t                k      = 2;
      std::string                format = "text";
      std::optional<std::size_t> max_class_size;
      std::optional<std::size_t> max_word_length;
    };

    void add_common(CLI::App* cmd, Common& c) {
      cmd->add_option("--k", c.k, "Q_{4k} has 4k elements; n = 4k")
          ->required()
          ->check(CLI::Range(std::size_t(2), std::size_t(63)));
      cmd->add_option("--format", c.format, "Output format")
          ->check(CLI::IsMember({"text", "json"}));
      cmd->add_option("--max-class-size", c.max_class_size, "Congruence class cap");
      cmd->add_option("--max-word-length", c.max_word_length, "Word length cap");
    }

    // Default word length cap is 3n, raised to fit products of the sampled
    // words unless set explicitly.
    RewriteConfig rewrite_config(Common const& c, std::size_t needed = 0) {
      RewriteConfig cfg = RewriteConfig::defaults(4 * c.k);
      cfg.max_word_length = std::max(cfg.max_word_length, needed);
      if (c.max_class_size) {
        cfg.max_class_size = *c.max_class_size;
      }
      if (c.max_word_length) {
        cfg.max_word_length = *c.max_word_length;
      }
      return cfg;
    }

    json envelope(std::string_view command, std::size_t k, json params, bool passed, json details) {
      json out;
      out["command"] = command;
      out["k"]       = k;
      out["params"]  = std::move(params);
      out["passed"]  = passed;
      out["details"] = std::move(details);
      return out;
    }

    char const* verdict(bool ok) {
      return ok ? "pass" : "FAIL";
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int gen_group(Common const& c, std::ostream& out) {
      QuaternionConfig const cfg(c.k);
      GroupTable const       g = generate_group(cfg);
      Permutation const      t = build_t(cfg);
      Permutation const      u = build_u(cfg);
      if (c.format == "json") {
        json details = to_json(g);
        details["t"] = {{"cycles", t.cycle_string()}, {"images", t.images()}};
        details["u"] = {{"cycles", u.cycle_string()}, {"images", u.images()}};
        out << envelope("gen-group", c.k, json::object(), true, std::move(details)).dump(2)
            << '\n';
        return exit_pass;
      }
      out << "Q_" << cfg.n() << " in Sym_" << cfg.n() << ", " << g.size() << " elements\n";
      out << "t = " << t.cycle_string() << "  images " << t.image_string() << '\n';
      out << "u = " << u.cycle_string() << "  images " << u.image_string() << '\n';
      for (std::size_t i = 0; i < g.size(); ++i) {
        out << std::left << std::setw(8) << to_string(*g.label(i)) << g[i].cycle_string()
            << "  images " << g[i].image_string() << '\n';
      }
      return exit_pass;
    }

    struct LemmaOptions {
      std::optional<std::size_t> max_extra;
      std::size_t                samples = 200;
      std::uint64_t              seed    = 0;
    };

    int verify_lemmas(Common const& c, LemmaOptions const& o, std::ostream& out) {
      QuaternionConfig const qc(c.k);
      GroupTable const       g         = generate_group(qc);
      RewriteConfig const    cfg       = rewrite_config(c);
      std::size_t const      max_extra = o.max_extra.value_or(qc.n());

      std::vector<LemmaReport> reports;
      reports.push_back(verify_not_possible(g));
      reports.push_back(verify_max_one(g));
      reports.push_back(verify_big(g));
      reports.push_back(verify_overlapp(g));
      reports.push_back(verify_stepss(g, cfg, max_extra, o.seed));
      reports.push_back(verify_step3(g, cfg, o.samples, o.seed));
      for (auto& r : verify_symmetric_analogs(g, cfg, max_extra, o.samples, o.seed)) {
        reports.push_back(std::move(r));
      }
      OverlapReport const overlap = relation_overlaps(g);

      std::vector<std::pair<std::string, bool>> group_checks
          = {{"other", check_other(g)},
             {"disjoi", check_disjoi(g)},
             {"stabilizer_free", check_stabilizer_free(g)},
             {"overlap_bound",
              overlap.max_overlap <= 1 && overlap.full_overlap_is_trivial}};

      bool passed = true;
      for (auto const& r : reports) {
        passed &= r.passed;
      }
      for (auto const& [name, ok] : group_checks) {
        passed &= ok;
      }

      if (c.format == "json") {
        json details;
        details["lemmas"] = json::array();
        for (auto const& r : reports) {
          details["lemmas"].push_back(to_json(r));
        }
        details["group_checks"] = json::object();
        for (auto const& [name, ok] : group_checks) {
          details["group_checks"][name] = ok;
        }
        details["max_overlap"] = overlap.max_overlap;
        json params = {{"max_extra", max_extra}, {"samples", o.samples}, {"seed", o.seed}};
        out << envelope("verify-lemmas", c.k, std::move(params), passed, std::move(details))
                   .dump(2)
            << '\n';
      } else {
        for (auto const& r : reports) {
          out << std::left << std::setw(18) << lemma_name(r.lemma_id) << verdict(r.passed)
              << "  instances " << r.instances << ", hypothesis held " << r.hypothesis_hits;
          if (r.flagged != 0) {
            out << ", out of range " << r.flagged;
          }
          out << '\n';
          if (r.counterexample) {
            out << "  " << to_json(*r.counterexample).dump() << '\n';
          }
        }
        for (auto const& [name, ok] : group_checks) {
          out << std::left << std::setw(18) << name << verdict(ok) << '\n';
        }
        out << "max overlap " << overlap.max_overlap << '\n';
        out << (passed ? "all checks passed" : "some checks FAILED") << '\n';
      }
      return passed ? exit_pass : exit_fail;
    }

    int word_eq(Common const& c, std::string const& s1, std::string const& s2, std::ostream& out) {
      std::size_t const n  = 4 * c.k;
      Word const        w1 = parse_word(s1, n);
      Word const        w2 = parse_word(s2, n);
      WordProblem const wp(generate_group(QuaternionConfig(c.k)), rewrite_config(c));
      Word const        c1    = wp.normal_form(w1);
      Word const        c2    = wp.normal_form(w2);
      bool const        equal = c1 == c2;
      if (c.format == "json") {
        json params  = {{"w1", to_string(w1)}, {"w2", to_string(w2)}};
        json details = {{"equal", equal},
                        {"canonical_w1", to_string(c1)},
                        {"canonical_w2", to_string(c2)}};
        out << envelope("word-eq", c.k, std::move(params), equal, std::move(details)).dump(2)
            << '\n';
      } else {
        out << (equal ? "equal" : "not equal") << '\n'
            << "canonical(w1) = " << to_string(c1) << '\n'
            << "canonical(w2) = " << to_string(c2) << '\n';
      }
      return equal ? exit_pass : exit_fail;
    }

    struct TupOptions {
      std::size_t                  max_len  = 2;
      std::size_t                  max_size = 3;
      std::optional<std::uint64_t> max_specs;
      std::optional<double>        time_limit;
      std::string                  universe = "all";
    };

    int tup_check(Common const& c, TupOptions const& o, std::ostream& out, std::ostream& err) {
      WordProblem const wp(generate_group(QuaternionConfig(c.k)),
                           rewrite_config(c, 2 * 4 * c.k));
      SweepLimits limits;
      if (o.max_specs) {
        limits.max_specs = *o.max_specs;
      }
      if (o.time_limit) {
        limits.time_budget = std::chrono::milliseconds(
            static_cast<std::int64_t>(*o.time_limit * 1000));
      }
      json summaries = json::array();
      bool passed    = true;
      if (o.universe == "all") {
        SweepSummary const s = tup_sweep(wp, o.max_len, o.max_size, limits, &err);
        passed               = s.passed();
        summaries.push_back(to_json(s));
      } else {
        for (Filler f : {Filler::constant, Filler::relation}) {
          auto [left, right]   = split_relation_pools(wp, f);
          SweepSummary const s = tup_sweep_pools(
              wp, std::move(left), std::move(right), o.max_size, limits, &err);
          passed &= s.passed();
          json j      = to_json(s);
          j["filler"] = f == Filler::constant ? "constant" : "relation";
          summaries.push_back(std::move(j));
        }
      }
      json params = {{"max_len", o.max_len}, {"max_size", o.max_size}, {"universe", o.universe}};
      if (o.max_specs) {
        params["max_specs"] = *o.max_specs;
      }
      if (o.time_limit) {
        params["time_limit"] = *o.time_limit;
      }
      json doc = envelope("tup-check", c.k, std::move(params), passed, {{"sweeps", summaries}});
      if (c.format == "json") {
        out << doc.dump(2) << '\n';
      } else {
        for (auto const& s : summaries) {
          out << s.dump() << '\n';
        }
        out << (passed ? "t.u.p. holds on every spec checked"
                       : "sweep incomplete or t.u.p. violated")
            << '\n';
      }
      return passed ? exit_pass : exit_fail;
    }

    struct SampleOptions {
      std::size_t   trials      = 10'000;
      std::size_t   max_len     = 12;
      std::uint64_t seed        = 0;
      std::uint32_t p           = 2;
      std::size_t   max_support = 3;
    };

    int cancel_sample(Common const& c, SampleOptions const& o, std::ostream& out) {
      WordProblem const wp(generate_group(QuaternionConfig(c.k)),
                           rewrite_config(c, 2 * o.max_len));
      CancellationReport const r = check_cancellative_samples(wp, o.trials, o.max_len, o.seed);
      if (c.format == "json") {
        json params = {{"trials", o.trials}, {"max_len", o.max_len}, {"seed", o.seed}};
        out << envelope("cancel-sample", c.k, std::move(params), r.passed, to_json(r)).dump(2)
            << '\n';
      } else {
        out << "trials " << r.trials << ", hypothesis held " << r.antecedent_hits << " ("
            << r.nontrivial_hits << " with a != b)\n";
        if (r.violation) {
          out << "violation: " << to_json(r).at("violation").dump() << '\n';
        }
        out << (r.passed ? "no violation" : "cancellativity VIOLATED") << '\n';
      }
      return r.passed ? exit_pass : exit_fail;
    }

    int zero_divisor(Common const& c, SampleOptions const& o, std::ostream& out) {
      WordProblem const wp(generate_group(QuaternionConfig(c.k)),
                           rewrite_config(c, 2 * o.max_len));
      ZeroDivisorConfig cfg;
      cfg.p                         = o.p;
      cfg.trials                    = o.trials;
      cfg.max_support               = o.max_support;
      cfg.max_len                   = o.max_len;
      cfg.seed                      = o.seed;
      cfg.relations                 = &wp.group();
      ZeroDivisorResult const r     = zero_divisor_search(wp, cfg);
      bool const              found = r.witness.has_value();
      if (c.format == "json") {
        json params = {{"p", o.p},
                       {"trials", o.trials},
                       {"max_support", o.max_support},
                       {"max_len", o.max_len},
                       {"seed", o.seed}};
        out << envelope("zero-divisor", c.k, std::move(params), !found, to_json(r)).dump(2)
            << '\n';
      } else {
        out << "trials " << r.trials << ", products with collapsed support " << r.collisions
            << '\n';
        if (found) {
          out << "x = " << to_string(r.witness->first) << '\n'
              << "y = " << to_string(r.witness->second) << '\n'
              << "zero divisor FOUND" << '\n';
        } else {
          out << "no zero divisor found" << '\n';
        }
      }
      return found ? exit_fail : exit_pass;
    }

  }  // namespace

  int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app("Word problem, lemma and structure checks for the monoids S_n(Q_{4k})",
                 "qsemi");
    app.require_subcommand(1);

    Common        common;
    LemmaOptions  lemma;
    TupOptions    tup;
    SampleOptions cancel;
    SampleOptions zero;
    zero.max_len = 10;
    std::string   w1, w2;

    auto* gen = app.add_subcommand("gen-group", "Print the regular representation of Q_{4k}");
    add_common(gen, common);

    auto* lem = app.add_subcommand("verify-lemmas", "Run every lemma oracle and group check");
    add_common(lem, common);
    lem->add_option("--max-extra", lemma.max_extra, "Stepss radius: r <= n + max-extra (default n)");
    lem->add_option("--samples", lemma.samples, "Step3 samples per (tau, i)");
    lem->add_option("--seed", lemma.seed, "Sampling seed");

    auto* eq = app.add_subcommand("word-eq", "Decide whether two words are equal in S_n");
    add_common(eq, common);
    eq->add_option("w1", w1, "First word, e.g. 1,2,3")->required();
    eq->add_option("w2", w2, "Second word")->required();

    auto* tc = app.add_subcommand("tup-check", "Exhaustive two-unique-product sweep");
    add_common(tc, common);
    tc->add_option("--max-len", tup.max_len, "Maximum representative length");
    tc->add_option("--max-size", tup.max_size, "Maximum |C| and |D|")
        ->check(CLI::Range(std::size_t(1), std::size_t(8)));
    tc->add_option("--max-specs", tup.max_specs, "Stop after this many specs");
    tc->add_option("--time-limit", tup.time_limit, "Stop after this many seconds");
    tc->add_option("--universe", tup.universe, "all | targeted (split relation words)")
        ->check(CLI::IsMember({"all", "targeted"}));

    auto* cs = app.add_subcommand("cancel-sample", "Sample the cancellation laws");
    add_common(cs, common);
    cs->add_option("--trials", cancel.trials, "Number of trials");
    cs->add_option("--max-len", cancel.max_len, "Maximum length of a, b, c");
    cs->add_option("--seed", cancel.seed, "Sampling seed");

    auto* zd = app.add_subcommand("zero-divisor", "Search for zero divisors in F_p[S_n]");
    add_common(zd, common);
    zd->add_option("--p", zero.p, "Prime modulus");
    zd->add_option("--trials", zero.trials, "Number of trials");
    zd->add_option("--max-support", zero.max_support, "Maximum terms per factor");
    zd->add_option("--max-len", zero.max_len, "Maximum word length");
    zd->add_option("--seed", zero.seed, "Sampling seed");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return exit_pass;
    } catch (CLI::CallForAllHelp const& e) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_pass;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      auto const* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
      err << sub->help();
      return exit_error;
    }

    try {
      if (gen->parsed()) {
        return gen_group(common, out);
      } else if (lem->parsed()) {
        return verify_lemmas(common, lemma, out);
      } else if (eq->parsed()) {
        return word_eq(common, w1, w2, out);
      } else if (tc->parsed()) {
        return tup_check(common, tup, out, err);
      } else if (cs->parsed()) {
        return cancel_sample(common, cancel, out);
      } else {
        return zero_divisor(common, zero, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_error;
    }
  }

}  // namespace qsemi
