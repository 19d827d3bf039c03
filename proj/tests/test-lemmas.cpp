#include "catch_amalgamated.hpp"

#include "controls.hpp"

#include "qsemi/lemmas.hpp"
#include "qsemi/quaternion.hpp"
#include "qsemi/rewrite.hpp"

namespace qsemi {

  namespace {
    std::vector<LemmaReport> exhaustive(GroupTable const& g) {
      return {verify_not_possible(g), verify_max_one(g), verify_big(g), verify_overlapp(g)};
    }

    bool report_ok(LemmaReport const& r) {
      return r.passed && !r.counterexample.has_value();
    }

    bool failed(LemmaReport const& r) {
      return !r.passed && r.counterexample.has_value();
    }

    GroupTable c2_cubed() {
      std::vector<Permutation> elts;
      for (unsigned m = 0; m < 8; ++m) {
        std::vector<letter_type> img;
        for (unsigned x = 0; x < 8; ++x) {
          img.push_back(static_cast<letter_type>((x ^ m) + 1));
        }
        elts.emplace_back(std::move(img));
      }
      return GroupTable::from_elements(std::move(elts));
    }
  }  // namespace

  TEST_CASE("lemma names", "[quick][lemmas]") {
    REQUIRE(lemma_name(LemmaId::not_possible) == "NotPossible");
    REQUIRE(lemma_name(LemmaId::overlapp) == "Overlapp");
    REQUIRE(lemma_name(LemmaId::sym_max_one) == "SymMaxOne");
    REQUIRE(lemma_name(LemmaId::sym_stepss) == "SymStepss");
  }

  TEST_CASE("exhaustive lemmas hold for k = 2, ..., 5", "[quick][lemmas]") {
    for (std::size_t k = 2; k <= 5; ++k) {
      GroupTable const g = generate_group(QuaternionConfig(k));
      for (auto const& r : exhaustive(g)) {
        INFO("k = " << k << ", " << lemma_name(r.lemma_id));
        REQUIRE(report_ok(r));
        REQUIRE(r.k == k);
        REQUIRE(r.instances > 0);
      }
    }
  }

  TEST_CASE("hypotheses are actually met", "[quick][lemmas]") {
    GroupTable const g = generate_group(QuaternionConfig(2));
    // j == i (resp. i == j and sigma == tau) instances satisfy the hypothesis
    REQUIRE(verify_max_one(g).hypothesis_hits > 0);
    REQUIRE(verify_big(g).hypothesis_hits > 0);
    REQUIRE(verify_overlapp(g).hypothesis_hits > 0);
    REQUIRE(verify_not_possible(g).hypothesis_hits == 0);
  }

  TEST_CASE("sampled lemmas hold for k = 2, 3", "[quick][lemmas]") {
    for (std::size_t k = 2; k <= 3; ++k) {
      std::size_t const   n   = 4 * k;
      GroupTable const    g   = generate_group(QuaternionConfig(k));
      RewriteConfig const cfg = RewriteConfig::defaults(n);
      LemmaReport const   s   = verify_stepss(g, cfg, n, 1);
      LemmaReport const   t   = verify_step3(g, cfg, 20, 1);
      INFO("k = " << k);
      REQUIRE(report_ok(s));
      REQUIRE(s.instances > 0);
      REQUIRE(report_ok(t));
      REQUIRE(t.instances > 0);
      // the second prefix shape does occur
      REQUIRE(t.hypothesis_hits > 0);
    }
  }

  TEST_CASE("symmetric analogs hold", "[quick][lemmas]") {
    for (std::size_t k = 2; k <= 4; ++k) {
      std::size_t const   n       = 4 * k;
      GroupTable const    g       = generate_group(QuaternionConfig(k));
      auto const          reports = verify_symmetric_analogs(g, RewriteConfig::defaults(n), 4, 10);
      REQUIRE(reports.size() == 5);
      REQUIRE(reports[0].lemma_id == LemmaId::sym_not_possible);
      REQUIRE(reports[1].lemma_id == LemmaId::sym_max_one);
      REQUIRE(reports[2].lemma_id == LemmaId::sym_step3);
      REQUIRE(reports[3].lemma_id == LemmaId::sym_overlapp);
      REQUIRE(reports[4].lemma_id == LemmaId::sym_stepss);
      for (auto const& r : reports) {
        INFO("k = " << k << ", " << lemma_name(r.lemma_id));
        REQUIRE(report_ok(r));
      }
    }
  }

  TEST_CASE("the cyclic group of order 8 is caught", "[quick][lemmas][control]") {
    GroupTable const    c   = testing::cyclic_table(8);
    RewriteConfig const cfg = RewriteConfig::defaults(8);
    REQUIRE(failed(verify_not_possible(c)));
    REQUIRE(failed(verify_max_one(c)));
    REQUIRE(failed(verify_big(c)));
    REQUIRE(failed(verify_stepss(c, cfg, 4)));
    REQUIRE(failed(verify_step3(c, cfg, 30)));
  }

  TEST_CASE("C2 x C2 x C2 is caught", "[quick][lemmas][control]") {
    GroupTable const    e   = c2_cubed();
    RewriteConfig const cfg = RewriteConfig::defaults(8);
    REQUIRE(failed(verify_not_possible(e)));
    REQUIRE(failed(verify_max_one(e)));
    REQUIRE(failed(verify_step3(e, cfg, 30)));
  }

  TEST_CASE("u replaced by a transposition is caught", "[quick][lemmas][control]") {
    GroupTable const g   = generate_group(QuaternionConfig(2));
    GroupTable const bad = testing::with_transposition(g, *g.index_of({0, true}), 3, 4);
    auto const       np  = verify_not_possible(bad);
    REQUIRE(failed(np));
    REQUIRE(np.counterexample->permutations.size() == 2);
    auto const ov = verify_overlapp(bad);
    REQUIRE(failed(ov));
    REQUIRE(ov.counterexample->permutations[1].second
            == Permutation::from_cycles(8, {{3, 4}}));
    auto const sym = verify_symmetric_analogs(bad, RewriteConfig::defaults(8), 2, 5);
    REQUIRE(failed(sym[0]));
    REQUIRE(failed(sym[3]));
  }

  TEST_CASE("reports are deterministic", "[quick][lemmas]") {
    GroupTable const    g   = generate_group(QuaternionConfig(2));
    RewriteConfig const cfg = RewriteConfig::defaults(8);
    auto const          a   = verify_step3(g, cfg, 15, 42);
    auto const          b   = verify_step3(g, cfg, 15, 42);
    REQUIRE(a.instances == b.instances);
    REQUIRE(a.hypothesis_hits == b.hypothesis_hits);
    auto const s = verify_stepss(g, cfg, 3, 42);
    auto const t = verify_stepss(g, cfg, 3, 42);
    REQUIRE(s.instances == t.instances);
  }

}  // namespace qsemi
