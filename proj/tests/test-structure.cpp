#include <cstdlib>   // for setenv, unsetenv
#include <optional>  // for optional
#include <set>       // for set
#include <sstream>   // for ostringstream

#include "catch_amalgamated.hpp"

#include "controls.hpp"

#include "qsemi/errors.hpp"
#include "qsemi/quaternion.hpp"
#include "qsemi/rewrite.hpp"
#include "qsemi/sampling.hpp"
#include "qsemi/structure.hpp"

namespace qsemi {

  namespace {
    WordProblem const& wp8() {
      static WordProblem const wp(generate_group(QuaternionConfig(2)),
                                  RewriteConfig::defaults(8));
      return wp;
    }

    Word iota(std::size_t n) {
      std::vector<letter_type> v;
      for (std::size_t i = 1; i <= n; ++i) {
        v.push_back(static_cast<letter_type>(i));
      }
      return Word(std::move(v));
    }

    // Random spec over short words, members made distinct.
    std::optional<SubsetSpec> random_spec(WordGenerator& gen, Normalizer const& nf) {
      auto pick = [&](std::size_t count) {
        std::vector<Word> out;
        std::set<Word>    seen;
        for (std::size_t i = 0; i < count; ++i) {
          Word w = nf.normal_form(gen.biased(10));
          if (seen.insert(w).second) {
            out.push_back(std::move(w));
          }
        }
        return out;
      };
      auto left  = pick(1 + gen.below(4));
      auto right = pick(1 + gen.below(4));
      return SubsetSpec::make(std::move(left), std::move(right), nf);
    }
  }  // namespace

  TEST_CASE("SubsetSpec construction", "[quick][structure]") {
    auto const& wp = wp8();
    Word const  uw{5, 8, 7, 6, 3, 2, 1, 4};
    REQUIRE_THROWS_AS(SubsetSpec::make({iota(8), uw}, {Word{1}}, wp), InvalidArgument);
    REQUIRE_THROWS_AS(SubsetSpec::make({}, {Word{1}}, wp), InvalidArgument);
    REQUIRE_THROWS_AS(SubsetSpec::make({Word{1}}, {}, wp), InvalidArgument);
    auto const s = SubsetSpec::make({uw}, {Word{1}}, wp);
    REQUIRE(s.left()[0] == iota(8));
  }

  TEST_CASE("product_report examples", "[quick][structure]") {
    auto const& wp = wp8();
    auto const  one = product_report(SubsetSpec::make({Word{1}}, {Word{2}}, wp), wp);
    REQUIRE(one.products.size() == 1);
    REQUIRE(one.unique_count == 1);

    auto const two = product_report(SubsetSpec::make({Word{1}, Word{2}}, {Word{3}}, wp), wp);
    REQUIRE(two.products.size() == 2);
    REQUIRE(two.unique_count == 2);

    // (1..7)(8) and (5,8,7,6,3,2,1)(4) are both the relation class
    auto const rel = product_report(
        SubsetSpec::make({iota(7), Word{5, 8, 7, 6, 3, 2, 1}}, {Word{8}, Word{4}}, wp), wp);
    REQUIRE(rel.products.size() == 3);
    REQUIRE(rel.products.at(iota(8)).size() == 2);
    REQUIRE(rel.unique_count == 2);
  }

  TEST_CASE("check_tup", "[quick][structure]") {
    auto const& wp = wp8();
    REQUIRE_THROWS_AS(check_tup(SubsetSpec::make({Word{1}}, {Word{2}}, wp), wp),
                      InvalidArgument);
    REQUIRE(check_tup(SubsetSpec::make({Word{1}, Word{2}}, {Word{3}}, wp), wp));

    testing::CollapsingQuotient const q;
    auto const         s = SubsetSpec::make({Word{}, Word{1}}, {Word{}, Word{1}}, q);
    std::ostringstream diag;
    REQUIRE(!check_tup(s, q, &diag));
    REQUIRE(diag.str().find("1 unique product") != std::string::npos);
    REQUIRE(product_report(s, q).unique_count == 1);
  }

  TEST_CASE("product report bookkeeping", "[quick][structure][property]") {
    auto const&   wp = wp8();
    WordGenerator gen(&wp.group(), 8, 1234);
    for (std::size_t trial = 0; trial < 300; ++trial) {
      auto const        s = *random_spec(gen, wp);
      auto const        r = product_report(s, wp);
      std::size_t       total = 0, unique = 0;
      std::set<std::pair<std::size_t, std::size_t>> pairs;
      for (auto const& [w, pres] : r.products) {
        total += pres.size();
        unique += (pres.size() == 1);
        pairs.insert(pres.begin(), pres.end());
        REQUIRE(wp.normal_form(w) == w);
      }
      REQUIRE(total == s.left().size() * s.right().size());
      REQUIRE(pairs.size() == total);
      REQUIRE(unique == r.unique_count);
      // u.p.
      REQUIRE(r.unique_count >= 1);
      if (s.left().size() + s.right().size() > 2) {
        REQUIRE(check_tup(s, wp));
      }
    }
  }

  TEST_CASE("products of homogeneous sets are homogeneous", "[quick][structure][property]") {
    auto const&   wp = wp8();
    WordGenerator gen(&wp.group(), 8, 4321);
    for (std::size_t trial = 0; trial < 200; ++trial) {
      std::size_t const lc = gen.below(10), ld = gen.below(10);
      std::vector<Word> left, right;
      std::set<Word>    seen;
      for (std::size_t i = 0; i < 3; ++i) {
        Word w = wp.normal_form(gen.biased_exact(lc));
        if (seen.insert(w).second) {
          left.push_back(std::move(w));
        }
      }
      seen.clear();
      for (std::size_t i = 0; i < 3; ++i) {
        Word w = wp.normal_form(gen.biased_exact(ld));
        if (seen.insert(w).second) {
          right.push_back(std::move(w));
        }
      }
      auto const r = product_report(SubsetSpec::make(left, right, wp), wp);
      for (auto const& [w, pres] : r.products) {
        REQUIRE(w.size() == lc + ld);
      }
    }
  }

  TEST_CASE("BoundedSubsets colex order", "[quick][structure]") {
    BoundedSubsets it(2);
    std::vector<std::vector<std::size_t>> seen;
    for (; it.max_index() < 4; it.advance()) {
      seen.emplace_back(it.current().begin(), it.current().end());
    }
    std::vector<std::vector<std::size_t>> const expected
        = {{0}, {1}, {0, 1}, {2}, {0, 2}, {1, 2}, {3}, {0, 3}, {1, 3}, {2, 3}};
    REQUIRE(seen == expected);
    REQUIRE(it.current()[0] == 4);

    for (std::size_t s = 1; s <= 4; ++s) {
      for (std::size_t n = 1; n <= 12; ++n) {
        BoundedSubsets b(s);
        std::size_t    count = 0;
        for (; b.max_index() < n; b.advance()) {
          REQUIRE(b.current().size() <= s);
          ++count;
        }
        REQUIRE(count == static_cast<std::size_t>(subset_count(n, s)));
      }
    }
    REQUIRE_THROWS_AS(BoundedSubsets(0), InvalidArgument);
  }

  TEST_CASE("representatives", "[quick][structure]") {
    auto const&        wp = wp8();
    RepresentativeList reps(wp, 2);
    auto const&        all = reps.materialize();
    REQUIRE(all.size() == 73);
    REQUIRE(all.front() == Word{});
    REQUIRE(all[1] == Word{1});
    REQUIRE(all[9] == Word{1, 1});
    REQUIRE(all.back() == Word{8, 8});
    REQUIRE(reps.get(73) == nullptr);
    for (std::size_t i = 1; i < all.size(); ++i) {
      REQUIRE(shortlex_less(all[i - 1], all[i]));
    }
    REQUIRE(representative_count(wp, 2) == 73.0L);
    // 8^0 + ... + 8^8 words, of which the 8 relation words form one class
    REQUIRE(representative_count(wp, 8) == 19173954.0L);
    REQUIRE(!representative_count(wp, 9).has_value());

    // lengths 0..8 at the first relation-word boundary
    RepresentativeList long_reps(wp, 8);
    REQUIRE(long_reps.get(1 + 8 + 64)->size() == 3);
  }

  TEST_CASE("SubsetSpecStream", "[quick][structure]") {
    auto const& wp     = wp8();
    auto        stream = enumerate_subset_specs(wp, 1, 2);
    std::size_t count  = 0;
    while (auto s = stream.next()) {
      REQUIRE(s->left().size() + s->right().size() > 2);
      REQUIRE(s->left().size() <= 2);
      REQUIRE(s->right().size() <= 2);
      REQUIRE(check_tup(*s, wp));
      ++count;
    }
    // 9 representatives, 45 subsets each side, minus the 81 singleton pairs
    REQUIRE(count == 45 * 45 - 81);
    REQUIRE(stream.yielded() == count);

    auto const sweep = tup_sweep(wp, 1, 2);
    REQUIRE(sweep.specs_checked == count);
    REQUIRE(sweep.passed());
  }

  TEST_CASE("in-memory and lazy sweeps agree", "[quick][structure]") {
    auto const& wp = wp8();
    SweepLimits lazy;
    lazy.in_memory = false;
    auto const a   = tup_sweep(wp, 2, 2);
    auto const b   = tup_sweep(wp, 2, 2, lazy);
    REQUIRE(a.passed());
    REQUIRE(b.passed());
    REQUIRE(a.specs_checked == 7'290'072);
    REQUIRE(a.specs_checked == b.specs_checked);
    REQUIRE(a.min_unique_count == b.min_unique_count);
    REQUIRE(a.min_unique_count == 2);
    REQUIRE(a.specs_total == 7'290'072.0L);
  }

  TEST_CASE("sweep limits", "[quick][structure]") {
    auto const& wp = wp8();
    SweepLimits limits;
    limits.max_specs = 1000;
    auto const s     = tup_sweep(wp, 9, 3, limits);
    REQUIRE(!s.complete);
    REQUIRE(!s.passed());
    REQUIRE(s.specs_checked == 1000);
    REQUIRE(s.min_unique_count >= 2);
    REQUIRE(!s.specs_total.has_value());
  }

  TEST_CASE("sweeps report the first failure", "[quick][structure][control]") {
    testing::CollapsingQuotient const q;
    for (bool in_memory : {true, false}) {
      SweepLimits limits;
      limits.in_memory = in_memory;
      auto const s     = tup_sweep_pools(q, {Word{}, Word{1}}, {Word{}, Word{2}}, 3, limits);
      REQUIRE(!s.passed());
      REQUIRE(s.failure.has_value());
      // C = {a}, D = {1, a}: both products are a
      REQUIRE(s.failure->grid_index == 5);
      REQUIRE(s.failure->left == std::vector<Word>{Word{1}});
      REQUIRE(s.failure->right == std::vector<Word>{Word{}, Word{1}});
      REQUIRE(s.failure->unique_count == 0);
    }
  }

  TEST_CASE("split relation pools", "[quick][structure]") {
    auto const& wp = wp8();
    for (Filler f : {Filler::constant, Filler::relation}) {
      auto const [left, right] = split_relation_pools(wp, f);
      REQUIRE(!left.empty());
      REQUIRE(left.size() <= 56);
      REQUIRE(right.size() <= 56);
      for (auto const& w : left) {
        REQUIRE(w.size() == 8);
        REQUIRE(wp.normal_form(w) == w);
      }
      for (auto const& w : right) {
        REQUIRE(w.size() == 8);
      }
      // some pair recombines into the relation class
      bool fires = false;
      for (auto const& c : left) {
        for (auto const& d : right) {
          fires |= !find_relation_factors(c + d, wp.group()).empty();
        }
      }
      REQUIRE(fires);
    }
  }

  TEST_CASE("split pool sweeps pass at size 2", "[quick][structure]") {
    auto const& wp = wp8();
    for (Filler f : {Filler::constant, Filler::relation}) {
      auto [left, right] = split_relation_pools(wp, f);
      auto const s       = tup_sweep_pools(wp, std::move(left), std::move(right), 2);
      REQUIRE(s.passed());
      REQUIRE(s.min_unique_count >= 2);
    }
  }

  TEST_CASE("cancellativity samples", "[quick][structure]") {
    WordProblem const wp(generate_group(QuaternionConfig(2)), RewriteConfig{1'000'000, 24});
    auto const        r = check_cancellative_samples(wp, 400, 12, 5);
    REQUIRE(r.passed);
    REQUIRE(r.trials == 400);
    REQUIRE(r.antecedent_hits == 800);
    REQUIRE(r.nontrivial_hits > 0);
    REQUIRE_THROWS_AS(check_cancellative_samples(wp, 1, 13, 5), InvalidArgument);
  }

  TEST_CASE("sampling does not depend on the thread count", "[quick][structure]") {
    auto const& wp = wp8();
    ::setenv("QSEMI_THREADS", "1", 1);
    auto const a = check_cancellative_samples(wp, 200, 10, 9);
    ::setenv("QSEMI_THREADS", "3", 1);
    auto const b = check_cancellative_samples(wp, 200, 10, 9);
    ::unsetenv("QSEMI_THREADS");
    REQUIRE(a.antecedent_hits == b.antecedent_hits);
    REQUIRE(a.nontrivial_hits == b.nontrivial_hits);
  }

  TEST_CASE("a non-cancellative table is caught", "[quick][structure][control]") {
    // (1,2,3,4)(5,...,8) == (1,2,4,3)(5,...,8) once u is replaced by (3 4)
    GroupTable const  g = generate_group(QuaternionConfig(2));
    WordProblem const wp(testing::with_transposition(g, *g.index_of({0, true}), 3, 4),
                         RewriteConfig{1'000'000, 24});
    auto const        r = check_cancellative_samples(wp, 2000, 12, 1);
    REQUIRE(!r.passed);
    REQUIRE(r.violation.has_value());
    auto const& v = *r.violation;
    REQUIRE(v.a.size() == v.b.size());
    REQUIRE(!wp.equal(v.a, v.b));
    bool const  hypothesis
        = v.right_side ? wp.equal(v.a + v.c, v.b + v.c) : wp.equal(v.c + v.a, v.c + v.b);
    REQUIRE(hypothesis);
  }

}  // namespace qsemi
