#include <set>  // for set

#include "catch_amalgamated.hpp"

#include "qsemi/errors.hpp"
#include "qsemi/quaternion.hpp"
#include "qsemi/rewrite.hpp"
#include "qsemi/sampling.hpp"
#include "qsemi/word.hpp"

namespace qsemi {

  namespace {
    Word iota(std::size_t n) {
      std::vector<letter_type> v;
      for (std::size_t i = 1; i <= n; ++i) {
        v.push_back(static_cast<letter_type>(i));
      }
      return Word(std::move(v));
    }

    Word relation_word(Permutation const& p) {
      return Word(p.images());
    }

    GroupTable const& q8() {
      static GroupTable const g = generate_group(QuaternionConfig(2));
      return g;
    }

    Permutation const& u8() {
      static Permutation const u = build_u(QuaternionConfig(2));
      return u;
    }
  }  // namespace

  TEST_CASE("Word serialisation", "[quick][word]") {
    REQUIRE(to_string(Word{1, 2, 3}) == "1,2,3");
    REQUIRE(to_string(Word{}) == "");
    REQUIRE(parse_word("1,2,3", 8) == Word{1, 2, 3});
    REQUIRE(parse_word(" 8 , 1 ", 8) == Word{8, 1});
    REQUIRE(parse_word("", 8) == Word{});
    REQUIRE_THROWS_AS(parse_word("0,1", 8), InvalidArgument);
    REQUIRE_THROWS_AS(parse_word("9", 8), InvalidArgument);
    REQUIRE_THROWS_AS(parse_word("1,,2", 8), InvalidArgument);
    REQUIRE_THROWS_AS(parse_word("1,x", 8), InvalidArgument);
    REQUIRE(mirror(Word{1, 2, 8}, 8) == Word{1, 7, 8});
    REQUIRE(shortlex_less(Word{8}, Word{1, 1}));
    REQUIRE(!shortlex_less(Word{1, 1}, Word{8}));
    REQUIRE(Word{1, 2} < Word{2, 1});
  }

  TEST_CASE("find_relation_factors", "[quick][rewrite]") {
    auto const& g = q8();
    auto const  f = find_relation_factors(iota(8), g);
    REQUIRE(f.size() == 1);
    REQUIRE(f[0].position == 1);
    REQUIRE(g[f[0].element].is_identity());

    REQUIRE(find_relation_factors(Word{1, 1, 2, 2}, g).empty());
    REQUIRE(find_relation_factors(Word{1, 2, 3}, g).empty());

    Word const w = Word{3} + relation_word(u8());
    auto const f2 = find_relation_factors(w, g);
    REQUIRE(f2.size() == 1);
    REQUIRE(f2[0].position == 2);
    REQUIRE(g[f2[0].element] == u8());

    // two relation words overlapping in one letter
    Word const o{1, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 2, 1, 4, 3};
    auto const f3 = find_relation_factors(o, g);
    REQUIRE(f3.size() == 2);
    REQUIRE(f3[0].position == 1);
    REQUIRE(f3[1].position == 8);
  }

  TEST_CASE("rewrite_step", "[quick][rewrite]") {
    auto const&       g  = q8();
    Permutation const id = Permutation::identity(8);
    REQUIRE(rewrite_step(iota(8), 1, id, u8(), g) == Word{5, 8, 7, 6, 3, 2, 1, 4});
    REQUIRE(rewrite_step(iota(8), 1, id, id, g) == iota(8));
    REQUIRE_THROWS_AS(rewrite_step(iota(8), 2, id, u8(), g), BadFactor);
    REQUIRE_THROWS_AS(rewrite_step(iota(8), 1, u8(), id, g), BadFactor);
    REQUIRE_THROWS_AS(
        rewrite_step(iota(8), 1, id, Permutation::from_cycles(8, {{1, 2}}), g), BadFactor);

    Word const o{1, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 2, 1, 4, 3};
    auto const sigma = g[find_relation_factors(o, g)[1].element];
    Word const r     = rewrite_step(o, 8, sigma, id, g);
    REQUIRE(r == Word{1, 2, 3, 4, 5, 6, 7, 1, 2, 3, 4, 5, 6, 7, 8});
  }

  // Values from tests/oracles/qsemi_oracle.py
  TEST_CASE("class sizes agree with the brute-force oracle", "[quick][rewrite]") {
    auto const&         g   = q8();
    RewriteConfig const cfg = RewriteConfig::defaults(8);

    Word const      o{1, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 2, 1, 4, 3};
    CongruenceClass c = class_of(o, g, cfg);
    REQUIRE(c.size() == 15);
    REQUIRE(c.representative() == Word{1, 2, 3, 4, 5, 6, 7, 1, 2, 3, 4, 5, 6, 7, 8});

    REQUIRE(class_of(iota(8), g, cfg).size() == 8);
    REQUIRE(class_of(iota(8) + iota(8), g, cfg).size() == 64);
    REQUIRE(class_of(iota(8) + iota(8) + iota(8), g, cfg).size() == 512);
  }

  TEST_CASE("canonical_form examples", "[quick][rewrite]") {
    auto const&         g   = q8();
    RewriteConfig const cfg = RewriteConfig::defaults(8);
    for (auto const& sigma : g.elements()) {
      REQUIRE(canonical_form(relation_word(sigma), g, cfg) == iota(8));
    }
    Word const w{3, 1, 2};
    REQUIRE(canonical_form(w, g, cfg) == w);
    REQUIRE(canonical_form(Word{}, g, cfg) == Word{});
    REQUIRE(words_equal(iota(8), relation_word(u8()), g, cfg));
    REQUIRE(!words_equal(iota(8), Word{2, 1, 3, 4, 5, 6, 7, 8}, g, cfg));
    REQUIRE(!words_equal(Word{1}, Word{1, 1}, g, cfg));
  }

  TEST_CASE("caps and argument checks", "[quick][rewrite]") {
    auto const& g = q8();
    REQUIRE_THROWS_AS(class_of(iota(8) + iota(8), g, RewriteConfig{10, 100}), ClassTooLarge);
    REQUIRE_THROWS_AS(class_of(iota(8), g, RewriteConfig{100, 7}), InvalidArgument);
    REQUIRE_THROWS_AS(class_of(Word{9}, g, RewriteConfig::defaults(8)), InvalidArgument);
    REQUIRE_THROWS_AS(RewriteConfig({0, 10}).validate(), InvalidArgument);
    REQUIRE(RewriteConfig::defaults(8).max_word_length == 24);
    REQUIRE(RewriteConfig::defaults(8).max_class_size == 1'000'000);
  }

  TEST_CASE("generators are pairwise distinct", "[quick][rewrite]") {
    for (std::size_t k = 2; k <= 5; ++k) {
      std::size_t const   n = 4 * k;
      GroupTable const    g = generate_group(QuaternionConfig(k));
      RewriteConfig const cfg = RewriteConfig::defaults(n);
      std::set<Word>      forms;
      for (std::size_t i = 1; i <= n; ++i) {
        forms.insert(canonical_form(Word{static_cast<letter_type>(i)}, g, cfg));
      }
      REQUIRE(forms.size() == n);
    }
  }

  TEST_CASE("overlap bound", "[quick][rewrite]") {
    for (std::size_t k = 2; k <= 8; ++k) {
      OverlapReport const r = relation_overlaps(generate_group(QuaternionConfig(k)));
      INFO("k = " << k);
      REQUIRE(r.max_overlap == 1);
      REQUIRE(r.full_overlap_is_trivial);
    }
  }

  TEST_CASE("class properties on random words", "[quick][rewrite][property]") {
    for (std::size_t k = 2; k <= 3; ++k) {
      std::size_t const   n = 4 * k;
      GroupTable const    g = generate_group(QuaternionConfig(k));
      RewriteConfig const cfg = RewriteConfig::defaults(n);
      WordGenerator       gen(&g, n, 0x5eed + k);
      for (std::size_t trial = 0; trial < 150; ++trial) {
        Word const            w = gen.biased(2 * n);
        CongruenceClass const c = class_of(w, g, cfg);
        INFO("w = " << to_string(w));
        REQUIRE(c.contains(w));
        // homogeneity
        for (auto const& m : c.members()) {
          REQUIRE(m.size() == w.size());
        }
        // every member generates the same class
        Word const& other = c.members()[gen.below(c.size())];
        REQUIRE(class_of(other, g, cfg) == c);
        // one-step rewrites stay inside
        for (auto const& f : find_relation_factors(w, g)) {
          for (auto const& tau : g.elements()) {
            REQUIRE(c.contains(rewrite_step(w, f.position, g[f.element], tau, g)));
          }
        }
        Word const cf = canonical_form(w, g, cfg);
        REQUIRE(cf == c.representative());
        REQUIRE(canonical_form(cf, g, cfg) == cf);
        REQUIRE(canonical_form(other, g, cfg) == cf);
      }
    }
  }

  TEST_CASE("concatenation respects the congruence", "[quick][rewrite][property]") {
    std::size_t const   n = 8;
    GroupTable const&   g = q8();
    RewriteConfig const cfg = RewriteConfig::defaults(n);
    WordGenerator       gen(&g, n, 77);
    for (std::size_t trial = 0; trial < 150; ++trial) {
      Word const      w1 = gen.biased(n + 4);
      Word const      w2 = gen.biased(n + 4);
      CongruenceClass c1 = class_of(w1, g, cfg);
      CongruenceClass c2 = class_of(w2, g, cfg);
      Word const&     v1 = c1.members()[gen.below(c1.size())];
      Word const&     v2 = c2.members()[gen.below(c2.size())];
      REQUIRE(words_equal(concat(w1, w2), concat(v1, v2), g, cfg));
    }
  }

  TEST_CASE("mirroring words mirrors classes", "[quick][rewrite][property]") {
    std::size_t const   n = 8;
    GroupTable const&   g = q8();
    GroupTable const    m = g.mirrored();
    RewriteConfig const cfg = RewriteConfig::defaults(n);
    WordGenerator       gen(&g, n, 99);
    for (std::size_t trial = 0; trial < 100; ++trial) {
      Word const      w = gen.biased(2 * n);
      CongruenceClass c = class_of(w, g, cfg);
      CongruenceClass d = class_of(mirror(w, n), m, cfg);
      REQUIRE(c.size() == d.size());
      for (auto const& x : c.members()) {
        REQUIRE(d.contains(mirror(x, n)));
      }
    }
  }

  TEST_CASE("WordProblem cache agrees with canonical_form", "[quick][rewrite]") {
    std::size_t const   n = 8;
    RewriteConfig const cfg = RewriteConfig::defaults(n);
    WordProblem const   wp(q8(), cfg);
    WordGenerator       gen(&q8(), n, 3);
    for (std::size_t trial = 0; trial < 200; ++trial) {
      Word const w = gen.biased(2 * n);
      REQUIRE(wp.normal_form(w) == canonical_form(w, q8(), cfg));
      REQUIRE(wp.normal_form(w) == wp.normal_form(w));
    }
    REQUIRE(wp.cache_size() > 0);
    REQUIRE(wp.equal(iota(8), relation_word(u8())));
  }

}  // namespace qsemi
