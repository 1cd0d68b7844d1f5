#include <doctest.h>

#include <numeric>
#include <random>

#include "knotclasp/braid.hpp"
#include "knotclasp/errors.hpp"
#include "oracles.hpp"

using namespace knotclasp;

TEST_CASE("parse_braid and render_braid") {
  const auto w = parse_braid("abcabcabcabcabc", 4);
  CHECK(w.letters.size() == 15);
  CHECK(exponent_sum(w) == 15);
  CHECK(parse_braid("aA", 2).letters == std::vector<int>{1, -1});
  CHECK_THROWS_AS(parse_braid("d", 4), RangeError);
  CHECK_THROWS_AS(parse_braid("a1", 3), SyntaxError);
  CHECK(render_braid(parse_braid("abCBa", 4)) == "abCBa");
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(parse_braid("aA", 2)).letters.empty());
  CHECK(free_reduce(parse_braid("abBA", 3)).letters.empty());
  CHECK(render_braid(free_reduce(parse_braid("abcabcCbabcbcbc", 4))) == "abcabbabcbcbc");
}

TEST_CASE("braids_equal examples") {
  CHECK(braids_equal(parse_braid("aba", 3), parse_braid("bab", 3)));
  CHECK(braids_equal(parse_braid("abcabcabcabcabc", 4), parse_braid("abcabccabcabcbc", 4)));
  CHECK_FALSE(braids_equal(parse_braid("ab", 3), parse_braid("ba", 3)));
  CHECK(braids_equal(parse_braid("ac", 4), parse_braid("ca", 4)));
  CHECK(braids_equal(parse_braid("aAbB", 3), parse_braid("", 3)));
  CHECK_THROWS_AS(braids_equal(parse_braid("a", 2), parse_braid("a", 3)), StrandMismatch);
}

TEST_CASE("crossing_change") {
  CHECK(render_braid(crossing_change(parse_braid("abcabccbabcbcbc", 4), 7)) == "abcabbabcbcbc");
  CHECK(render_braid(crossing_change(parse_braid("abaabaabababab", 3), 4)) == "abbaabababab");
  const auto once = crossing_change(parse_braid("a", 2), 1);
  CHECK(render_braid(once) == "A");
  CHECK(render_braid(crossing_change(once, 1)) == "a");
  CHECK_THROWS_AS(crossing_change(parse_braid("ab", 3), 3), IndexError);
  CHECK_THROWS_AS(crossing_change(parse_braid("ab", 3), 0), IndexError);
}

TEST_CASE("closure permutation, components, exponent sum") {
  const auto w45 = parse_braid("abcabcabcabcabc", 4);
  CHECK(is_knot_closure(w45));
  CHECK(exponent_sum(w45) == 15);
  const auto w37 = parse_braid("ababababababab", 3);
  CHECK(is_knot_closure(w37));
  CHECK(exponent_sum(w37) == 14);
  const auto empty = parse_braid("", 2);
  CHECK(closure_permutation(empty) == Permutation{0, 1});
  CHECK_FALSE(is_knot_closure(empty));
  CHECK(closure_components(empty) == 2);
  CHECK(closure_components(parse_braid("aa", 2)) == 2);
}

TEST_CASE("normal form is canonical and idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto b = oracle::random_braid(rng, n, rng() % 14);
    const BraidWord w{n, b.letters};
    const auto nf = normal_form(w);
    CHECK(normal_form(to_word(nf)) == nf);
    CHECK(braids_equal(w, to_word(nf)));
    for (const auto& f : nf.factors) {
      Permutation id(static_cast<std::size_t>(n));
      std::iota(id.begin(), id.end(), 0);
      Permutation delta(id.rbegin(), id.rend());
      CHECK(f != id);
      CHECK(f != delta);
    }
  }
}

TEST_CASE("braids_equal agrees with the Artin action on the free group") {
  std::mt19937_64 rng(11);
  int equal_pairs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto a = oracle::random_braid(rng, n, rng() % 9);
    // Half of the time compare against a rewritten copy: insert a cancelling pair and a commutation or braid relation.
    auto b = oracle::random_braid(rng, n, rng() % 9);
    if (trial % 2 == 0) {
      b = a;
      const int g = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      const auto pos = b.letters.begin() + static_cast<long>(rng() % (b.letters.size() + 1));
      b.letters.insert(pos, {g, -g});
    }
    const BraidWord wa{n, a.letters}, wb{n, b.letters};
    const bool artin = oracle::artin_action(n, a.letters) == oracle::artin_action(n, b.letters);
    CHECK(braids_equal(wa, wb) == artin);
    equal_pairs += artin;
  }
  CHECK(equal_pairs >= 150);
}

TEST_CASE("braids_equal is an equivalence relation") {
  std::mt19937_64 rng(3);
  std::vector<BraidWord> corpus;
  for (int k = 0; k < 60; ++k) {
    // Short words in B3 so that many coincide.
    corpus.push_back({3, oracle::random_braid(rng, 3, rng() % 5).letters});
  }
  for (const auto& a : corpus) CHECK(braids_equal(a, a));
  for (const auto& a : corpus)
    for (const auto& b : corpus) CHECK(braids_equal(a, b) == braids_equal(b, a));
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (!braids_equal(a, b)) continue;
      for (const auto& c : corpus)
        if (braids_equal(b, c)) CHECK(braids_equal(a, c));
    }
}

TEST_CASE("braid equalities along the chain from T(4,5) to T(3,7)") {
  const char* w[] = {"abcabcabcabcabc", "abcabccabcabcbc", "abcabccbabcbcbc"};
  CHECK(braids_equal(parse_braid(w[0], 4), parse_braid(w[1], 4)));
  CHECK(braids_equal(parse_braid(w[1], 4), parse_braid(w[2], 4)));
  CHECK(braids_equal(parse_braid("abaabaabababab", 3), parse_braid("ababababababab", 3)));
  CHECK(oracle::artin_action(4, parse_braid(w[0], 4).letters) == oracle::artin_action(4, parse_braid(w[2], 4).letters));
}

TEST_CASE("inverse and concat") {
  const auto w = parse_braid("abCa", 4);
  CHECK(free_reduce(concat(w, inverse(w))).letters.empty());
  CHECK_THROWS_AS(concat(w, parse_braid("a", 3)), StrandMismatch);
}
