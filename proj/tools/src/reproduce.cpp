#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cli.hpp"
#include "knotclasp/bounds.hpp"
#include "knotclasp/braid.hpp"
#include "knotclasp/errors.hpp"
#include "knotclasp/knot_expr.hpp"
#include "knotclasp/semigroup.hpp"
#include "knotclasp/seifert.hpp"
#include "knotclasp/torus_signature.hpp"

namespace knotclasp::cli {

namespace {

std::string padded(long n) {
  std::string s = std::to_string(n);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

std::string pair_label(long p, long q, long p2, long q2) {
  return "T(" + std::to_string(p) + "," + std::to_string(q) + ")#-T(" + std::to_string(p2) + "," +
         std::to_string(q2) + ")";
}

Json interval_json(const Rational& lo, const Rational& hi) { return Json::array({lo.str(), hi.str()}); }

ReproResult make(std::string id, std::string claim, Json computed, Json expected) {
  const bool pass = computed == expected;
  return {std::move(id), std::move(claim), std::move(computed), std::move(expected), pass};
}

StepFunction pair_signature(long p, long q, long p2, long q2) {
  return signature_step_function(p, q) - signature_step_function(p2, q2);
}

// Value of f on (lo, hi), or null if f is not constant there.
Json value_on(const StepFunction& f, const Rational& lo, const Rational& hi) {
  const auto v = f.value_on(lo, hi);
  return v ? Json(*v) : Json(nullptr);
}

// Checks sigma = +2 and sigma = -2 on the two intervals attached to a pair.
void interval_checks(std::vector<ReproResult>& out, const std::string& prefix, const std::string& claim,
                     const StepFunction& f, const Rational& plo, const Rational& phi, const Rational& mlo,
                     const Rational& mhi) {
  out.push_back(make(prefix + "/sigma=+2", claim + ": sigma = 2 on " + interval_json(plo, phi).dump(),
                     value_on(f, plo, phi), 2));
  out.push_back(make(prefix + "/sigma=-2", claim + ": sigma = -2 on " + interval_json(mlo, mhi).dump(),
                     value_on(f, mlo, mhi), -2));
}

void suite_I(std::vector<ReproResult>& out, long n_max) {
  for (long n = 1; n <= n_max; ++n) {
    const auto [p, q, p2, q2] = family_I_pair(n);
    const Rational d(3 * p * p2);
    const Rational a(1, q);
    interval_checks(out, "I/n=" + padded(n), "family I, " + pair_label(p, q, p2, q2), pair_signature(p, q, p2, q2), a,
                    a + Rational(1) / d, Rational(12 * n + 5) / d, Rational(12 * n + 6) / d);
  }
}

void suite_II(std::vector<ReproResult>& out, long n_max) {
  for (long n = 1; n <= n_max; ++n) {
    const auto [p, q, p2, q2] = family_II_pair(n);
    const Rational d(2 * p * p2);
    const Rational a(1, q);
    interval_checks(out, "II/n=" + padded(n), "family II, " + pair_label(p, q, p2, q2), pair_signature(p, q, p2, q2),
                    a, a + Rational(1) / d, Rational(6 * n + 5) / d, Rational(6 * n + 6) / d);
  }
}

struct TableRow {
  std::array<long, 4> pair;
  Rational plus_lo, plus_hi, minus_lo, minus_hi;
};

// Intervals as printed for the nine sporadic pairs.
const std::vector<TableRow>& family_III_table() {
  static const std::vector<TableRow> rows{
      {{2, 11, 3, 7}, {2, 21}, {3, 22}, {1, 22}, {1, 21}},
      {{2, 13, 3, 8}, {2, 26}, {3, 24}, {1, 26}, {1, 24}},
      {{2, 7, 3, 4}, {2, 12}, {3, 14}, {1, 14}, {1, 12}},
      {{2, 9, 3, 5}, {2, 15}, {3, 18}, {1, 18}, {1, 15}},
      {{2, 11, 4, 5}, {2, 20}, {3, 22}, {1, 22}, {1, 20}},
      {{3, 7, 4, 5}, {3, 20}, {4, 21}, {1, 21}, {1, 20}},
      {{3, 10, 4, 7}, {3, 28}, {4, 30}, {1, 30}, {1, 28}},
      {{4, 9, 5, 7}, {4, 35}, {5, 36}, {1, 36}, {1, 35}},
      {{3, 14, 5, 8}, {3, 40}, {4, 42}, {1, 42}, {1, 40}},
  };
  return rows;
}

void suite_III(std::vector<ReproResult>& out) {
  for (const auto& row : family_III_table()) {
    const auto [p, q, p2, q2] = row.pair;
    interval_checks(out, "III/" + pair_label(p, q, p2, q2), "family III, " + pair_label(p, q, p2, q2),
                    pair_signature(p, q, p2, q2), row.plus_lo, row.plus_hi, row.minus_lo, row.minus_hi);
  }
}

// Alexander polynomial and signatures at the given points of a braid closure.
Json closure_invariants(const std::string& word, int strands, const std::vector<Rational>& ts) {
  const auto m = seifert_matrix_from_braid(parse_braid(word, strands));
  Json sigs = Json::array();
  for (const auto& t : ts) sigs.push_back(tl_signature_nullity(m, t).sigma);
  return {{"alexander", alexander_polynomial(m).str()}, {"signatures", sigs}};
}

Json torus_invariants(long p, long q, const std::vector<Rational>& ts) {
  const auto f = signature_step_function(p, q);
  Json sigs = Json::array();
  for (const auto& t : ts) sigs.push_back(f.eval(t));
  return {{"alexander", torus_alexander(p, q).str()}, {"signatures", sigs}};
}

void suite_fig1(std::vector<ReproResult>& out, std::uint64_t seed) {
  const std::string w1 = "abcabcabcabcabc", w2 = "abcabccabcabcbc", w3 = "abcabccbabcbcbc";
  const std::string w4 = "abcabbabcbcbc", w5 = "abbaabababab", w6 = "abaabaabababab", w7 = "ababababababab";
  const std::string claim = "crossing-change sequence from T(4,5) to T(3,7)";
  out.push_back(make("fig1/a1", claim + ": words 1 and 2 equal in B4",
                     braids_equal(parse_braid(w1, 4), parse_braid(w2, 4)), true));
  out.push_back(make("fig1/a2", claim + ": words 2 and 3 equal in B4",
                     braids_equal(parse_braid(w2, 4), parse_braid(w3, 4)), true));
  out.push_back(make("fig1/b", claim + ": crossing change at index 7 of word 3",
                     render_braid(crossing_change(parse_braid(w3, 4), 7)), w4));
  // Regular points avoid every root of an Alexander polynomial, so these closures have zero nullity there.
  const auto ts = regular_samples(10, seed, 1);
  out.push_back(make("fig1/c", claim + ": closures of " + w4 + " (B4) and " + w5 + " (B3) agree",
                     closure_invariants(w4, 4, ts), closure_invariants(w5, 3, ts)));
  out.push_back(make("fig1/d", claim + ": crossing change at index 4 of " + w6,
                     render_braid(crossing_change(parse_braid(w6, 3), 4)), w5));
  out.push_back(make("fig1/e", claim + ": words 6 and 7 equal in B3",
                     braids_equal(parse_braid(w6, 3), parse_braid(w7, 3)), true));
  const auto ts_torus = regular_samples(10, seed, 420);
  out.push_back(make("fig1/f", claim + ": word 1 closes to T(4,5), word 7 to T(3,7)",
                     {{"word1", closure_invariants(w1, 4, ts_torus)}, {"word7", closure_invariants(w7, 3, ts_torus)}},
                     {{"word1", torus_invariants(4, 5, ts_torus)}, {"word7", torus_invariants(3, 7, ts_torus)}}));
}

// u restricted to [0,1] as {"breakpoints", "values"} including t = 1.
Json restrict_unit(const PLFunction& u) {
  Json bps = Json::array(), vals = Json::array();
  for (std::size_t k = 0; k < u.breakpoints().size() && u.breakpoints()[k] < Rational(1); ++k) {
    bps.push_back(u.breakpoints()[k].str());
    vals.push_back(u.values()[k].str());
  }
  bps.push_back("1");
  vals.push_back(u.eval(Rational(1)).str());
  return {{"breakpoints", bps}, {"values", vals}};
}

// Two affine pieces a1 t on [0,1/2] and b0 + b1 t on [1/2,1].
Json two_piece(const Rational& a1, const Rational& b0, const Rational& b1) {
  const Rational half(1, 2);
  PLFunction u({Rational(0), half, Rational(1), Rational(2)},
               {Rational(0), a1 * half, b0 + b1, b0 + b1 * 2});
  return restrict_unit(u);
}

void suite_upsilon(std::vector<ReproResult>& out) {
  for (long i = 2; i <= 20; ++i) {
    const std::string id = "upsilon/i=" + padded(i);
    const auto s = cable_semigroup({2, 3, 2, 2 * i + 1});
    out.push_back(make(id + "/gaps", "semigroup <4,6," + std::to_string(2 * i + 1) + "> has i+2 gaps",
                       genus_from_gaps(s), i + 2));
    out.push_back(make(id + "/cable", "Upsilon of (T(2,3))_{2," + std::to_string(2 * i + 1) + "} on [0,1]",
                       restrict_unit(upsilon_from_semigroup(s, genus_from_gaps(s))),
                       two_piece(Rational(-(i + 2)), Rational(-2), Rational(2 - i))));
    const std::string ki = "Cable(2," + std::to_string(2 * i + 1) + ";D) # -T(2," + std::to_string(2 * i + 1) + ") # -D";
    const auto u = upsilon(parse(ki));
    out.push_back(make(id + "/Ki", "Upsilon of " + ki + " on [0,1]", restrict_unit(u),
                       two_piece(Rational(-1), Rational(-2), Rational(3))));
    Json computed = Json::array(), expected = Json::array();
    for (long n = 1; n <= 10; ++n) {
      const auto r = clasp_bounds_from_upsilon(u.scaled(Rational(n)));
      computed.push_back({{"c4_lower", r.c4_lower}, {"g4_lower", r.g4_lower}});
      expected.push_back({{"c4_lower", 2 * n}, {"g4_lower", n}});
    }
    out.push_back(make(id + "/bounds", "Upsilon bounds for n copies of K_i, n=1..10", computed, expected));
  }
  for (long i = 1; i <= 10; ++i) {
    const auto u = torus_upsilon(2, 2 * i + 1);
    out.push_back(make("upsilon/torus/T(2," + padded(2 * i + 1) + ")",
                       "Upsilon of T(2," + std::to_string(2 * i + 1) + ") is -" + std::to_string(i) + "t on [0,1]",
                       restrict_unit(u), two_piece(Rational(-i), Rational(0), Rational(-i))));
  }
}

void bounds_checks(std::vector<ReproResult>& out, const std::string& id, long p, long q, long p2, long q2) {
  const auto f = pair_signature(p, q, p2, q2);
  const auto ext = extrema_over_regular(f);
  out.push_back(make(id + "/extrema", "regular extrema of the signature of " + pair_label(p, q, p2, q2),
                     Json::array({ext.max, ext.min}), Json::array({2, -2})));
  Json computed = Json::array(), expected = Json::array();
  for (long n = 1; n <= 10; ++n) {
    const auto r = clasp_bounds_from_signature(f.scaled(n));
    computed.push_back({{"c4_lower", r.c4_lower}, {"g4_lower", r.g4_lower}, {"consistent", r.consistent()}});
    expected.push_back({{"c4_lower", 2 * n}, {"g4_lower", n}, {"consistent", true}});
  }
  out.push_back(make(id + "/scaling", "signature bounds for n copies, n=1..10", computed, expected));
}

void suite_bounds(std::vector<ReproResult>& out, long n_max) {
  for (long n = 1; n <= n_max; ++n) {
    const auto [p, q, p2, q2] = family_I_pair(n);
    bounds_checks(out, "bounds/I/n=" + padded(n), p, q, p2, q2);
    const auto [a, b, a2, b2] = family_II_pair(n);
    bounds_checks(out, "bounds/II/n=" + padded(n), a, b, a2, b2);
  }
  for (const auto& [p, q, p2, q2] : family_III_pairs()) {
    bounds_checks(out, "bounds/III/" + pair_label(p, q, p2, q2), p, q, p2, q2);
  }
  for (const auto& [p, q, p2, q2] : std::vector<std::array<long, 4>>{{2, 7, 3, 4}, {2, 9, 3, 5}, {3, 7, 4, 5}}) {
    Json computed = Json::array(), expected = Json::array();
    for (long n = 1; n <= 10; ++n) {
      const auto r = theorem11_report(p, q, p2, q2, n);
      computed.push_back({{"c4_lower", r.c4_lower},
                          {"c4_upper_asserted", r.c4_upper_asserted ? Json(*r.c4_upper_asserted) : Json(nullptr)}});
      expected.push_back({{"c4_lower", 2 * n}, {"c4_upper_asserted", 2 * n}});
    }
    out.push_back(make("bounds/sharp/" + pair_label(p, q, p2, q2),
                       "lower bound meets the asserted upper bound 2n, n=1..10", computed, expected));
  }
}

}  // namespace

std::string torus_braid_word(long p, long q) {
  std::string cycle;
  for (long g = 0; g + 1 < p; ++g) cycle += static_cast<char>('a' + g);
  std::string word;
  for (long k = 0; k < q; ++k) word += cycle;
  return word;
}

std::vector<Rational> regular_samples(std::size_t count, std::uint64_t seed, long avoid_denominator) {
  static const std::vector<long> denominators = [] {
    std::vector<long> d;
    for (long p = 2; p <= 512; ++p) {
      bool prime = true;
      for (long k = 2; k * k <= p; ++k) prime = prime && p % k != 0;
      if (!prime) continue;
      for (long m = p; m <= 512; m *= p) d.push_back(m);
    }
    return d;
  }();
  std::mt19937_64 rng(seed);
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < count) {
    const long m = denominators[rng() % denominators.size()];
    const long k = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(m - 1));
    const Rational t(k, m);
    // t is a multiple of 1/avoid exactly when its reduced denominator divides avoid.
    if (avoid_denominator % to_long(t.denominator()) == 0) continue;
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

Json to_json(const ReproResult& r) {
  return {{"caseId", r.caseId}, {"claim", r.claim}, {"computed", r.computed}, {"expected", r.expected},
          {"pass", r.pass}};
}

std::vector<ReproResult> reproduce(const std::string& suite, long n_max, std::uint64_t seed) {
  if (n_max < 1) throw PreconditionError("--n-max must be >= 1");
  static const std::set<std::string> known{"I", "II", "III", "fig1", "upsilon", "all"};
  if (!known.contains(suite)) throw ParameterError("unknown suite '" + suite + "'");
  const bool all = suite == "all";
  std::vector<ReproResult> out;
  if (all || suite == "I") suite_I(out, n_max);
  if (all || suite == "II") suite_II(out, n_max);
  if (all || suite == "III") suite_III(out);
  if (all || suite == "fig1") suite_fig1(out, seed);
  if (all || suite == "upsilon") suite_upsilon(out);
  if (all) suite_bounds(out, n_max);
  std::sort(out.begin(), out.end(), [](const ReproResult& a, const ReproResult& b) { return a.caseId < b.caseId; });
  return out;
}

}  // namespace knotclasp::cli
