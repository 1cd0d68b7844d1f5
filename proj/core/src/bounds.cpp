#include "knotclasp/bounds.hpp"

#include <algorithm>

#include "knotclasp/errors.hpp"
#include "knotclasp/semigroup.hpp"
#include "knotclasp/torus_signature.hpp"

namespace knotclasp {

namespace {

long ceil_nonnegative(const Rational& r) { return std::max(0L, to_long(r.ceil())); }

std::string describe(const Rational& t, const StepFunction::Interval& in) {
  return "t=" + t.str() + " in (" + in.lo.str() + "," + in.hi.str() + ")";
}

void finish(ClaspBoundReport& r) { r.c4_lower = r.c4plus_lower + r.c4minus_lower; }

}  // namespace

std::string to_string(Category c) {
  return c == Category::Topological ? "topological (hence smooth)" : "smooth only";
}

ClaspBoundReport merge(const ClaspBoundReport& a, const ClaspBoundReport& b) {
  ClaspBoundReport r = a;
  r.g4_lower = std::max(a.g4_lower, b.g4_lower);
  r.c4plus_lower = std::max(a.c4plus_lower, b.c4plus_lower);
  r.c4minus_lower = std::max(a.c4minus_lower, b.c4minus_lower);
  if (!r.g4_upper_asserted) r.g4_upper_asserted = b.g4_upper_asserted;
  if (!r.c4_upper_asserted) r.c4_upper_asserted = b.c4_upper_asserted;
  r.provenance.insert(r.provenance.end(), b.provenance.begin(), b.provenance.end());
  r.notes.insert(r.notes.end(), b.notes.begin(), b.notes.end());
  finish(r);
  return r;
}

ClaspBoundReport clasp_bounds_from_signature(const StepFunction& f) {
  const auto ext = extrema_over_regular(f);
  ClaspBoundReport r;
  r.c4plus_lower = ceil_nonnegative(Rational(-ext.min, 2));
  r.c4minus_lower = ceil_nonnegative(Rational(ext.max, 2));
  const bool min_dominates = -ext.min >= ext.max;
  r.g4_lower = ceil_nonnegative(Rational(std::max(std::abs(ext.max), std::abs(ext.min)), 2));
  finish(r);
  const auto cat = Category::Topological;
  r.provenance.push_back({"c4+", r.c4plus_lower, "-sigma/2", describe(ext.min_witness, ext.min_interval), cat});
  r.provenance.push_back({"c4-", r.c4minus_lower, "sigma/2", describe(ext.max_witness, ext.max_interval), cat});
  r.provenance.push_back({"g4", r.g4_lower, "|sigma|/2",
                          min_dominates ? describe(ext.min_witness, ext.min_interval)
                                        : describe(ext.max_witness, ext.max_interval),
                          cat});
  r.notes.push_back("signature bound: c4 >= max(sigma)/2 + max(-sigma)/2 over regular omega (nu = -sigma/2)");
  return r;
}

ClaspBoundReport clasp_bounds_from_upsilon(const PLFunction& u) {
  const auto plus = sup_ratio(-u);  // max of -Upsilon(t)/t
  const auto minus = sup_ratio(u);  // max of Upsilon(t)/t
  ClaspBoundReport r;
  r.c4plus_lower = ceil_nonnegative(plus.value);
  r.c4minus_lower = ceil_nonnegative(minus.value);
  const bool plus_dominates = plus.value >= minus.value;
  r.g4_lower = ceil_nonnegative(plus_dominates ? plus.value : minus.value);
  finish(r);
  const auto cat = Category::SmoothOnly;
  r.provenance.push_back({"c4+", r.c4plus_lower, "-Upsilon/t", "t=" + plus.witness.str(), cat});
  r.provenance.push_back({"c4-", r.c4minus_lower, "Upsilon/t", "t=" + minus.witness.str(), cat});
  r.provenance.push_back(
      {"g4", r.g4_lower, "|Upsilon/t|", "t=" + (plus_dominates ? plus.witness : minus.witness).str(), cat});
  return r;
}

bool check_immersed_surface_inequality(long sigma, long eta, const SurfaceData& sd) {
  return sigma + std::abs(eta - sd.b0 + 1) <= sd.b1 + 2 * sd.negative_points;
}

ClaspBoundReport generic_homomorphism_bounds(const std::vector<HomomorphismValue>& values, Category category) {
  ClaspBoundReport r;
  for (const auto& v : values) {
    const long plus = ceil_nonnegative(v.nu);
    const long minus = ceil_nonnegative(-v.nu);
    const long genus = ceil_nonnegative(abs(v.nu));
    if (plus > r.c4plus_lower) r.c4plus_lower = plus;
    if (minus > r.c4minus_lower) r.c4minus_lower = minus;
    if (genus > r.g4_lower) r.g4_lower = genus;
    r.provenance.push_back({v.nu.sign() >= 0 ? "c4+" : "c4-", std::max(plus, minus), v.label, "nu=" + v.nu.str(),
                            category});
  }
  finish(r);
  return r;
}

const std::vector<std::array<long, 4>>& family_III_pairs() {
  static const std::vector<std::array<long, 4>> pairs{
      {2, 11, 3, 7}, {2, 13, 3, 8}, {2, 7, 3, 4},  {2, 9, 3, 5},  {2, 11, 4, 5},
      {3, 7, 4, 5},  {3, 10, 4, 7}, {4, 9, 5, 7}, {3, 14, 5, 8},
  };
  return pairs;
}

std::array<long, 4> family_I_pair(long n) { return {3 * n + 1, 9 * n + 6, 3 * n + 2, 9 * n + 3}; }
std::array<long, 4> family_II_pair(long n) { return {2 * n + 1, 4 * n + 6, 2 * n + 3, 4 * n + 2}; }

std::optional<FamilyMember> classify_pair(long p, long q, long p2, long q2) {
  const std::array<long, 4> key{p, q, p2, q2};
  if (p >= 4 && (p - 1) % 3 == 0 && family_I_pair((p - 1) / 3) == key) return FamilyMember{TorusFamily::I, (p - 1) / 3};
  if (p >= 3 && p % 2 == 1 && family_II_pair((p - 1) / 2) == key) return FamilyMember{TorusFamily::II, (p - 1) / 2};
  const auto& iii = family_III_pairs();
  if (std::find(iii.begin(), iii.end(), key) != iii.end()) return FamilyMember{TorusFamily::III, 0};
  return std::nullopt;
}

ClaspBoundReport theorem11_report(long p, long q, long p2, long q2, long n) {
  if (n < 1) throw PreconditionError("self-sum count n must be >= 1");
  const auto member = classify_pair(p, q, p2, q2);
  if (!member) {
    throw UnknownPair("{T(" + std::to_string(p) + "," + std::to_string(q) + "), T(" + std::to_string(p2) + "," +
                      std::to_string(q2) + ")} is not in families (I), (II), (III)");
  }
  const auto f = (signature_step_function(p, q) - signature_step_function(p2, q2)).scaled(n);
  auto r = clasp_bounds_from_signature(f);
  const std::array<long, 4> key{p, q, p2, q2};
  static const std::vector<std::array<long, 4>> two_crossing_pairs{{2, 7, 3, 4}, {2, 9, 3, 5}, {3, 7, 4, 5}};
  if (key == std::array<long, 4>{3, 14, 5, 8}) {
    r.notes.push_back("g4(K) = 1 is not known for this pair; no upper bound asserted");
  } else {
    r.g4_upper_asserted = n;
    r.notes.push_back("g4 upper bound n asserted from the literature (g4(K) = 1), not computed");
  }
  if (std::find(two_crossing_pairs.begin(), two_crossing_pairs.end(), key) != two_crossing_pairs.end()) {
    r.c4_upper_asserted = 2 * n;
    r.notes.push_back("c4 upper bound 2n asserted: two crossing changes of opposite sign relate the torus knots");
  }
  const char* family = member->family == TorusFamily::I ? "I" : (member->family == TorusFamily::II ? "II" : "III");
  r.notes.push_back(std::string("family (") + family + ")" +
                    (member->index > 0 ? ", n=" + std::to_string(member->index) : std::string()));
  return r;
}

ClaspBoundReport theorem15_report(long i, long n) {
  if (n < 1) throw PreconditionError("self-sum count n must be >= 1");
  auto r = clasp_bounds_from_upsilon(upsilon_Ki(i).scaled(Rational(n)));
  r.g4_upper_asserted = n;
  r.notes.push_back("g4 upper bound n asserted from a Seifert-surface surgery (g4(K_i) <= 1), not computed");
  r.notes.push_back("K_i is topologically slice: signature bounds vanish, Upsilon bounds are smooth only");
  return r;
}

Json to_json(const ClaspBoundReport& r) {
  Json provenance = Json::array();
  for (const auto& p : r.provenance) {
    provenance.push_back({{"bound", p.bound},
                          {"value", p.value},
                          {"source", p.source},
                          {"witness", p.witness},
                          {"category", to_string(p.category)}});
  }
  Json asserted = Json::object();
  asserted["g4_upper"] = r.g4_upper_asserted ? Json(*r.g4_upper_asserted) : Json(nullptr);
  asserted["c4_upper"] = r.c4_upper_asserted ? Json(*r.c4_upper_asserted) : Json(nullptr);
  return Json{{"g4_lower", r.g4_lower},       {"c4plus_lower", r.c4plus_lower}, {"c4minus_lower", r.c4minus_lower},
              {"c4_lower", r.c4_lower},       {"asserted", std::move(asserted)}, {"provenance", std::move(provenance)},
              {"notes", r.notes}};
}

}  // namespace knotclasp
