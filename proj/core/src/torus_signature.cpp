#include "knotclasp/torus_signature.hpp"

#include <algorithm>
#include <numeric>

#include "knotclasp/errors.hpp"

namespace knotclasp {

TorusKnot TorusKnot::make(long p, long q) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) {
    throw ParameterError("T(" + std::to_string(p) + "," + std::to_string(q) +
                         ") needs coprime 2 <= p < q");
  }
  return {p, q};
}

HBSet hb_set(long p, long q) {
  const auto knot = TorusKnot::make(p, q);
  HBSet set{knot, {}};
  set.elements.reserve(static_cast<std::size_t>((p - 1) * (q - 1)));
  for (long k = 1; k < p; ++k) {
    for (long j = 1; j < q; ++j) set.elements.emplace_back(k * q + j * p, p * q);
  }
  std::sort(set.elements.begin(), set.elements.end());
  return set;
}

long hb_signature_at(long p, long q, const Rational& t) {
  if (t < Rational(0) || t > Rational(1)) throw DomainError("t=" + t.str() + " outside [0,1]");
  const auto set = hb_set(p, q);
  const Rational upper = t + Rational(1);
  long closed_in = 0;    // # S cap [t, 1+t]
  long open_out = 0;     // # S minus (t, 1+t)
  for (const auto& s : set.elements) {
    if (s >= t && s <= upper) ++closed_in;
    if (s <= t || s >= upper) ++open_out;
  }
  return -(closed_in - open_out);
}

StepFunction signature_step_function(long p, long q) {
  const auto knot = TorusKnot::make(p, q);
  const long n = knot.product();
  // Elements of S as numerators over pq; they lie in (0, 2n).
  std::vector<int> hits(static_cast<std::size_t>(2 * n + 1), 0);
  for (long k = 1; k < p; ++k) {
    for (long j = 1; j < q; ++j) ++hits[static_cast<std::size_t>(k * q + j * p)];
  }
  const long total = (p - 1) * (q - 1);
  // At t = (l + 1/2)/n no element sits on the boundary, so
  // #(S cap [t,1+t]) counts numerators in [l+1, n+l] and the complement is total - that.
  long inside = 0;
  for (long m = 1; m <= n; ++m) inside += hits[static_cast<std::size_t>(m)];
  std::vector<Rational> breakpoints;
  std::vector<long> values;
  values.reserve(static_cast<std::size_t>(n));
  for (long l = 0; l < n; ++l) {
    if (l > 0) {
      inside += hits[static_cast<std::size_t>(n + l)] - hits[static_cast<std::size_t>(l)];
      breakpoints.emplace_back(l, n);
    }
    values.push_back(-(inside - (total - inside)));
  }
  return StepFunction(std::move(breakpoints), std::move(values));
}

std::vector<Jump> jump_description(long p, long q) {
  const auto knot = TorusKnot::make(p, q);
  std::vector<Jump> jumps;
  for (long l = 1; l < p + q; ++l) {
    if (l % p != 0 && l % q != 0) jumps.push_back({Rational(l, knot.product()), -2});
  }
  jumps.push_back({Rational(p + q, knot.product()), 2});
  return jumps;
}

long signature_closed_form(long p, long q, long l) {
  TorusKnot::make(p, q);
  if (l < 0 || l > p + q) throw DomainError("closed form holds only for 0 <= l <= p+q");
  if (l < p + q) return -2 * (l - l / q - l / p);
  return -2 * (p + q - 4 - q / p);
}

std::vector<LabelledInterval> sum_signature_closed_form(long p, long q, long p2, long q2) {
  TorusKnot::make(p, q);
  TorusKnot::make(p2, q2);
  if (p * q != p2 * q2) throw PreconditionError("closed form needs pq = p'q'");
  if (p >= p2) throw PreconditionError("closed form needs p < p'");
  const long n = p * q;
  const long s = p2 + q2;
  return {
      {"initial", Rational(0), Rational(1, q), 0},
      {"first rise", Rational(1, q), Rational(1, q) + Rational(1, n), 2},
      {"after (p'+q')/pq", Rational(s, n), Rational(s + 1, n), 2 * (s / q + s / p - 4 - q2 / p2)},
  };
}

bool is_regular(const Rational& t) {
  if (t <= Rational(0) || t >= Rational(1)) throw DomainError("t=" + t.str() + " outside (0,1)");
  mpz_class n = t.denominator();
  // n > 1 here; strip the smallest prime factor and check nothing else remains.
  mpz_class prime = 2;
  while (prime * prime <= n && n % prime != 0) ++prime;
  if (n % prime != 0) return true;  // n itself is prime
  while (n % prime == 0) n /= prime;
  return n == 1;
}

Rational regular_point_in(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("empty interval (" + lo.str() + "," + hi.str() + ")");
  mpz_class den = 1;
  for (;;) {
    // Smallest k with k/den > lo.
    Rational scaled = lo * Rational(den, mpz_class(1));
    mpz_class k = scaled.floor() + 1;
    Rational candidate(k, den);
    if (candidate < hi) return candidate;
    den *= 2;
  }
}

RegularExtrema extrema_over_regular(const StepFunction& f) {
  const auto intervals = f.intervals();
  const auto cmp = [](const StepFunction::Interval& a, const StepFunction::Interval& b) { return a.value < b.value; };
  const auto& mx = *std::max_element(intervals.begin(), intervals.end(), cmp);
  const auto& mn = *std::min_element(intervals.begin(), intervals.end(), cmp);
  return {mx.value, mn.value, regular_point_in(mx.lo, mx.hi), regular_point_in(mn.lo, mn.hi), mx, mn};
}

}  // namespace knotclasp
