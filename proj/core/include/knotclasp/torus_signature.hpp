#pragma once

#include <string>
#include <vector>

#include "knotclasp/rational.hpp"
#include "knotclasp/step_function.hpp"

namespace knotclasp {

/// Torus knot T(p,q) with coprime 2 <= p < q.
struct TorusKnot {
  long p;
  long q;

  /// Throws ParameterError unless 2 <= p < q and gcd(p,q) = 1.
  static TorusKnot make(long p, long q);

  long genus() const { return (p - 1) * (q - 1) / 2; }
  long product() const { return p * q; }
  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

/// The set {k/p + j/q : 0<k<p, 0<j<q}, sorted (with multiplicity; the
/// elements are in fact distinct for coprime p, q).
struct HBSet {
  TorusKnot knot;
  std::vector<Rational> elements;
};

HBSet hb_set(long p, long q);

/// Signature at t in [0,1] by direct enumeration of the Hirzebruch-Brieskorn
/// set S: sigma_t = -(#(S cap [t,1+t]) - #(S minus (t,1+t))).
long hb_signature_at(long p, long q, const Rational& t);

/// t -> sigma_t(T(p,q)) on (0,1). All jumps sit at multiples of 1/pq, so the
/// counting formula is evaluated once per interval (l/pq, (l+1)/pq).
StepFunction signature_step_function(long p, long q);

struct Jump {
  Rational point;
  long jump;
  friend bool operator==(const Jump&, const Jump&) = default;
};

/// Jumps on [0,(p+q)/pq]: -2 at each l/pq with l < p+q, p !| l, q !| l, then +2
/// at (p+q)/pq.
std::vector<Jump> jump_description(long p, long q);

/// Closed-form value of sigma_t(T(p,q)) on (l/pq, (l+1)/pq) for 0 <= l <= p+q:
/// -2(l - floor(l/q) - floor(l/p)) for l < p+q and -2(p+q-4-floor(q/p)) for
/// l = p+q. Throws DomainError for other l.
long signature_closed_form(long p, long q, long l);

struct LabelledInterval {
  std::string label;
  Rational lo;
  Rational hi;
  long value;
};

/// sigma_t(T(p,q) # -T(p',q')) on three intervals, valid when pq = p'q' and
/// p < p': 0 on [0,1/q), 2 on (1/q,1/q+1/pq) and a floor expression on
/// ((p'+q')/pq, (p'+q'+1)/pq). Throws PreconditionError otherwise.
std::vector<LabelledInterval> sum_signature_closed_form(long p, long q, long p2, long q2);

/// omega = exp(2 pi i t) is regular iff the reduced denominator of t is a
/// prime power. Requires 0 < t < 1 (DomainError).
bool is_regular(const Rational& t);

/// The dyadic rational with the smallest denominator inside (lo, hi);
/// dyadic points are regular.
Rational regular_point_in(const Rational& lo, const Rational& hi);

struct RegularExtrema {
  long max;
  long min;
  Rational max_witness;  // regular t realizing max
  Rational min_witness;
  StepFunction::Interval max_interval;
  StepFunction::Interval min_interval;
};

/// Max and min of f over regular t. Every open interval contains dyadic
/// rationals, so these are the interval extrema; witnesses are regular points.
RegularExtrema extrema_over_regular(const StepFunction& f);

}  // namespace knotclasp
