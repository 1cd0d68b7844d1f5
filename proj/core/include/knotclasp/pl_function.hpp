#pragma once

#include <span>
#include <vector>

#include "knotclasp/rational.hpp"

namespace knotclasp {

/// Continuous piecewise-linear function on [0,2], stored as a polyline.
///
/// Breakpoints start at 0, end at 2 and strictly increase; values are the
/// function values at the breakpoints. Interior breakpoints where the slope
/// does not change are dropped on construction, so equal functions have
/// equal representations.
class PLFunction {
 public:
  /// The zero polyline.
  PLFunction();
  PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static Rational domain_end() { return Rational(2); }

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }

  /// Exact linear interpolation. Throws DomainError outside [0,2].
  Rational eval(const Rational& t) const;

  /// Slope of the piece to the right of t (0 <= t < 2).
  Rational slope_after(const Rational& t) const;

  PLFunction operator-() const;
  PLFunction scaled(const Rational& factor) const;

  friend PLFunction operator+(const PLFunction& u, const PLFunction& v);
  friend PLFunction operator-(const PLFunction& u, const PLFunction& v) { return u + (-v); }
  friend bool operator==(const PLFunction& u, const PLFunction& v) = default;

  /// True when u and v agree on [lo, hi].
  bool equal_on(const PLFunction& other, const Rational& lo, const Rational& hi) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

struct SupRatio {
  Rational value;
  Rational witness;  // a t in (0,1] attaining the maximum
};

/// Exact maximum of u(t)/t over t in (0,1]. Requires u(0) = 0
/// (PreconditionError otherwise).
SupRatio sup_ratio(const PLFunction& u);

/// Affine function intercept + slope * t.
struct AffineFunction {
  Rational intercept;
  Rational slope;

  Rational operator()(const Rational& t) const { return intercept + slope * t; }
};

struct Envelope {
  PLFunction function;
  /// Index into the input of the line that is maximal on each piece, in order.
  std::vector<std::size_t> active;
  /// Points in (0,2) where the maximal line changes.
  std::vector<Rational> switches;
};

/// Upper envelope of finitely many affine functions over [0,2]. Where several
/// lines tie, the one with the larger slope is taken to the right.
Envelope upper_envelope(std::span<const AffineFunction> lines);

inline Rational pl_eval(const PLFunction& u, const Rational& t) { return u.eval(t); }
inline PLFunction pl_add(const PLFunction& u, const PLFunction& v) { return u + v; }
inline PLFunction pl_neg(const PLFunction& u) { return -u; }
inline PLFunction pl_scale(const PLFunction& u, long k) { return u.scaled(Rational(k)); }
inline Rational pl_sup_ratio(const PLFunction& u) { return sup_ratio(u).value; }

}  // namespace knotclasp
