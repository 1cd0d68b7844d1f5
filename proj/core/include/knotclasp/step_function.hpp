#pragma once

#include <optional>
#include <vector>

#include "knotclasp/rational.hpp"

namespace knotclasp {

/// Integer-valued piecewise-constant function on (0,1).
///
/// Breakpoints are strictly increasing rationals in the open interval (0,1);
/// there is one value per open interval between consecutive breakpoints,
/// including (0, first) and (last, 1). Values at breakpoints are not part of
/// the representation. Equal adjacent values are merged on construction, so
/// two functions are equal exactly when their representations are.
class StepFunction {
 public:
  struct Interval {
    Rational lo;
    Rational hi;
    long value;
  };

  struct Extrema {
    long max;
    long min;
  };

  /// The zero function.
  StepFunction();
  StepFunction(std::vector<Rational> breakpoints, std::vector<long> values);

  static StepFunction constant(long value);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<long>& values() const { return values_; }
  std::vector<Interval> intervals() const;

  bool is_breakpoint(const Rational& t) const;

  /// Value on the open interval containing t. Throws DomainError unless
  /// 0 < t < 1 and EvaluationAtBreakpoint when t is a breakpoint.
  long eval(const Rational& t) const;

  /// The value when the function is constant on the whole open interval
  /// (lo, hi), nullopt when a breakpoint lies strictly inside it.
  std::optional<long> value_on(const Rational& lo, const Rational& hi) const;

  /// Max and min over the interval values.
  Extrema extrema_interior() const;

  StepFunction operator-() const;
  StepFunction scaled(long factor) const;

  friend StepFunction operator+(const StepFunction& f, const StepFunction& g);
  friend StepFunction operator-(const StepFunction& f, const StepFunction& g) { return f + (-g); }
  friend bool operator==(const StepFunction& f, const StepFunction& g) = default;

 private:
  std::size_t interval_index(const Rational& t) const;

  std::vector<Rational> breakpoints_;
  std::vector<long> values_;
};

inline long sf_eval(const StepFunction& f, const Rational& t) { return f.eval(t); }
inline StepFunction sf_add(const StepFunction& f, const StepFunction& g) { return f + g; }
inline StepFunction sf_neg(const StepFunction& f) { return -f; }
inline StepFunction sf_scale(const StepFunction& f, long k) { return f.scaled(k); }
inline StepFunction::Extrema sf_extrema_interior(const StepFunction& f) { return f.extrema_interior(); }

}  // namespace knotclasp
