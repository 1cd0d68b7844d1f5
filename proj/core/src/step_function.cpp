#include "knotclasp/step_function.hpp"

#include <algorithm>
#include <iterator>

#include "knotclasp/errors.hpp"

namespace knotclasp {

StepFunction::StepFunction() : values_{0} {}

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<long> values) {
  if (values.size() != breakpoints.size() + 1) {
    throw PreconditionError("step function needs exactly one value per interval");
  }
  const Rational zero(0), one(1);
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (breakpoints[i] <= zero || breakpoints[i] >= one) {
      throw DomainError("step function breakpoint " + breakpoints[i].str() + " outside (0,1)");
    }
    if (i > 0 && breakpoints[i] <= breakpoints[i - 1]) {
      throw PreconditionError("step function breakpoints must be strictly increasing");
    }
  }
  values_.push_back(values.front());
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (values[i + 1] == values_.back()) continue;
    breakpoints_.push_back(std::move(breakpoints[i]));
    values_.push_back(values[i + 1]);
  }
}

StepFunction StepFunction::constant(long value) { return StepFunction({}, {value}); }

std::vector<StepFunction::Interval> StepFunction::intervals() const {
  std::vector<Interval> out;
  out.reserve(values_.size());
  Rational lo(0);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    Rational hi = i < breakpoints_.size() ? breakpoints_[i] : Rational(1);
    out.push_back({lo, hi, values_[i]});
    lo = std::move(hi);
  }
  return out;
}

bool StepFunction::is_breakpoint(const Rational& t) const {
  return std::binary_search(breakpoints_.begin(), breakpoints_.end(), t);
}

std::size_t StepFunction::interval_index(const Rational& t) const {
  return static_cast<std::size_t>(
      std::distance(breakpoints_.begin(), std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t)));
}

long StepFunction::eval(const Rational& t) const {
  if (t <= Rational(0) || t >= Rational(1)) throw DomainError("t=" + t.str() + " outside (0,1)");
  if (is_breakpoint(t)) throw EvaluationAtBreakpoint("t=" + t.str() + " is a breakpoint");
  return values_[interval_index(t)];
}

std::optional<long> StepFunction::value_on(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi) || lo < Rational(0) || hi > Rational(1)) {
    throw DomainError("interval (" + lo.str() + "," + hi.str() + ") is not a subinterval of (0,1)");
  }
  const std::size_t first = interval_index(lo);
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), hi);
  const auto last = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it));
  if (first != last) return std::nullopt;
  return values_[first];
}

StepFunction::Extrema StepFunction::extrema_interior() const {
  const auto [mn, mx] = std::minmax_element(values_.begin(), values_.end());
  return {*mx, *mn};
}

StepFunction StepFunction::operator-() const {
  StepFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

StepFunction StepFunction::scaled(long factor) const {
  if (factor == 0) return StepFunction();
  StepFunction out = *this;
  for (auto& v : out.values_) v *= factor;
  return out;
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  std::vector<Rational> merged;
  merged.reserve(f.breakpoints_.size() + g.breakpoints_.size());
  std::set_union(f.breakpoints_.begin(), f.breakpoints_.end(), g.breakpoints_.begin(), g.breakpoints_.end(),
                 std::back_inserter(merged));
  std::vector<long> values;
  values.reserve(merged.size() + 1);
  std::size_t i = 0, j = 0;
  values.push_back(f.values_[0] + g.values_[0]);
  for (const auto& b : merged) {
    if (i < f.breakpoints_.size() && f.breakpoints_[i] == b) ++i;
    if (j < g.breakpoints_.size() && g.breakpoints_[j] == b) ++j;
    values.push_back(f.values_[i] + g.values_[j]);
  }
  return StepFunction(std::move(merged), std::move(values));
}

}  // namespace knotclasp
