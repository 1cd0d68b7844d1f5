#include "knotclasp/pl_function.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

#include "knotclasp/errors.hpp"

namespace knotclasp {

namespace {

bool collinear(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1,
               const Rational& x2, const Rational& y2) {
  return (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0);
}

}  // namespace

PLFunction::PLFunction() : breakpoints_{Rational(0), Rational(2)}, values_{Rational(0), Rational(0)} {}

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values) {
  if (breakpoints.size() != values.size() || breakpoints.size() < 2) {
    throw PreconditionError("polyline needs at least two points and one value per breakpoint");
  }
  if (breakpoints.front() != Rational(0) || breakpoints.back() != domain_end()) {
    throw DomainError("polyline must start at 0 and end at 2");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i] <= breakpoints[i - 1]) {
      throw PreconditionError("polyline breakpoints must be strictly increasing");
    }
  }
  breakpoints_.push_back(breakpoints.front());
  values_.push_back(values.front());
  for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i) {
    if (collinear(breakpoints_.back(), values_.back(), breakpoints[i], values[i], breakpoints[i + 1],
                  values[i + 1])) {
      continue;
    }
    breakpoints_.push_back(breakpoints[i]);
    values_.push_back(values[i]);
  }
  breakpoints_.push_back(breakpoints.back());
  values_.push_back(values.back());
}

Rational PLFunction::eval(const Rational& t) const {
  if (t < Rational(0) || t > domain_end()) throw DomainError("t=" + t.str() + " outside [0,2]");
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto i = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it));
  if (*it == t) return values_[i];
  const Rational& x0 = breakpoints_[i - 1];
  const Rational& x1 = breakpoints_[i];
  return values_[i - 1] + (values_[i] - values_[i - 1]) * (t - x0) / (x1 - x0);
}

Rational PLFunction::slope_after(const Rational& t) const {
  if (t < Rational(0) || t >= domain_end()) throw DomainError("no piece to the right of t=" + t.str());
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto i = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it));
  return (values_[i] - values_[i - 1]) / (breakpoints_[i] - breakpoints_[i - 1]);
}

PLFunction PLFunction::operator-() const {
  PLFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

PLFunction PLFunction::scaled(const Rational& factor) const {
  if (factor == Rational(0)) return PLFunction();
  PLFunction out = *this;
  for (auto& v : out.values_) v *= factor;
  return out;
}

PLFunction operator+(const PLFunction& u, const PLFunction& v) {
  std::vector<Rational> merged;
  std::set_union(u.breakpoints_.begin(), u.breakpoints_.end(), v.breakpoints_.begin(), v.breakpoints_.end(),
                 std::back_inserter(merged));
  std::vector<Rational> values;
  values.reserve(merged.size());
  for (const auto& t : merged) values.push_back(u.eval(t) + v.eval(t));
  return PLFunction(std::move(merged), std::move(values));
}

bool PLFunction::equal_on(const PLFunction& other, const Rational& lo, const Rational& hi) const {
  std::vector<Rational> points{lo, hi};
  for (const auto* f : {this, &other}) {
    for (const auto& b : f->breakpoints_) {
      if (lo < b && b < hi) points.push_back(b);
    }
  }
  return std::all_of(points.begin(), points.end(), [&](const Rational& t) { return eval(t) == other.eval(t); });
}

SupRatio sup_ratio(const PLFunction& u) {
  if (u.eval(Rational(0)) != Rational(0)) throw PreconditionError("sup ratio requires u(0) = 0");
  // On each linear piece u(t)/t = a/t + b is monotone, so the maximum over
  // (0,1] sits at a breakpoint in (0,1] or at t = 1.
  std::optional<SupRatio> best;
  auto consider = [&](const Rational& t) {
    Rational r = u.eval(t) / t;
    if (!best || r > best->value) best = SupRatio{std::move(r), t};
  };
  for (const auto& b : u.breakpoints()) {
    if (b > Rational(0) && b < Rational(1)) consider(b);
  }
  consider(Rational(1));
  return *best;
}

Envelope upper_envelope(std::span<const AffineFunction> lines) {
  if (lines.empty()) throw PreconditionError("upper envelope of no lines");
  const Rational lo(0), hi = PLFunction::domain_end();

  // Line that is maximal at x, ties resolved towards the larger slope.
  auto best_at = [&](const Rational& x) {
    std::size_t best = 0;
    Rational best_value = lines[0](x);
    for (std::size_t k = 1; k < lines.size(); ++k) {
      Rational value = lines[k](x);
      if (value > best_value || (value == best_value && lines[k].slope > lines[best].slope)) {
        best = k;
        best_value = std::move(value);
      }
    }
    return best;
  };

  Envelope env;
  std::size_t current = best_at(lo);
  env.active.push_back(current);
  std::vector<Rational> xs{lo};
  Rational x = lo;
  for (;;) {
    // Earliest point right of x where a steeper line overtakes the current one.
    std::optional<Rational> next_x;
    std::size_t next = current;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (lines[k].slope <= lines[current].slope) continue;
      Rational cross = (lines[current].intercept - lines[k].intercept) / (lines[k].slope - lines[current].slope);
      if (cross <= x) continue;
      if (!next_x || cross < *next_x || (cross == *next_x && lines[k].slope > lines[next].slope)) {
        next_x = cross;
        next = k;
      }
    }
    if (!next_x || *next_x >= hi) break;
    x = *next_x;
    xs.push_back(x);
    env.switches.push_back(x);
    current = next;
    env.active.push_back(current);
  }
  xs.push_back(hi);

  std::vector<Rational> values;
  values.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::size_t line = env.active[std::min(i, env.active.size() - 1)];
    values.push_back(lines[line](xs[i]));
  }
  env.function = PLFunction(std::move(xs), std::move(values));
  return env;
}

}  // namespace knotclasp
