#include "knotclasp/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "knotclasp/errors.hpp"
#include "knotclasp/torus_signature.hpp"

namespace knotclasp {

namespace {

bool certified(const std::vector<bool>& member, long bound, long largest) {
  if (bound < largest) return false;
  for (long n = bound - largest; n < bound; ++n) {
    if (!member[static_cast<std::size_t>(n)]) return false;
  }
  return true;
}

std::vector<bool> tabulate(const std::vector<long>& generators, long bound) {
  std::vector<bool> member(static_cast<std::size_t>(bound), false);
  if (bound > 0) member[0] = true;
  for (long n = 1; n < bound; ++n) {
    for (long a : generators) {
      if (a <= n && member[static_cast<std::size_t>(n - a)]) {
        member[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return member;
}

// Re-tabulates s so that count_below(m) is available; every gap is below the
// current bound, so bound m + max(generators) certifies.
FormalSemigroup reaching(FormalSemigroup s, long m) {
  if (s.bound() >= m) return s;
  return semigroup_generate(s.generators(), m + s.generators().back());
}

std::vector<AffineFunction> upsilon_lines(const FormalSemigroup& s, long g) {
  if (genus_from_gaps(s) != g) {
    throw GenusMismatch("genus " + std::to_string(g) + " but the semigroup has " +
                        std::to_string(genus_from_gaps(s)) + " gaps");
  }
  if (s.bound() < 2 * g + 1) throw PreconditionError("semigroup table must reach 2g+1");
  std::vector<AffineFunction> lines;
  for (long m = 0; m <= 2 * g; ++m) lines.push_back({Rational(-2 * s.count_below(m)), Rational(m - g)});
  return lines;
}

}  // namespace

bool FormalSemigroup::contains(long n) const {
  if (n < 0) return false;
  if (n >= bound_) return true;
  return member_[static_cast<std::size_t>(n)];
}

std::vector<long> FormalSemigroup::gaps() const {
  std::vector<long> out;
  for (long n = 0; n < bound_; ++n) {
    if (!member_[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

long FormalSemigroup::count_below(long m) const {
  if (m < 0 || m > bound_) throw DomainError("count_below needs 0 <= m <= bound");
  return static_cast<long>(std::count(member_.begin(), member_.begin() + m, true));
}

FormalSemigroup semigroup_generate(std::vector<long> generators, std::optional<long> bound) {
  if (generators.empty()) throw PreconditionError("semigroup needs at least one generator");
  if (std::any_of(generators.begin(), generators.end(), [](long a) { return a <= 0; })) {
    throw PreconditionError("semigroup generators must be positive");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  long common = 0;
  for (long a : generators) common = std::gcd(common, a);
  if (common != 1) throw InfiniteGaps("generators share the factor " + std::to_string(common));

  const long largest = generators.back();
  FormalSemigroup s;
  s.generators_ = generators;
  if (bound) {
    if (*bound <= 0) throw BoundTooSmall("bound must be positive");
    auto member = tabulate(generators, *bound);
    if (!certified(member, *bound, largest)) {
      throw BoundTooSmall("gaps may exist at or above bound " + std::to_string(*bound));
    }
    s.bound_ = *bound;
    s.member_ = std::move(member);
    return s;
  }
  const long smallest_product = generators.size() > 1 ? generators[0] * generators[1] : generators[0];
  long b = std::max(2 * largest, smallest_product);
  for (;;) {
    auto member = tabulate(generators, b);
    if (certified(member, b, largest)) {
      s.bound_ = b;
      s.member_ = std::move(member);
      return s;
    }
    b *= 2;
  }
}

long genus_from_gaps(const FormalSemigroup& s) { return static_cast<long>(s.gaps().size()); }

FormalSemigroup cable_semigroup(const LSpaceCable& c) {
  const auto inner = TorusKnot::make(c.p, c.q);
  if (c.r < 2 || std::gcd(c.r, c.s) != 1) {
    throw ParameterError("cable needs r >= 2 and gcd(r,s) = 1");
  }
  if (c.s < c.r * (2 * inner.genus() - 1)) {
    throw NotLSpace("s=" + std::to_string(c.s) + " < r(2g-1)=" + std::to_string(c.r * (2 * inner.genus() - 1)));
  }
  FormalSemigroup s = semigroup_generate({c.p * c.r, c.q * c.r, c.s});
  const long g = genus_from_gaps(s);
  return reaching(std::move(s), 2 * g + 1);
}

PLFunction upsilon_from_semigroup(const FormalSemigroup& s, long g) {
  const auto lines = upsilon_lines(s, g);
  return upper_envelope(lines).function;
}

std::vector<long> upsilon_maximizers(const FormalSemigroup& s, long g) {
  const auto lines = upsilon_lines(s, g);
  const auto env = upper_envelope(lines);
  return {env.active.begin(), env.active.end()};
}

PLFunction torus_upsilon(long p, long q) {
  const auto knot = TorusKnot::make(p, q);
  const auto s = reaching(semigroup_generate({p, q}), 2 * knot.genus() + 1);
  return upsilon_from_semigroup(s, knot.genus());
}

PLFunction upsilon_Ki(long i) {
  if (i <= 1) throw ParameterError("K_i needs i > 1");
  const auto cable = cable_semigroup({2, 3, 2, 2 * i + 1});
  return upsilon_from_semigroup(cable, genus_from_gaps(cable)) - torus_upsilon(2, 2 * i + 3);
}

}  // namespace knotclasp
