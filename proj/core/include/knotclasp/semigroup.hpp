#pragma once

#include <optional>
#include <vector>

#include "knotclasp/pl_function.hpp"

namespace knotclasp {

/// Numerical semigroup <a_1, ..., a_l> tabulated on [0, bound).
///
/// Certified means every gap lies below bound: the top max(generators)
/// integers below bound are members, hence so is every larger integer.
class FormalSemigroup {
 public:
  const std::vector<long>& generators() const { return generators_; }
  long bound() const { return bound_; }

  bool contains(long n) const;
  std::vector<long> gaps() const;
  /// #(S cap [0, m)); requires 0 <= m <= bound (DomainError).
  long count_below(long m) const;

  friend bool operator==(const FormalSemigroup&, const FormalSemigroup&) = default;

 private:
  friend FormalSemigroup semigroup_generate(std::vector<long> generators, std::optional<long> bound);

  std::vector<long> generators_;
  long bound_ = 0;
  std::vector<bool> member_;
};

/// Builds the membership table. With no bound a default is chosen and doubled
/// until certification passes. Throws InfiniteGaps when the generators share
/// a factor and BoundTooSmall when an explicit bound cannot be certified.
FormalSemigroup semigroup_generate(std::vector<long> generators, std::optional<long> bound = std::nullopt);

inline long count_below(const FormalSemigroup& s, long m) { return s.count_below(m); }

/// Number of gaps; equals the genus of the corresponding L-space knot.
long genus_from_gaps(const FormalSemigroup& s);

/// Cable (T(p,q))_{r,s}; r is the longitudinal winding.
struct LSpaceCable {
  long p;
  long q;
  long r;
  long s;
};

/// <pr, qr, s>. Throws ParameterError for invalid parameters and NotLSpace
/// unless s >= r(2g(T(p,q)) - 1).
FormalSemigroup cable_semigroup(const LSpaceCable& cable);

/// Upsilon of an L-space knot of genus g with semigroup S:
/// t -> max over m in {0..2g} of -2 #(S cap [0,m)) + (m - g) t, on [0,2].
/// Throws GenusMismatch when g differs from the gap count.
PLFunction upsilon_from_semigroup(const FormalSemigroup& s, long g);

/// The values m whose affine pieces realize the maximum, left to right on [0,2].
std::vector<long> upsilon_maximizers(const FormalSemigroup& s, long g);

PLFunction torus_upsilon(long p, long q);

/// Upsilon of (T(2,3))_{2,2i+1} # -T(2,2i+3); requires i > 1.
PLFunction upsilon_Ki(long i);

}  // namespace knotclasp
