#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "knotclasp/json_io.hpp"
#include "knotclasp/pl_function.hpp"
#include "knotclasp/rational.hpp"
#include "knotclasp/step_function.hpp"

namespace knotclasp {

/// Which notion of the invariant a bound certifies.
enum class Category {
  Topological,  // locally flat, hence also smooth
  SmoothOnly,
};

std::string to_string(Category c);

struct ProvenanceEntry {
  std::string bound;    // "g4", "c4+", "c4-"
  long value;
  std::string source;   // e.g. "-sigma/2", "-Upsilon/t"
  std::string witness;  // t or interval producing the bound
  Category category;
};

/// Lower bounds on the 4-ball genus and 4-dimensional clasp numbers, plus
/// upper bounds taken on trust from the literature (never computed).
struct ClaspBoundReport {
  long g4_lower = 0;
  long c4plus_lower = 0;
  long c4minus_lower = 0;
  long c4_lower = 0;  // always c4plus_lower + c4minus_lower
  std::optional<long> g4_upper_asserted;
  std::optional<long> c4_upper_asserted;
  std::vector<ProvenanceEntry> provenance;
  std::vector<std::string> notes;

  /// c4 >= c4+ + c4- holds by construction; this checks the stored fields.
  bool consistent() const { return c4_lower == c4plus_lower + c4minus_lower; }
};

/// Componentwise maximum of the lower bounds; provenance and notes are concatenated.
ClaspBoundReport merge(const ClaspBoundReport& a, const ClaspBoundReport& b);

/// Bounds from nu = -sigma_omega/2 over regular omega:
/// c4+ >= ceil(-min/2), c4- >= ceil(max/2), g4 >= ceil(max(|max|,|min|)/2).
ClaspBoundReport clasp_bounds_from_signature(const StepFunction& f);

/// Bounds from nu_t = -Upsilon(t)/t, t in (0,1]. Requires u(0) = 0.
ClaspBoundReport clasp_bounds_from_upsilon(const PLFunction& u);

struct SurfaceData {
  long b0 = 1;
  long b1 = 0;
  long positive_points = 0;
  long negative_points = 0;
};

/// sigma + |eta - b0 + 1| <= b1 + 2n for an immersed surface with n negative
/// double points.
bool check_immersed_surface_inequality(long sigma, long eta, const SurfaceData& sd);

struct HomomorphismValue {
  std::string label;
  Rational nu;
};

/// |nu| <= g4, nu <= c4+, -nu <= c4- for every listed homomorphism value;
/// several values combine by componentwise maxima.
ClaspBoundReport generic_homomorphism_bounds(const std::vector<HomomorphismValue>& values,
                                             Category category = Category::Topological);

enum class TorusFamily { I, II, III };

struct FamilyMember {
  TorusFamily family;
  long index;  // n for families (I) and (II), 0 for (III)
};

/// Identifies {T(p,q), T(p',q')} among families (I), (II), (III), in the
/// orientation K = T(p,q) # -T(p',q').
std::optional<FamilyMember> classify_pair(long p, long q, long p2, long q2);

/// The nine pairs of family (III), as (p, q, p', q').
const std::vector<std::array<long, 4>>& family_III_pairs();
std::array<long, 4> family_I_pair(long n);
std::array<long, 4> family_II_pair(long n);

/// Report for #^n (T(p,q) # -T(p',q')). Throws UnknownPair outside the families.
ClaspBoundReport theorem11_report(long p, long q, long p2, long q2, long n);

/// Report for #^n K_i, K_i = Cable(2,2i+1; D) # -T(2,2i+1) # -D.
ClaspBoundReport theorem15_report(long i, long n);

Json to_json(const ClaspBoundReport& r);

}  // namespace knotclasp
