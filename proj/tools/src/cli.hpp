#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "knotclasp/json_io.hpp"
#include "knotclasp/rational.hpp"

namespace knotclasp::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitError = 2;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Runs the tool on argv-style arguments (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ReproResult {
  std::string caseId;
  std::string claim;
  Json computed;
  Json expected;
  bool pass = false;
};

Json to_json(const ReproResult& r);

/// suite is one of I, II, III, fig1, upsilon, all. Results are sorted by caseId.
/// Throws PreconditionError for n_max < 1 and ParameterError for unknown suites.
std::vector<ReproResult> reproduce(const std::string& suite, long n_max, std::uint64_t seed);

/// Positive torus braid (s_1 ... s_{p-1})^q on p strands, as a word.
std::string torus_braid_word(long p, long q);

/// count distinct regular t = k/m in (0,1) (m a prime power <= 512), none of
/// which is a multiple of 1/avoid_denominator. Deterministic in seed.
std::vector<Rational> regular_samples(std::size_t count, std::uint64_t seed, long avoid_denominator);

}  // namespace knotclasp::cli
