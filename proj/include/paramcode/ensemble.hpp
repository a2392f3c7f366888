#pragma once

// Random and exhaustive code families: samples from the Shannon random code
// ensemble, exhaustive enumeration of small codes, and an independent
// brute-force computation of code parameters used as a test oracle.
//
// Seed-to-output mapping (frozen; fixtures depend on it):
//   trial t of a run with seed s uses std::mt19937_64 seeded with
//   splitmix64(s + t); each letter is the next engine output reduced mod q,
//   rejecting outputs >= 2^64 - (2^64 mod q). Words are drawn letter by letter
//   in position order; a word equal to an earlier word of the same trial is
//   discarded and redrawn.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "paramcode/core.hpp"

namespace paramcode {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// q^n, saturating at UINT64_MAX.
std::uint64_t ambient_size(std::uint32_t q, std::size_t n) noexcept;

struct EnsembleConfig {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t q = 2;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
};

struct SrceTrial {
  Code code;
  CodeParameters params;  // rate base q
  std::size_t redraws = 0;
};

/// Throws InfeasibleConfig when m > q^n, m < 2, n < 1 or trials < 1.
std::vector<SrceTrial> sample_srce(const EnsembleConfig& config);

struct CloudPoint {
  Rational delta;
  double rate = 0.0;
  std::size_t multiplicity = 0;
  std::string provenance;
};

/// Points sorted by (delta, R); each (delta, R) appears once.
struct PointCloud {
  std::uint32_t q = 2;
  std::vector<CloudPoint> points;

  std::size_t total() const noexcept;
};

/// Multiset union of the trials' (delta, R) points.
PointCloud to_point_cloud(const std::vector<SrceTrial>& trials, std::uint32_t q,
                          const std::string& provenance);

/// Number of m-subsets of F_q^n, saturating at UINT64_MAX.
std::uint64_t code_count(std::size_t n, std::size_t m, std::uint32_t q) noexcept;

/// Every code of exactly m distinct words in F_q^n, once each.
/// Requires n <= 6 and q <= 3; throws CapExceeded when more than `cap` codes exist.
PointCloud enumerate_codes(std::size_t n, std::size_t m, std::uint32_t q, std::uint64_t cap);

/// Visitor form of the enumeration, for callers that need the codes themselves.
void for_each_code(std::size_t n, std::size_t m, std::uint32_t q, std::uint64_t cap,
                   const std::function<void(const Code&)>& visit);

/// `count` codes drawn uniformly among the m-subsets of F_q^n.
std::vector<Code> sample_uniform_codes(std::size_t n, std::size_t m, std::uint32_t q,
                                       std::size_t count, std::uint64_t seed);

/// Brute-force reimplementation of code_parameters (same contract), kept
/// separate from the metrics module for cross-checking.
CodeParameters oracle_code_parameters(const Code& code, RateBase base = RateBase::Q);

/// Columns: delta,R,multiplicity,provenance.
std::string to_csv(const PointCloud& cloud);

}  // namespace paramcode
