#pragma once

// q-ary entropy and the classical bound curves in the (delta, R) plane.
//
// The asymptotic bound alpha_q itself is not computable here. A code point is
// placed relative to it only through its known envelope: a violated upper bound
// (Plotkin, Hamming, asymptotic Singleton) puts it above, a strict
// Gilbert-Varshamov inequality puts it below, and anything else is reported as
// indeterminate.

#include <cstdint>
#include <string>
#include <vector>

#include "paramcode/rational.hpp"

namespace paramcode {

/// q-ary Shannon entropy H_q(x) on [0, 1], with 0 log 0 = 0.
double entropy(double x, std::uint32_t q);

/// 1 - H_q(delta) for delta < (q-1)/q, and 0 from the Plotkin point on.
double gv_value(double delta, std::uint32_t q);
/// 1 - H_q(delta / 2), clamped at 0.
double hamming_value(double delta, std::uint32_t q);
/// 1 - delta, clamped at 0.
double singleton_value(double delta);
/// delta >= (q-1)/q, evaluated exactly.
bool plotkin_exceeded(const Rational& delta, std::uint32_t q);
bool plotkin_exceeded(double delta, std::uint32_t q);

struct CodePoint {
  Rational delta;
  double rate = 0.0;
  std::uint32_t q = 2;
};

enum class Verdict { AboveAsymptotic, BelowGV, Indeterminate };

std::string_view to_string(Verdict v) noexcept;

struct Certificate {
  std::string bound;       // "plotkin", "hamming", "singleton", "gilbert_varshamov"
  std::string inequality;  // the inequality that was evaluated, with numbers
  double margin = 0.0;     // positive when the certificate fires
  bool fires = false;      // upper bound violated, or GV strictly satisfied
};

struct RegionClassification {
  Verdict verdict = Verdict::Indeterminate;
  std::vector<Certificate> certificates;  // always all four, fixed order
  std::vector<std::string> notes;

  const Certificate& certificate(std::string_view bound) const;
};

struct ClassifyOptions {
  /// Finite-length allowance on R + delta <= 1. Use 1/n when n is known.
  double singleton_slack = 0.0;
  double tolerance = 1e-9;
};

/// Requires R > 0 and both coordinates in [0, 1] (DomainError otherwise).
RegionClassification classify(const CodePoint& point, const ClassifyOptions& options = {});

struct BoundSample {
  Rational delta;
  double gv = 0.0;
  double hamming = 0.0;
  double singleton = 0.0;
  bool plotkin = false;
};

struct BoundCurves {
  std::uint32_t q = 2;
  std::vector<BoundSample> samples;
};

/// Evenly spaced delta grid on [0, 1] with `count` points (count >= 2).
BoundCurves emit_bound_curves(std::uint32_t q, std::size_t count);

/// Columns: delta,gv,hamming,singleton,plotkin.
std::string to_csv(const BoundCurves& curves);

}  // namespace paramcode
