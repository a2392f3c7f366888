#include "paramcode/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "paramcode/error.hpp"

namespace paramcode {

namespace {

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0))
    throw Error(ErrorKind::DomainError, fmt::format("{} = {} outside [0, 1]", what, x));
}

void require_q(std::uint32_t q) {
  if (q < 2) throw Error(ErrorKind::DomainError, "alphabet size must be at least 2");
}

double xlogx(double x, double log_q) { return x == 0.0 ? 0.0 : x * std::log(x) / log_q; }

}  // namespace

double entropy(double x, std::uint32_t q) {
  require_unit(x, "entropy argument");
  require_q(q);
  const double log_q = std::log(static_cast<double>(q));
  const double spread = x * std::log(static_cast<double>(q - 1)) / log_q;
  return spread - xlogx(x, log_q) - xlogx(1.0 - x, log_q);
}

bool plotkin_exceeded(const Rational& delta, std::uint32_t q) {
  require_q(q);
  return delta >= Rational(q - 1, q);
}

bool plotkin_exceeded(double delta, std::uint32_t q) {
  require_unit(delta, "delta");
  require_q(q);
  return delta * q >= static_cast<double>(q - 1);
}

double gv_value(double delta, std::uint32_t q) {
  if (plotkin_exceeded(delta, q)) return 0.0;
  return std::max(0.0, 1.0 - entropy(delta, q));
}

double hamming_value(double delta, std::uint32_t q) {
  require_unit(delta, "delta");
  return std::max(0.0, 1.0 - entropy(delta / 2.0, q));
}

double singleton_value(double delta) {
  require_unit(delta, "delta");
  return std::max(0.0, 1.0 - delta);
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::AboveAsymptotic: return "AboveAsymptotic";
    case Verdict::BelowGV: return "BelowGV";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

const Certificate& RegionClassification::certificate(std::string_view bound) const {
  for (const auto& c : certificates)
    if (c.bound == bound) return c;
  throw Error(ErrorKind::DomainError, "no certificate named '" + std::string(bound) + "'");
}

RegionClassification classify(const CodePoint& point, const ClassifyOptions& options) {
  const double delta = point.delta.to_double();
  require_unit(delta, "delta");
  require_unit(point.rate, "R");
  require_q(point.q);
  if (!(point.rate > 0.0)) throw Error(ErrorKind::DomainError, "classification needs R > 0");

  const double R = point.rate;
  const double tol = options.tolerance;
  const std::uint32_t q = point.q;
  RegionClassification out;

  {
    const Rational threshold(q - 1, q);
    Certificate c{"plotkin",
                  fmt::format("delta = {} >= (q-1)/q = {} with R > 0", point.delta.to_string(),
                              threshold.to_string()),
                  delta - threshold.to_double(), plotkin_exceeded(point.delta, q)};
    out.certificates.push_back(std::move(c));
  }
  {
    const double bound = hamming_value(delta, q);
    out.certificates.push_back({"hamming",
                                fmt::format("R = {:.6f} > 1 - H_{}(delta/2) = {:.6f}", R, q, bound),
                                R - bound, R > bound + tol});
  }
  {
    const double lhs = R + delta;
    const double rhs = 1.0 + options.singleton_slack;
    out.certificates.push_back(
        {"singleton", fmt::format("R + delta = {:.6f} > 1 + slack = {:.6f}", lhs, rhs), lhs - rhs,
         lhs > rhs + tol});
  }
  const double gv = gv_value(delta, q);
  out.certificates.push_back({"gilbert_varshamov",
                              fmt::format("R = {:.6f} < 1 - H_{}(delta) = {:.6f}", R, q, gv),
                              gv - R, R < gv - tol});

  const bool above = std::any_of(out.certificates.begin(), out.certificates.end() - 1,
                                 [](const Certificate& c) { return c.fires; });
  if (above) {
    out.verdict = Verdict::AboveAsymptotic;
  } else if (out.certificates.back().fires) {
    out.verdict = Verdict::BelowGV;
  } else {
    out.verdict = Verdict::Indeterminate;
    if (std::abs(gv - R) <= tol) out.notes.emplace_back("on-GV: R equals 1 - H_q(delta)");
    out.notes.emplace_back(
        fmt::format("between the GV curve and the upper envelope: gv margin {:.6g}, "
                    "hamming margin {:.6g}",
                    gv - R, hamming_value(delta, q) - R));
  }
  return out;
}

BoundCurves emit_bound_curves(std::uint32_t q, std::size_t count) {
  require_q(q);
  if (count < 2) throw Error(ErrorKind::DomainError, "need at least 2 samples");
  BoundCurves curves;
  curves.q = q;
  curves.samples.reserve(count);
  const auto last = static_cast<std::int64_t>(count - 1);
  for (std::int64_t i = 0; i <= last; ++i) {
    const Rational delta(i, last);
    const double x = delta.to_double();
    curves.samples.push_back(
        {delta, gv_value(x, q), hamming_value(x, q), singleton_value(x), plotkin_exceeded(delta, q)});
  }
  return curves;
}

std::string to_csv(const BoundCurves& curves) {
  std::string out = "delta,gv,hamming,singleton,plotkin\n";
  for (const auto& s : curves.samples)
    out += fmt::format("{},{},{},{},{}\n", s.delta.to_double(), s.gv, s.hamming, s.singleton,
                       s.plotkin ? 1 : 0);
  return out;
}

}  // namespace paramcode
