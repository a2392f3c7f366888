// Calibrates the acceptance band for the SRCE minimum-distance check.
//
// Draws many n=128, m=256, q=2 trials, splits them into disjoint batches of 50
// (the acceptance batch size) and prints the spread of the per-batch median of
// delta / delta_GV, where delta_GV solves 1 - H_2(delta) = R.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "paramcode/bounds.hpp"
#include "paramcode/ensemble.hpp"

using namespace paramcode;

namespace {

double gv_delta(double rate) {
  double lo = 0.0, hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    (gv_value(mid, 2) > rate ? lo : hi) = mid;
  }
  return lo;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20240601;
  const std::size_t batch = 50;

  const auto samples = sample_srce({128, 256, 2, trials, seed});
  const double target = gv_delta(samples.front().params.rate);

  std::vector<double> ratios;
  for (const auto& t : samples) ratios.push_back(t.params.delta.to_double() / target);

  std::vector<double> medians;
  for (std::size_t b = 0; b + batch <= ratios.size(); b += batch)
    medians.push_back(median({ratios.begin() + static_cast<long>(b),
                              ratios.begin() + static_cast<long>(b + batch)}));
  std::sort(ratios.begin(), ratios.end());
  std::sort(medians.begin(), medians.end());

  std::printf("R=%.6f delta_GV=%.6f trials=%zu seed=%llu\n", samples.front().params.rate, target,
              trials, static_cast<unsigned long long>(seed));
  std::printf("per-trial ratio: min=%.4f median=%.4f max=%.4f\n", ratios.front(), median(ratios),
              ratios.back());
  std::printf("batch-of-%zu medians (%zu batches): min=%.4f max=%.4f\n", batch, medians.size(),
              medians.front(), medians.back());
  return 0;
}
