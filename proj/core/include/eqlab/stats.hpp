#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "eqlab/errors.hpp"

namespace eqlab {

/// Compensated (Kahan) accumulator for long reductions.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0, c_ = 0.0;
};

/// One-sample Kolmogorov-Smirnov distance sup_x |F_emp(x) - F(x)|.
/// Sorts a copy of the samples.
inline double ks_distance(std::span<const double> samples,
                          const std::function<double(double)>& cdf) {
  if (samples.empty()) throw config_error("ks_distance: empty sample set");
  std::vector<double> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double F = cdf(s[i]);
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - F);
    d = std::max(d, F - static_cast<double>(i) / n);
  }
  return d;
}

struct Histogram {
  std::vector<double> edges;    // size bins+1
  std::vector<double> density;  // normalized so sum(density * width) = 1
  std::vector<std::size_t> counts;
  std::size_t total = 0;

  double center(std::size_t b) const { return 0.5 * (edges[b] + edges[b + 1]); }
  double width(std::size_t b) const { return edges[b + 1] - edges[b]; }
};

inline Histogram make_histogram(std::span<const double> samples, double lo,
                                double hi, std::size_t bins) {
  if (bins == 0 || !(hi > lo)) throw config_error("make_histogram: bad range");
  Histogram h;
  h.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b)
    h.edges[b] = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins);
  h.counts.assign(bins, 0);
  for (double x : samples) {
    if (x < lo || x >= hi) continue;
    auto b = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
    if (b >= bins) b = bins - 1;
    ++h.counts[b];
    ++h.total;
  }
  h.density.resize(bins);
  for (std::size_t b = 0; b < bins; ++b)
    h.density[b] = h.total == 0 ? 0.0
                                : static_cast<double>(h.counts[b]) /
                                      (static_cast<double>(h.total) * h.width(b));
  return h;
}

inline double mean(std::span<const double> v) {
  KahanSum s;
  for (double x : v) s.add(x);
  return s.value() / static_cast<double>(v.size());
}

inline double variance(std::span<const double> v) {
  const double m = mean(v);
  KahanSum s;
  for (double x : v) s.add((x - m) * (x - m));
  return s.value() / static_cast<double>(v.size());
}

}  // namespace eqlab
