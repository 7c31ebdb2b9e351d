#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "slogan/error.hpp"
#include "slogan/metrics.hpp"

namespace slogan::metrics {

namespace {

std::vector<double> differences(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValidationError("paired test: length mismatch");
  if (a.size() < 2) throw ValidationError("paired test: need at least two pairs");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
  return d;
}

}  // namespace

std::string_view to_string(SignificanceTest test) {
  return test == SignificanceTest::t_test ? "t_test" : "wilcoxon";
}

double paired_t_test(std::span<const double> a, std::span<const double> b) {
  const std::vector<double> d = differences(a, b);
  const auto n = static_cast<double>(d.size());
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : d) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  if (sd == 0.0) return mean == 0.0 ? 1.0 : 0.0;
  const double t = mean / (sd / std::sqrt(n));
  const boost::math::students_t dist(n - 1.0);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t))));
}

double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
  std::vector<double> d = differences(a, b);
  std::erase(d, 0.0);
  const std::size_t n = d.size();
  if (n == 0) return 1.0;

  // Mid-ranks of |d|, kept doubled so they stay integral.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return std::fabs(d[x]) < std::fabs(d[y]); });
  std::vector<std::size_t> rank2(n);
  double tie_term = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && std::fabs(d[order[j + 1]]) == std::fabs(d[order[i]])) ++j;
    const std::size_t doubled = (i + 1) + (j + 1);  // 2 * mean of ranks i+1..j+1
    for (std::size_t k = i; k <= j; ++k) rank2[order[k]] = doubled;
    const auto t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }

  std::size_t t_plus2 = 0;
  std::size_t total2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total2 += rank2[i];
    if (d[i] > 0) t_plus2 += rank2[i];
  }

  if (n <= 25) {
    // Number of sign patterns giving each doubled rank sum.
    std::vector<double> ways(total2 + 1, 0.0);
    ways[0] = 1.0;
    for (std::size_t r : rank2) {
      for (std::size_t s = total2; s >= r; --s) ways[s] += ways[s - r];
    }
    const double patterns = std::ldexp(1.0, static_cast<int>(n));
    double lower = 0.0;
    double upper = 0.0;
    for (std::size_t s = 0; s <= total2; ++s) {
      if (s <= t_plus2) lower += ways[s];
      if (s >= t_plus2) upper += ways[s];
    }
    return std::min(1.0, 2.0 * std::min(lower, upper) / patterns);
  }

  const auto nn = static_cast<double>(n);
  const double t_plus = static_cast<double>(t_plus2) / 2.0;
  const double mu = nn * (nn + 1.0) / 4.0;
  const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
  if (var <= 0.0) return 1.0;
  const double z = std::max(0.0, std::fabs(t_plus - mu) - 0.5) / std::sqrt(var);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

double paired_significance(std::span<const double> a, std::span<const double> b,
                           SignificanceTest method) {
  return method == SignificanceTest::t_test ? paired_t_test(a, b) : wilcoxon_signed_rank(a, b);
}

}  // namespace slogan::metrics
