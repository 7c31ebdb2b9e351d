#include <map>

#include "slogan/error.hpp"
#include "slogan/metrics.hpp"

namespace slogan::metrics {

double cohen_kappa(std::span<const std::string> labels_a, std::span<const std::string> labels_b) {
  if (labels_a.size() != labels_b.size()) throw ValidationError("kappa: length mismatch");
  if (labels_a.empty()) throw ValidationError("kappa: no labels");
  const auto n = static_cast<double>(labels_a.size());
  std::map<std::string_view, double> marginal_a;
  std::map<std::string_view, double> marginal_b;
  double agree = 0.0;
  for (std::size_t i = 0; i < labels_a.size(); ++i) {
    marginal_a[labels_a[i]] += 1.0;
    marginal_b[labels_b[i]] += 1.0;
    if (labels_a[i] == labels_b[i]) agree += 1.0;
  }
  const double p_o = agree / n;
  double p_e = 0.0;
  for (const auto& [label, count] : marginal_a) {
    if (const auto it = marginal_b.find(label); it != marginal_b.end()) {
      p_e += (count / n) * (it->second / n);
    }
  }
  if (p_e >= 1.0) return 1.0;
  return (p_o - p_e) / (1.0 - p_e);
}

}  // namespace slogan::metrics
