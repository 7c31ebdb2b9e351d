#include <cstdio>

#include "slogan/metrics.hpp"

namespace slogan::metrics {

io::Json to_json(const RougeScore& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

io::Json to_json(const EvalReport& r) {
  io::Json rouge = io::Json::object();
  for (const auto& [variant, score] : r.rouge) rouge[variant] = to_json(score);
  io::Json ctrl = io::Json::object();
  for (const auto& [code, acc] : r.ctrl_accuracy) ctrl[std::string(annotate::to_string(code))] = acc;
  return {{"system", r.system},
          {"num_pairs", r.num_pairs},
          {"rouge", rouge},
          {"diversity", r.diversity},
          {"abstractiveness", r.abstractiveness},
          {"ctrl_accuracy", ctrl},
          {"significance", r.significance},
          {"truthfulness", r.truthfulness}};
}

std::string format_results_table(std::span<const EvalReport> reports) {
  std::size_t width = 6;
  for (const EvalReport& r : reports) width = std::max(width, r.system.size());
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %7s  %7s  %7s  %9s  %9s\n", static_cast<int>(width),
                "System", "R1", "R2", "RL", "Diversity", "Abstract.");
  out += line;
  out += std::string(width + 50, '-') + "\n";
  for (const EvalReport& r : reports) {
    const auto f1 = [&](const char* key) {
      const auto it = r.rouge.find(key);
      return it == r.rouge.end() ? 0.0 : 100.0 * it->second.f1;
    };
    std::snprintf(line, sizeof line, "%-*s  %7.2f  %7.2f  %7.2f  %9.2f  %9.2f\n",
                  static_cast<int>(width), r.system.c_str(), f1("rouge1"), f1("rouge2"),
                  f1("rougeL"), 100.0 * r.diversity, 100.0 * r.abstractiveness);
    out += line;
  }
  return out;
}

}  // namespace slogan::metrics
