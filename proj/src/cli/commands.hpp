#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "slogan/jsonl.hpp"

namespace slogan::cli {

struct CommonOptions {
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::string tagger_cmd;  // external tagger process, whitespace-split argv
  std::string tagger_url;  // external tagger service
};

struct Context {
  std::uint64_t seed = 0;
  io::Json config = io::Json::object();
  std::ostream& out;
  std::ostream& err;
};

struct CleanArgs { std::string in, out, rejections; };
struct SplitArgs { std::string in, out_dir; std::optional<double> valid, test; };
struct MaskArgs { std::string in, out; bool keep_hallucinations = false; };
struct PrepareArgs { std::string in, out; std::optional<std::size_t> upsample; };
struct BaselineArgs {
  std::string in, out, system = "first-k", skeletons_from;
  std::optional<std::size_t> k, population, generations, num_candidates;
};
struct SweepArgs { std::string pairs, curve = "curve.csv"; std::size_t k_min = 1, k_max = 30; };
struct GenerateArgs {
  std::string in, out, backend_url, policy = "uniform_all_norepeat", system = "model";
  std::size_t num_codes = 6;
  std::optional<std::string> strategy;
  std::optional<double> top_p, temperature, repetition_penalty;
  std::optional<int> max_new_tokens;
  int num_return = 1;
  std::size_t max_in_flight = 4;
};
struct EvaluateArgs { std::string refs, hyps, out = "report.json"; };
struct StatsArgs { std::string in, out; };
struct KappaArgs { std::string a, b, key = "label"; };

void run_clean(const Context& ctx, const CommonOptions& common, const CleanArgs& args);
void run_split(const Context& ctx, const SplitArgs& args);
void run_mask(const Context& ctx, const CommonOptions& common, const MaskArgs& args);
void run_prepare(const Context& ctx, const CommonOptions& common, const PrepareArgs& args);
void run_baseline(const Context& ctx, const CommonOptions& common, const BaselineArgs& args);
void run_sweep_k(const Context& ctx, const SweepArgs& args);
void run_generate(const Context& ctx, const CommonOptions& common, const GenerateArgs& args);
void run_evaluate(const Context& ctx, const CommonOptions& common, const EvaluateArgs& args);
void run_stats(const Context& ctx, const CommonOptions& common, const StatsArgs& args);
void run_kappa(const Context& ctx, const KappaArgs& args);

}  // namespace slogan::cli
