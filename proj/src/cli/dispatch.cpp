#include <exception>

#include "CLI11.hpp"
#include "commands.hpp"
#include "slogan/cli.hpp"
#include "slogan/config.hpp"
#include "slogan/error.hpp"

namespace slogan::cli {

namespace {

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n') c = ';';
  }
  while (!s.empty() && s.back() == ';') s.pop_back();
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slogan corpus, baseline, generation and evaluation toolkit", "slogan"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  app.add_option("--seed", common.seed, "Seed for every random choice (default 0)");
  app.add_option("--config", common.config_path, "JSON or TOML config file");
  app.add_option("--tagger-cmd", common.tagger_cmd, "External tagger command (line JSON on stdio)");
  app.add_option("--tagger-url", common.tagger_url, "External tagger HTTP endpoint");

  CleanArgs clean;
  auto* c_clean = app.add_subcommand("clean", "Extract cleaned (description, slogan) pairs from company records");
  c_clean->add_option("--in", clean.in, "Company records JSONL")->required();
  c_clean->add_option("--out", clean.out, "Slogan pairs JSONL")->required();
  c_clean->add_option("--rejections", clean.rejections, "Rejection log (default: rejections.jsonl next to --out)");

  SplitArgs split;
  auto* c_split = app.add_subcommand("split", "Partition pairs into train/valid/test");
  c_split->add_option("--in", split.in, "Slogan pairs JSONL")->required();
  c_split->add_option("--out-dir", split.out_dir, "Directory for train/valid/test.jsonl")->required();
  c_split->add_option("--valid", split.valid, "Validation fraction (default 0.02)");
  c_split->add_option("--test", split.test, "Test fraction (default 0.02)");

  MaskArgs mask;
  auto* c_mask = app.add_subcommand("mask", "Delexicalise company names and mask entities");
  c_mask->add_option("--in", mask.in, "Slogan pairs JSONL")->required();
  c_mask->add_option("--out", mask.out, "Masked pairs JSONL")->required();
  c_mask->add_flag("--keep-hallucinations", mask.keep_hallucinations,
                   "Do not drop train pairs whose slogan has entities missing from the description");

  PrepareArgs prepare;
  auto* c_prepare = app.add_subcommand("prepare", "Derive control codes for conditional training");
  c_prepare->add_option("--in", prepare.in, "Masked pairs JSONL")->required();
  c_prepare->add_option("--out", prepare.out, "Conditioned training JSONL")->required();
  c_prepare->add_option("--upsample", prepare.upsample, "Upsample every non-NN code to this count");

  BaselineArgs baseline;
  auto* c_baseline = app.add_subcommand("baseline", "Run a non-neural baseline");
  c_baseline->add_option("--in", baseline.in, "Slogan pairs JSONL")->required();
  c_baseline->add_option("--out", baseline.out, "Candidate JSONL")->required();
  c_baseline->add_option("--system", baseline.system, "first-sentence, first-k or skeleton")
      ->check(CLI::IsMember({"first-sentence", "first-k", "skeleton"}));
  c_baseline->add_option("--k", baseline.k, "Words kept by first-k (default 11)");
  c_baseline->add_option("--skeletons-from", baseline.skeletons_from, "Pairs JSONL whose slogans supply skeletons");
  c_baseline->add_option("--population", baseline.population, "GA population size");
  c_baseline->add_option("--generations", baseline.generations, "GA generations");
  c_baseline->add_option("--num-candidates", baseline.num_candidates, "Skeleton candidates kept per pair");

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep-k", "ROUGE of first-k over a range of k");
  c_sweep->add_option("--pairs", sweep.pairs, "Validation pairs JSONL")->required();
  c_sweep->add_option("--min", sweep.k_min, "Smallest k")->check(CLI::PositiveNumber);
  c_sweep->add_option("--max", sweep.k_max, "Largest k")->check(CLI::PositiveNumber);
  c_sweep->add_option("--curve", sweep.curve, "CSV output (k,rouge1,rouge2,rougeL)");

  GenerateArgs generate;
  auto* c_generate = app.add_subcommand("generate", "Generate slogans through a backend");
  c_generate->add_option("--in", generate.in, "Slogan pairs JSONL")->required();
  c_generate->add_option("--out", generate.out, "Candidate JSONL")->required();
  c_generate->add_option("--backend-url", generate.backend_url, "Base URL serving POST /generate")->required();
  c_generate->add_option("--codes", generate.policy,
                         "paper_default, uniform_all, uniform_all_norepeat, none or fixed:<CODE>");
  c_generate->add_option("--num-codes", generate.num_codes, "Codes sampled per description")->check(CLI::PositiveNumber);
  c_generate->add_option("--strategy", generate.strategy, "greedy or nucleus")
      ->check(CLI::IsMember({"greedy", "nucleus"}));
  c_generate->add_option("--top-p", generate.top_p);
  c_generate->add_option("--temperature", generate.temperature);
  c_generate->add_option("--repetition-penalty", generate.repetition_penalty);
  c_generate->add_option("--max-new-tokens", generate.max_new_tokens);
  c_generate->add_option("--num-return", generate.num_return, "Slogans per code")->check(CLI::PositiveNumber);
  c_generate->add_option("--max-in-flight", generate.max_in_flight, "Concurrent requests")->check(CLI::PositiveNumber);
  c_generate->add_option("--system", generate.system, "System name written to the candidates");

  EvaluateArgs evaluate;
  auto* c_evaluate = app.add_subcommand("evaluate", "Score candidates against references");
  c_evaluate->add_option("--refs", evaluate.refs, "Reference pairs JSONL")->required();
  c_evaluate->add_option("--hyps", evaluate.hyps, "Candidate JSONL")->required();
  c_evaluate->add_option("--out", evaluate.out, "Report JSON");

  StatsArgs stats;
  auto* c_stats = app.add_subcommand("stats", "Corpus statistics");
  c_stats->add_option("--in", stats.in, "Slogan pairs JSONL")->required();
  c_stats->add_option("--out", stats.out, "Statistics JSON (optional)");

  KappaArgs kappa;
  auto* c_kappa = app.add_subcommand("kappa", "Cohen's kappa between two annotation files");
  c_kappa->add_option("--a", kappa.a, "First annotator JSONL ({id, label})")->required();
  c_kappa->add_option("--b", kappa.b, "Second annotator JSONL")->required();
  c_kappa->add_option("--key", kappa.key, "Label field");

  std::vector<std::string> argv_store{"slogan"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Context ctx{0, io::Json::object(), out, err};
    if (!common.config_path.empty()) {
      ctx.config = config::load(common.config_path);
      if (!ctx.config.is_object()) throw ValidationError("config file must hold an object/table");
    }
    if (common.seed) {
      ctx.seed = *common.seed;
    } else if (ctx.config.contains("seed")) {
      try {
        ctx.seed = ctx.config["seed"].get<std::uint64_t>();
      } catch (const io::Json::exception&) {
        throw ValidationError("config: seed must be a non-negative integer");
      }
    }

    CLI::App* sub = app.get_subcommands().front();
    err << "[slogan] subcommand=" << sub->get_name() << " seed=" << ctx.seed
        << " options={" << one_line(sub->config_to_str(true, false)) << "}"
        << " config=" << ctx.config.dump() << "\n";

    if (sub == c_clean) run_clean(ctx, common, clean);
    else if (sub == c_split) run_split(ctx, split);
    else if (sub == c_mask) run_mask(ctx, common, mask);
    else if (sub == c_prepare) run_prepare(ctx, common, prepare);
    else if (sub == c_baseline) run_baseline(ctx, common, baseline);
    else if (sub == c_sweep) run_sweep_k(ctx, sweep);
    else if (sub == c_generate) run_generate(ctx, common, generate);
    else if (sub == c_evaluate) run_evaluate(ctx, common, evaluate);
    else if (sub == c_stats) run_stats(ctx, common, stats);
    else if (sub == c_kappa) run_kappa(ctx, kappa);
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return 2;
  } catch (const RetryableError& e) {
    err << "backend error: " << e.what() << "\n";
    return 2;
  } catch (const ProtocolError& e) {
    err << "backend protocol error: " << e.what() << "\npayload: " << e.payload() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace slogan::cli
