#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>

#include "slogan/baselines.hpp"
#include "slogan/corpus.hpp"
#include "slogan/ctrlprep.hpp"
#include "slogan/delex.hpp"
#include "slogan/entmask.hpp"
#include "slogan/error.hpp"
#include "slogan/genclient.hpp"
#include "slogan/metrics.hpp"
#include "slogan/plugin_tagger.hpp"
#include "slogan/text.hpp"

namespace slogan::cli {

namespace fs = std::filesystem;

namespace {

struct Taggers {
  std::shared_ptr<const annotate::PosTagger> pos;
  std::shared_ptr<const annotate::EntityTagger> ner;
};

Taggers make_taggers(const CommonOptions& common) {
  if (!common.tagger_cmd.empty() && !common.tagger_url.empty()) {
    throw ValidationError("--tagger-cmd and --tagger-url are mutually exclusive");
  }
  std::shared_ptr<annotate::PluginTagger> plugin;
  if (!common.tagger_cmd.empty()) {
    std::vector<std::string> argv;
    for (std::string_view part : text::split_whitespace(common.tagger_cmd)) argv.emplace_back(part);
    plugin = annotate::PluginTagger::spawn(argv);
  } else if (!common.tagger_url.empty()) {
    plugin = annotate::PluginTagger::connect(common.tagger_url);
  }
  if (plugin) return {plugin, plugin};
  return {std::make_shared<annotate::LexiconPosTagger>(),
          std::make_shared<annotate::GazetteerEntityTagger>()};
}

// Settings for one stage: the named table when present, else the top level.
io::Json section(const io::Json& config, const char* name) {
  if (config.contains(name) && config[name].is_object()) return config[name];
  return config;
}

template <typename T>
T setting(const io::Json& table, const char* key, T fallback) {
  if (!table.contains(key)) return fallback;
  try {
    return table[key].get<T>();
  } catch (const io::Json::exception&) {
    throw ValidationError(std::string("config: bad value for ") + key);
  }
}

std::vector<corpus::SloganPair> read_pairs(const std::string& path) {
  std::vector<corpus::SloganPair> pairs;
  for (const io::Json& row : io::read_jsonl(path)) pairs.push_back(corpus::pair_from_json(row));
  return pairs;
}

void write_pairs(const fs::path& path, const std::vector<corpus::SloganPair>& pairs) {
  std::vector<io::Json> rows;
  for (const auto& p : pairs) rows.push_back(corpus::to_json(p));
  io::write_jsonl(path, rows);
}

io::Json to_json(const entmask::MaskedRecord& r) {
  return {{"id", r.id},
          {"split", r.split},
          {"masked_description", r.masked_description},
          {"masked_slogan", r.masked_slogan},
          {"reverse_map", r.reverse_map},
          {"company_surface", r.company_surface}};
}

entmask::MaskedRecord masked_from_json(const io::Json& row) {
  entmask::MaskedRecord r;
  r.id = io::require_string(row, "id");
  r.split = io::optional_string(row, "split", "train");
  r.masked_description = io::require_string(row, "masked_description");
  r.masked_slogan = io::require_string(row, "masked_slogan");
  r.company_surface = io::optional_string(row, "company_surface");
  if (row.contains("reverse_map")) {
    try {
      r.reverse_map = row["reverse_map"].get<std::map<std::string, std::string>>();
    } catch (const io::Json::exception&) {
      throw ValidationError("reverse_map must map strings to strings");
    }
  }
  return r;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

void run_clean(const Context& ctx, const CommonOptions& common, const CleanArgs& args) {
  const corpus::CleaningConfig config = corpus::cleaning_config_from_json(section(ctx.config, "clean"));
  std::vector<corpus::CompanyRecord> records;
  const std::vector<io::Json> rows = io::read_jsonl(args.in);
  for (std::size_t i = 0; i < rows.size(); ++i) records.push_back(corpus::record_from_json(rows[i], i));

  const Taggers taggers = make_taggers(common);
  const annotate::StopwordLanguageDetector language;
  const corpus::CleanResult result = corpus::clean_pipeline(records, config, *taggers.ner, language);

  write_pairs(args.out, result.pairs);
  const fs::path rejections = args.rejections.empty()
                                  ? fs::path(args.out).parent_path() / "rejections.jsonl"
                                  : fs::path(args.rejections);
  std::vector<io::Json> log;
  for (const auto& r : result.rejections) log.push_back(corpus::to_json(r));
  io::write_jsonl(rejections, log);
  ctx.err << "[slogan] kept " << result.pairs.size() << " of " << records.size() << " records; "
          << result.rejections.size() << " rejections in " << rejections.string() << "\n";
}

void run_split(const Context& ctx, const SplitArgs& args) {
  const io::Json table = section(ctx.config, "split");
  const double valid = args.valid.value_or(setting(table, "valid_fraction", 0.02));
  const double test = args.test.value_or(setting(table, "test_fraction", 0.02));
  corpus::Partition part = corpus::split_dataset(read_pairs(args.in), valid, test, ctx.seed);
  const fs::path dir(args.out_dir);
  write_pairs(dir / "train.jsonl", part.train);
  write_pairs(dir / "valid.jsonl", part.valid);
  write_pairs(dir / "test.jsonl", part.test);
  ctx.out << "train " << part.train.size() << "\nvalid " << part.valid.size() << "\ntest "
          << part.test.size() << "\n";
}

void run_mask(const Context& ctx, const CommonOptions& common, const MaskArgs& args) {
  const Taggers taggers = make_taggers(common);
  std::vector<entmask::MaskedRecord> records;
  for (const corpus::SloganPair& p : read_pairs(args.in)) {
    const delex::DelexResult desc = delex::delexicalise_company(p.company_name, p.description);
    const delex::DelexResult slogan = delex::delexicalise_company(p.company_name, p.slogan);
    const auto desc_spans = entmask::masked_entity_spans(desc.text, *taggers.ner);
    const auto slogan_spans = entmask::masked_entity_spans(slogan.text, *taggers.ner);
    entmask::MaskedPair masked = entmask::mask_pair(desc.text, slogan.text, desc_spans, slogan_spans);
    entmask::MaskedRecord r;
    r.id = p.id;
    r.split = std::string(corpus::to_string(p.split));
    r.masked_description = std::move(masked.masked_description);
    r.masked_slogan = std::move(masked.masked_slogan);
    r.reverse_map = std::move(masked.map.reverse);
    r.company_surface = desc.matched ? desc.surface_form : slogan.surface_form;
    records.push_back(std::move(r));
  }
  const std::size_t before = records.size();
  if (!args.keep_hallucinations) records = entmask::filter_hallucination_pairs(std::move(records));
  std::vector<io::Json> rows;
  for (const auto& r : records) rows.push_back(to_json(r));
  io::write_jsonl(args.out, rows);
  ctx.err << "[slogan] masked " << before << " pairs; dropped " << before - records.size()
          << " hallucinating train pairs\n";
}

void run_prepare(const Context& ctx, const CommonOptions& common, const PrepareArgs& args) {
  const Taggers taggers = make_taggers(common);
  std::vector<ctrlprep::ConditionedExample> examples;
  for (const io::Json& row : io::read_jsonl(args.in)) {
    entmask::MaskedRecord r = masked_from_json(row);
    if (text::trim(r.masked_slogan).empty()) throw ValidationError("empty slogan in pair " + r.id);
    ctrlprep::ConditionedExample e;
    e.code = annotate::derive_control_code(r.masked_slogan, *taggers.pos);
    e.masked_description = std::move(r.masked_description);
    e.masked_slogan = std::move(r.masked_slogan);
    e.reverse_map = std::move(r.reverse_map);
    examples.push_back(std::move(e));
  }
  const io::Json table = section(ctx.config, "prepare");
  std::optional<std::size_t> target = args.upsample;
  if (!target && table.contains("upsample_target")) target = setting<std::size_t>(table, "upsample_target", 0);
  if (target) {
    ctrlprep::UpsampleResult up = ctrlprep::upsample_by_code(std::move(examples), *target, ctx.seed);
    for (const std::string& w : up.warnings) ctx.err << "warning: " << w << "\n";
    examples = std::move(up.examples);
  }
  std::map<annotate::ControlCode, std::size_t> counts;
  std::vector<io::Json> rows;
  for (const auto& e : examples) {
    ++counts[e.code];
    rows.push_back(ctrlprep::to_json(e));
  }
  io::write_jsonl(args.out, rows);
  for (const auto& [code, n] : counts) ctx.out << annotate::to_string(code) << " " << n << "\n";
}

void run_baseline(const Context& ctx, const CommonOptions& common, const BaselineArgs& args) {
  const std::vector<corpus::SloganPair> pairs = read_pairs(args.in);
  std::vector<io::Json> rows;
  if (args.system == "first-sentence" || args.system == "first-k") {
    const std::size_t k = args.k.value_or(setting<std::size_t>(section(ctx.config, "baseline"), "k", 11));
    if (k == 0) throw ValidationError("--k must be positive");
    for (const auto& p : pairs) {
      const std::string slogan = args.system == "first-k" ? baselines::first_k_words(p.description, k)
                                                          : baselines::first_sentence(p.description);
      rows.push_back({{"id", p.id}, {"system", args.system}, {"slogan", slogan}});
    }
    io::write_jsonl(args.out, rows);
    return;
  }

  if (args.skeletons_from.empty()) throw ValidationError("skeleton baseline needs --skeletons-from");
  const Taggers taggers = make_taggers(common);
  std::vector<std::string> slogans;
  for (const auto& p : read_pairs(args.skeletons_from)) slogans.push_back(p.slogan);
  const std::vector<baselines::Skeleton> skeletons = baselines::mine_skeletons(slogans, *taggers.pos);
  ctx.err << "[slogan] mined " << skeletons.size() << " skeletons from " << slogans.size() << " slogans\n";

  const io::Json table = section(ctx.config, "ga");
  baselines::GaConfig ga;
  ga.population_size = args.population.value_or(setting(table, "population_size", ga.population_size));
  ga.generations = args.generations.value_or(setting(table, "generations", ga.generations));
  ga.mutation_rate = setting(table, "mutation_rate", ga.mutation_rate);
  ga.crossover_rate = setting(table, "crossover_rate", ga.crossover_rate);
  ga.elite_fraction = setting(table, "elite_fraction", ga.elite_fraction);
  ga.num_candidates = args.num_candidates.value_or(setting(table, "num_candidates", ga.num_candidates));
  if (table.contains("scoring_weights")) {
    const io::Json& w = table["scoring_weights"];
    ga.scoring_weights.keyword_coverage = setting(w, "keyword_coverage", ga.scoring_weights.keyword_coverage);
    ga.scoring_weights.length_prior = setting(w, "length_prior", ga.scoring_weights.length_prior);
    ga.scoring_weights.skeleton_prior = setting(w, "skeleton_prior", ga.scoring_weights.skeleton_prior);
    ga.scoring_weights.repetition_penalty =
        setting(w, "repetition_penalty", ga.scoring_weights.repetition_penalty);
  }
  ga.validate();

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ga.seed = ctx.seed + i;
    std::vector<baselines::GaCandidate> candidates;
    try {
      candidates = baselines::generate_skeleton_slogans(pairs[i].description, skeletons, ga, *taggers.pos);
    } catch (const ValidationError& e) {
      ctx.err << "warning: pair " << pairs[i].id << ": " << e.what() << "\n";
      continue;
    }
    for (const auto& c : candidates) {
      rows.push_back({{"id", pairs[i].id}, {"system", "skeleton"}, {"slogan", c.text()}, {"score", c.score}});
    }
  }
  io::write_jsonl(args.out, rows);
}

void run_sweep_k(const Context& ctx, const SweepArgs& args) {
  std::vector<baselines::ReferencePair> refs;
  for (const auto& p : read_pairs(args.pairs)) refs.push_back({p.description, p.slogan});
  const baselines::SweepResult result = baselines::sweep_k(refs, args.k_min, args.k_max);
  std::string csv = "k,rouge1,rouge2,rougeL\n";
  for (const auto& point : result.curve) {
    csv += std::to_string(point.k) + "," + format_double(point.rouge1) + "," +
           format_double(point.rouge2) + "," + format_double(point.rougeL) + "\n";
  }
  io::write_text(args.curve, csv);
  ctx.out << result.best_k << "\n";
}

void run_generate(const Context& ctx, const CommonOptions& common, const GenerateArgs& args) {
  const Taggers taggers = make_taggers(common);
  genclient::PipelineOptions options;
  if (ctx.config.contains("decoding")) options.decoding = genclient::decoding_from_json(ctx.config["decoding"]);
  if (args.strategy) {
    options.decoding.strategy = *args.strategy == "nucleus" ? genclient::Strategy::nucleus
                                                            : genclient::Strategy::greedy;
  }
  if (args.top_p) options.decoding.top_p = *args.top_p;
  if (args.temperature) options.decoding.temperature = *args.temperature;
  if (args.repetition_penalty) options.decoding.repetition_penalty = *args.repetition_penalty;
  if (args.max_new_tokens) options.decoding.max_new_tokens = *args.max_new_tokens;
  options.decoding.validate();
  options.num_return_per_code = args.num_return;
  options.max_in_flight = args.max_in_flight;

  const bool no_codes = args.policy == "none";
  const ctrlprep::CodePolicy policy =
      no_codes ? ctrlprep::CodePolicy{} : ctrlprep::CodePolicy::parse(args.policy);
  genclient::HttpBackend backend(args.backend_url);
  const std::vector<corpus::SloganPair> pairs = read_pairs(args.in);

  std::vector<io::Json> rows;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::vector<annotate::ControlCode> codes;
    if (!no_codes) codes = ctrlprep::sample_inference_codes(args.num_codes, policy, ctx.seed + i);
    for (const auto& s : genclient::end_to_end_generate(pairs[i].company_name, pairs[i].description,
                                                         codes, backend, *taggers.ner, options)) {
      rows.push_back({{"id", pairs[i].id},
                      {"system", args.system},
                      {"slogan", s.slogan},
                      {"code", s.code ? io::Json(std::string(annotate::to_string(*s.code)))
                                      : io::Json(nullptr)}});
    }
  }
  io::write_jsonl(args.out, rows);
  ctx.err << "[slogan] wrote " << rows.size() << " slogans for " << pairs.size() << " pairs\n";
}

void run_evaluate(const Context& ctx, const CommonOptions& common, const EvaluateArgs& args) {
  const std::vector<corpus::SloganPair> refs = read_pairs(args.refs);
  if (refs.empty()) throw ValidationError("no reference pairs");

  std::vector<std::string> systems;
  std::map<std::string, std::map<std::string, std::vector<metrics::Candidate>>> by_system;
  std::map<std::string, std::vector<bool>> has_code;
  for (const io::Json& row : io::read_jsonl(args.hyps)) {
    const std::string id = io::require_string(row, "id");
    const std::string system = io::optional_string(row, "system", "system");
    if (!by_system.count(system)) systems.push_back(system);
    metrics::Candidate c{io::require_string(row, "slogan"), annotate::ControlCode::NN};
    bool coded = false;
    if (row.contains("code") && row["code"].is_string()) {
      const auto code = annotate::parse_control_code(row["code"].get<std::string>());
      if (!code) throw ValidationError("unknown control code in candidates");
      c.code = *code;
      coded = true;
    }
    by_system[system][id].push_back(std::move(c));
    has_code[system].push_back(coded);
  }
  if (systems.empty()) throw ValidationError("no candidates");

  const Taggers taggers = make_taggers(common);
  std::vector<metrics::EvalReport> reports;
  std::map<std::string, std::vector<double>> r1_scores;
  std::map<std::string, std::vector<double>> rl_scores;
  for (const std::string& system : systems) {
    const auto& candidates = by_system[system];
    metrics::EvalReport report;
    report.system = system;
    report.num_pairs = refs.size();
    std::vector<metrics::CandidateSet> sets;
    std::vector<metrics::CandidateSet> coded_sets;
    metrics::RougeScore sums[3];
    std::size_t missing = 0;
    for (const auto& ref : refs) {
      const auto it = candidates.find(ref.id);
      const std::string hyp = it == candidates.end() ? std::string() : it->second.front().slogan;
      if (it == candidates.end()) ++missing;
      const metrics::RougeScore scores[3] = {metrics::rouge_n(ref.slogan, hyp, 1),
                                             metrics::rouge_n(ref.slogan, hyp, 2),
                                             metrics::rouge_l(ref.slogan, hyp)};
      for (int v = 0; v < 3; ++v) {
        sums[v].precision += scores[v].precision;
        sums[v].recall += scores[v].recall;
        sums[v].f1 += scores[v].f1;
      }
      r1_scores[system].push_back(scores[0].f1);
      rl_scores[system].push_back(scores[2].f1);
      if (it != candidates.end()) sets.push_back({ref.id, ref.description, it->second});
    }
    if (missing > 0) {
      ctx.err << "warning: " << system << " has no candidate for " << missing << " pairs (scored as empty)\n";
    }
    const char* names[3] = {"rouge1", "rouge2", "rougeL"};
    const auto n = static_cast<double>(refs.size());
    for (int v = 0; v < 3; ++v) {
      report.rouge[names[v]] = {sums[v].precision / n, sums[v].recall / n, sums[v].f1 / n};
    }
    report.diversity = metrics::diversity_score(sets);
    report.abstractiveness = metrics::abstractiveness(sets);
    const auto& flags = has_code[system];
    if (!flags.empty() && std::all_of(flags.begin(), flags.end(), [](bool b) { return b; })) {
      report.ctrl_accuracy = metrics::ctrl_accuracy(sets, *taggers.pos);
    }
    if (!reports.empty() && refs.size() >= 2) {
      const std::string& base = systems.front();
      for (auto test : {metrics::SignificanceTest::t_test, metrics::SignificanceTest::wilcoxon}) {
        const std::string suffix = " vs " + base + " (" + std::string(metrics::to_string(test)) + ")";
        report.significance["rouge1" + suffix] =
            metrics::paired_significance(r1_scores[base], r1_scores[system], test);
        report.significance["rougeL" + suffix] =
            metrics::paired_significance(rl_scores[base], rl_scores[system], test);
      }
    }
    reports.push_back(std::move(report));
  }

  io::Json out = {{"systems", io::Json::array()}};
  for (const auto& r : reports) out["systems"].push_back(metrics::to_json(r));
  io::write_json(args.out, out);
  ctx.out << metrics::format_results_table(reports);
}

void run_stats(const Context& ctx, const CommonOptions& common, const StatsArgs& args) {
  const Taggers taggers = make_taggers(common);
  const corpus::CorpusStats stats = corpus::compute_corpus_stats(read_pairs(args.in), *taggers.ner);
  if (!args.out.empty()) io::write_json(args.out, corpus::to_json(stats));
  char line[160];
  std::snprintf(line, sizeof line,
                "pairs %zu\nslogan in description %.1f%%\nslogan unigrams in description %.1f%%\n"
                "descriptions with company name %.1f%%\n",
                stats.size, 100.0 * stats.pct_slogan_in_desc, 100.0 * stats.pct_unigram_overlap,
                100.0 * stats.pct_desc_with_company);
  ctx.out << line;
}

void run_kappa(const Context& ctx, const KappaArgs& args) {
  const auto load = [&](const std::string& path) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const io::Json& row : io::read_jsonl(path)) {
      if (!row.contains(args.key)) throw ValidationError(path + ": row without \"" + args.key + "\"");
      const io::Json& label = row[args.key];
      rows.emplace_back(io::require_string(row, "id"), label.is_string() ? label.get<std::string>() : label.dump());
    }
    return rows;
  };
  const auto a = load(args.a);
  std::map<std::string, std::string> b;
  for (auto& [id, label] : load(args.b)) b[id] = label;
  if (a.size() != b.size()) throw ValidationError("annotation files cover different items");
  std::vector<std::string> labels_a;
  std::vector<std::string> labels_b;
  for (const auto& [id, label] : a) {
    const auto it = b.find(id);
    if (it == b.end()) throw ValidationError("item " + id + " missing from " + args.b);
    labels_a.push_back(label);
    labels_b.push_back(it->second);
  }
  char line[64];
  std::snprintf(line, sizeof line, "%.4f\n", metrics::cohen_kappa(labels_a, labels_b));
  ctx.out << line;
}

}  // namespace slogan::cli
