// Acceptance checks. Prints one PASS/FAIL/SKIP line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "../support/stub_server.hpp"
#include "slogan/annotate.hpp"
#include "slogan/baselines.hpp"
#include "slogan/corpus.hpp"
#include "slogan/ctrlprep.hpp"
#include "slogan/delex.hpp"
#include "slogan/entmask.hpp"
#include "slogan/genclient.hpp"
#include "slogan/jsonl.hpp"
#include "slogan/metrics.hpp"
#include "slogan/text.hpp"

using namespace slogan;
namespace fs = std::filesystem;

namespace {

enum class Status { pass, fail, skip };

struct Outcome {
  Status status = Status::pass;
  std::string detail;
};

// Collects failed expectations within one criterion.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  Outcome outcome(std::string detail = "") const {
    if (count_ == 0) return {Status::pass, std::move(detail)};
    std::string joined;
    for (const std::string& f : failures_) joined += (joined.empty() ? "" : "; ") + f;
    if (count_ > failures_.size()) joined += "; +" + std::to_string(count_ - failures_.size()) + " more";
    return {Status::fail, joined};
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

std::string fixed(double v, int digits = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

bool near(double got, double want, double tolerance) { return std::abs(got - want) <= tolerance; }

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Outcome rouge_worked_example() {
  const std::string ref = "Digital Marketing Firm in New Zealand";
  const std::string hyp = "Digital Marketing Firm in New Columbia";
  const double r1 = 100 * metrics::rouge_n(ref, hyp, 1).f1;
  const double r2 = 100 * metrics::rouge_n(ref, hyp, 2).f1;
  const double rl = 100 * metrics::rouge_l(ref, hyp).f1;
  Probe p;
  p.expect(near(r1, 83.3, 0.1), "rouge1 " + fixed(r1));
  p.expect(near(r2, 80.0, 0.1), "rouge2 " + fixed(r2));
  p.expect(near(rl, 83.3, 0.1), "rougeL " + fixed(rl));
  return p.outcome(fixed(r1, 1) + "/" + fixed(r2, 1) + "/" + fixed(rl, 1));
}

Outcome delex_golden() {
  const delex::DelexResult r = delex::delexicalise_company(
      "Atlassian Corporation Plc",
      "Millions of users globally rely on Atlassian products every day for improving software "
      "development, project management, collaboration, and code quality.");
  Probe p;
  p.expect(r.surface_form == "Atlassian", "surface \"" + r.surface_form + "\"");
  p.expect(r.text ==
               "Millions of users globally rely on <company> products every day for improving software "
               "development, project management, collaboration, and code quality.",
           "text \"" + r.text + "\"");
  return p.outcome();
}

Outcome masking_golden() {
  const std::string description =
      "PR-Living Belgium family-owned furniture brand with production facilities in Waregem where it "
      "brings the best of Belgian-inspired Design Upholstery & Furniture pieces to the global consumers.";
  const std::string slogan = "A Belgian furniture brand";
  const annotate::GazetteerEntityTagger tagger;
  const entmask::MaskedPair m =
      entmask::mask_pair(description, slogan, entmask::masked_entity_spans(description, tagger),
                         entmask::masked_entity_spans(slogan, tagger));
  Probe p;
  p.expect(m.masked_description ==
               "PR-Living [country] family-owned furniture brand with production facilities in [country1] where "
               "it brings the best of [national]-inspired Design Upholstery & Furniture pieces to the global "
               "consumers.",
           "description \"" + m.masked_description + "\"");
  p.expect(m.masked_slogan == "A [national] furniture brand", "slogan \"" + m.masked_slogan + "\"");
  const std::map<std::string, std::string> reverse{
      {"[country]", "Belgium"}, {"[country1]", "Waregem"}, {"[national]", "Belgian"}};
  p.expect(m.map.reverse == reverse, "reverse map " + io::Json(m.map.reverse).dump());
  return p.outcome();
}

Outcome crossover_example() {
  const auto [a, b] = baselines::crossover(words("Just do it"), words("Drink more milk"), 1, 0);
  const std::string left = text::join(a, " ");
  const std::string right = text::join(b, " ");
  Probe p;
  p.expect(left == "Just drink it", "first \"" + left + "\"");
  p.expect(right == "Do more milk", "second \"" + right + "\"");
  return p.outcome();
}

metrics::CandidateSet candidates(std::vector<std::string> slogans) {
  metrics::CandidateSet s;
  s.pair_id = "p";
  for (std::string& slogan : slogans) s.candidates.push_back({std::move(slogan), annotate::ControlCode::NN});
  return s;
}

Outcome diversity_bounds() {
  const std::vector<metrics::CandidateSet> same{candidates(std::vector<std::string>(6, "Best Coffee In Town"))};
  const std::vector<metrics::CandidateSet> disjoint{
      candidates({"alpha beta", "gamma delta", "epsilon zeta", "eta theta", "iota kappa", "lambda mu"})};
  const double low = 100 * metrics::diversity_score(same);
  const double high = 100 * metrics::diversity_score(disjoint);
  Probe p;
  p.expect(near(low, 16.67, 0.01), "identical " + fixed(low));
  p.expect(near(high, 100.0, 1e-9), "disjoint " + fixed(high));
  return p.outcome(fixed(low) + "% / " + fixed(high) + "%");
}

bool has_word_ci(const std::string& text, const std::string& needle) {
  const std::string hay = text::to_lower(text);
  const std::string lowered = text::to_lower(needle);
  const auto alnum = [&](std::size_t i) { return std::isalnum(static_cast<unsigned char>(hay[i])) != 0; };
  for (std::size_t at = hay.find(lowered); at != std::string::npos; at = hay.find(lowered, at + 1)) {
    const std::size_t end = at + lowered.size();
    if ((at == 0 || !alnum(at - 1)) && (end >= hay.size() || !alnum(end))) return true;
  }
  return false;
}

Outcome roundtrip_properties() {
  constexpr int kCases = 1000;
  const auto start = std::chrono::steady_clock::now();
  Probe p;

  std::mt19937 rng(2024);
  for (int i = 0; i < kCases; ++i) {
    const gen::DelexCase c = gen::delex_case(rng);
    const delex::DelexResult r = delex::delexicalise_company(c.company, c.text);
    if (!r.matched) continue;
    p.expect(text::to_lower(delex::relexicalise(r.text, r.surface_form)) == text::to_lower(c.text),
             "delex roundtrip: " + c.text);
    p.expect(!has_word_ci(r.text, r.surface_form), "surface left behind: " + r.text);
  }

  rng.seed(7);
  for (int i = 0; i < kCases; ++i) {
    const gen::MaskCase c = gen::mask_case(rng);
    const entmask::MaskedPair m = entmask::mask_pair(c.description, c.slogan, c.description_spans, c.slogan_spans);
    p.expect(entmask::unmask_slogan(m.masked_slogan, m.map) == c.slogan, "mask roundtrip: " + c.slogan);
    p.expect(entmask::unmask_slogan(m.masked_description, m.map) == c.description,
             "mask roundtrip: " + c.description);
  }

  rng.seed(99);
  for (int i = 0; i < kCases; ++i) {
    const std::string input = gen::repair_case(rng);
    const entmask::MaskMap map = gen::random_map(rng);
    const std::string once = entmask::repair_mask_tokens(input, map);
    p.expect(entmask::repair_mask_tokens(once, map) == once, "repair not idempotent: " + input);
    for (const std::string& token : entmask::mask_tokens_in(once)) {
      p.expect(map.has_token(token), "repair left unknown token " + token);
    }
  }

  rng.seed(5);
  std::vector<entmask::MaskedRecord> rows;
  for (int i = 0; i < kCases; ++i) rows.push_back(gen::filter_case(rng, static_cast<std::size_t>(i)));
  for (const entmask::MaskedRecord& r : entmask::filter_hallucination_pairs(rows)) {
    if (r.split != "train") continue;
    const auto desc = entmask::mask_tokens_in(r.masked_description);
    for (const std::string& t : entmask::mask_tokens_in(r.masked_slogan)) {
      p.expect(desc.count(t) > 0, "filter kept " + r.id + " with " + t);
    }
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  p.expect(seconds < 10.0, "took " + fixed(seconds) + "s");
  return p.outcome("4 x " + std::to_string(kCases) + " cases in " + fixed(seconds, 3) + "s");
}

Outcome first_k_behaviour(const fs::path& data_dir) {
  Probe p;
  const std::string burrito = baselines::first_k_words(
      "We may not be the only burrito in town, but we've got the freshest ingredients and the fastest "
      "counter service around.",
      11);
  p.expect(burrito == "We may not be the only burrito in town, but we've", "burrito \"" + burrito + "\"");

  const std::string sample = env_or("SLOGAN_VALID_SAMPLE", (data_dir / "valid_sample.jsonl").string());
  if (!fs::exists(sample)) {
    p.expect(false, "validation sample " + sample + " not found; sweep argmax unchecked");
    return p.outcome();
  }
  std::vector<baselines::ReferencePair> pairs;
  for (const io::Json& row : io::read_jsonl(sample)) {
    pairs.push_back({row.at("description").get<std::string>(), row.at("slogan").get<std::string>()});
  }
  const baselines::SweepResult sweep = baselines::sweep_k(pairs, 1, 30);
  p.expect(sweep.best_k >= 7 && sweep.best_k <= 14, "argmax k " + std::to_string(sweep.best_k));
  return p.outcome("burrito ok, argmax k " + std::to_string(sweep.best_k) + " over " +
                   std::to_string(pairs.size()) + " pairs");
}

Outcome corpus_statistics(const fs::path& data_dir) {
  const std::string full = env_or("SLOGAN_VALID_FULL", (data_dir / "valid.jsonl").string());
  if (!fs::exists(full)) {
    std::cerr << "warning: full validation file " << full << " not found; statistics not checked\n";
    return {Status::skip, "full validation file not supplied"};
  }
  std::vector<corpus::SloganPair> pairs;
  for (const io::Json& row : io::read_jsonl(full)) pairs.push_back(corpus::pair_from_json(row));
  const corpus::CorpusStats stats = corpus::compute_corpus_stats(pairs, annotate::GazetteerEntityTagger());
  const double in_desc = 100 * stats.pct_slogan_in_desc;
  const double unigrams = 100 * stats.pct_unigram_overlap;
  Probe p;
  p.expect(near(in_desc, 11.2, 0.5), "slogan-in-description " + fixed(in_desc));
  p.expect(near(unigrams, 62.7, 2.0), "unigram containment " + fixed(unigrams));
  return p.outcome(fixed(in_desc, 1) + "% / " + fixed(unigrams, 1) + "%");
}

std::string random_text(std::mt19937& rng, std::size_t max_len) {
  static const char* vocab[] = {"a", "b", "c", "d", "e", "Best", "coffee,", "(tea)"};
  std::string out;
  for (std::size_t i = gen::between(rng, 0, max_len); i > 0; --i) {
    if (!out.empty()) out += ' ';
    out += vocab[gen::between(rng, 0, std::size(vocab) - 1)];
  }
  return out;
}

Outcome metric_oracles() {
  constexpr int kInstances = 200;
  Probe p;
  std::mt19937 rng(17);
  for (int i = 0; i < kInstances; ++i) {
    const std::string ref = random_text(rng, 8);
    const std::string hyp = random_text(rng, 8);
    for (std::size_t n = 1; n <= 2; ++n) {
      p.expect(near(metrics::rouge_n(ref, hyp, n).f1, oracle::rouge_n(ref, hyp, n).f, 1e-12),
               "rouge" + std::to_string(n) + ": " + ref + " | " + hyp);
    }
    p.expect(near(metrics::rouge_l(ref, hyp).f1, oracle::rouge_l(ref, hyp).f, 1e-12), "rougeL: " + ref + " | " + hyp);
  }

  rng.seed(23);
  for (int i = 0; i < kInstances; ++i) {
    std::vector<std::string> a;
    std::vector<std::string> b;
    for (std::size_t n = gen::between(rng, 1, 30); n > 0; --n) {
      a.push_back(std::to_string(gen::between(rng, 0, 3)));
      b.push_back(std::to_string(gen::between(rng, 0, 3)));
    }
    p.expect(near(metrics::cohen_kappa(a, b), oracle::kappa(a, b), 1e-12), "kappa instance " + std::to_string(i));
  }

  rng.seed(41);
  for (int i = 0; i < kInstances; ++i) {
    const std::size_t n = gen::between(rng, 2, 5);
    const std::vector<double> a(n, 0.0);
    std::vector<double> b;
    for (std::size_t k = 0; k < n; ++k) b.push_back(static_cast<double>(gen::between(rng, 0, 6)) - 3.0);
    p.expect(near(metrics::wilcoxon_signed_rank(a, b), oracle::wilcoxon(a, b), 1e-12),
             "wilcoxon instance " + std::to_string(i));
  }
  return p.outcome(std::to_string(kInstances) + " instances per metric");
}

// Replies mix legal, unknown and truncated mask tokens with the company mask.
void adversarial_reply(const httplib::Request& req, httplib::Response& res) {
  const io::Json body = io::Json::parse(req.body);
  const std::string description = body["description"];
  const std::set<std::string> tokens = entmask::mask_tokens_in(description);
  std::vector<std::string> opening = words(description);
  opening.resize(std::min<std::size_t>(opening.size(), 6));
  const std::vector<std::string> replies{
      "<company> in " + (tokens.empty() ? std::string("[country]") : *tokens.begin()),
      "Meet [person7] from the [locat", "[national] [date] deals by <company>", text::join(opening, " ")};
  io::Json slogans = io::Json::array();
  for (int i = 0; i < body["num_return"].get<int>(); ++i) slogans.push_back(replies[static_cast<std::size_t>(i) % replies.size()]);
  res.set_content(io::Json{{"slogans", slogans}, {"backend_id", "acceptance-stub"}}.dump(), "application/json");
}

Outcome end_to_end(const fs::path& fixtures) {
  testing_support::StubServer server(adversarial_reply);
  genclient::HttpBackend backend(server.url());
  const annotate::GazetteerEntityTagger tagger;
  genclient::PipelineOptions options;
  options.num_return_per_code = 4;
  const auto policy = ctrlprep::CodePolicy::parse("uniform_all");

  Probe p;
  std::size_t pairs = 0;
  std::size_t slogans = 0;
  for (const io::Json& row : io::read_jsonl((fixtures / "e2e_pairs.jsonl").string())) {
    const auto codes = ctrlprep::sample_inference_codes(2, policy, pairs);
    for (const genclient::FinalSlogan& s : genclient::end_to_end_generate(
             row.at("company_name").get<std::string>(), row.at("description").get<std::string>(), codes, backend,
             tagger, options)) {
      ++slogans;
      p.expect(s.slogan.find("<company>") == std::string::npos, "company mask in \"" + s.slogan + "\"");
      p.expect(s.slogan.find('[') == std::string::npos && s.slogan.find(']') == std::string::npos,
               "mask token in \"" + s.slogan + "\"");
    }
    ++pairs;
  }
  p.expect(pairs == 50, std::to_string(pairs) + " fixture pairs");
  return p.outcome(std::to_string(slogans) + " slogans from " + std::to_string(pairs) + " pairs");
}

}  // namespace

int main() {
  const fs::path fixtures = SLOGAN_FIXTURES;
  const fs::path data_dir = SLOGAN_DATA_DIR;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rouge-worked-example", rouge_worked_example},
      {"delex-golden", delex_golden},
      {"entity-masking-golden", masking_golden},
      {"ga-crossover", crossover_example},
      {"diversity-bounds", diversity_bounds},
      {"roundtrip-properties", roundtrip_properties},
      {"first-k-behaviour", [&] { return first_k_behaviour(data_dir); }},
      {"corpus-statistics", [&] { return corpus_statistics(data_dir); }},
      {"metric-oracles", metric_oracles},
      {"end-to-end-stub", [&] { return end_to_end(fixtures); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {Status::fail, std::string("exception: ") + e.what()};
    }
    const char* label = o.status == Status::pass ? "PASS" : o.status == Status::skip ? "SKIP" : "FAIL";
    if (o.status == Status::fail) ++failed;
    std::cout << label << " " << name << (o.detail.empty() ? "" : " (" + o.detail + ")") << "\n";
  }
  return failed == 0 ? 0 : 1;
}
