#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>

#include "slogan/baselines.hpp"
#include "slogan/error.hpp"
#include "slogan/text.hpp"

namespace slogan::baselines {

namespace {

constexpr std::size_t kKeywordsScored = 10;
constexpr std::size_t kVocabularyDraws = 8;

bool has_alnum(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return text::is_alnum(static_cast<unsigned char>(c));
  });
}

class Evolver {
 public:
  Evolver(std::string_view description, std::span<const Skeleton> skeletons,
          const GaConfig& config, const PosTagger& tagger)
      : skeletons_(skeletons), config_(config), tagger_(tagger), rng_(config.seed) {
    const std::vector<Keyword> keywords = extract_keywords(description, tagger);
    for (const Keyword& k : keywords) keywords_by_tag_[k.tag.str()].push_back(k.word);
    for (std::size_t i = 0; i < std::min(keywords.size(), kKeywordsScored); ++i) {
      top_keywords_.insert(text::to_lower(keywords[i].word));
    }
    for (const Skeleton& s : skeletons) max_frequency_ = std::max(max_frequency_, s.frequency);

    for (std::size_t i = 0; i < skeletons.size(); ++i) {
      const auto& seq = skeletons[i].pos_sequence;
      const bool fits = keywords.empty() || std::any_of(seq.begin(), seq.end(), [&](const PosTag& t) {
                          return keywords_by_tag_.count(t.str()) > 0;
                        });
      if (fits && seq.size() >= 3 && seq.size() <= 12 && skeletons[i].frequency > 0) {
        compatible_.push_back(i);
        total_weight_ += static_cast<double>(skeletons[i].frequency);
      }
    }
    if (compatible_.empty()) throw ValidationError("no-skeleton");
  }

  std::vector<GaCandidate> run() {
    std::vector<GaCandidate> population;
    for (std::size_t i = 0; i < config_.population_size; ++i) population.push_back(seed_candidate());
    rank(population);

    const std::size_t elites = std::max<std::size_t>(
        1, static_cast<std::size_t>(config_.elite_fraction * static_cast<double>(config_.population_size) + 0.5));
    for (std::size_t gen = 0; gen < config_.generations; ++gen) {
      std::vector<GaCandidate> next(population.begin(),
                                    population.begin() + static_cast<std::ptrdiff_t>(std::min(elites, population.size())));
      while (next.size() < config_.population_size) {
        GaCandidate a = select(population);
        GaCandidate b = select(population);
        if (rng_.bernoulli(config_.crossover_rate)) cross(a, b);
        if (rng_.bernoulli(config_.mutation_rate)) mutate_in_place(a);
        if (rng_.bernoulli(config_.mutation_rate)) mutate_in_place(b);
        next.push_back(std::move(a));
        if (next.size() < config_.population_size) next.push_back(std::move(b));
      }
      population = std::move(next);
      rank(population);
    }

    std::vector<GaCandidate> out;
    std::unordered_set<std::string> seen;
    for (GaCandidate& c : population) {
      if (out.size() >= config_.num_candidates) break;
      if (seen.insert(text::to_lower(c.text())).second) out.push_back(std::move(c));
    }
    return out;
  }

 private:
  const std::vector<std::string>& example_tokens(std::size_t skeleton) {
    auto it = examples_.find(skeleton);
    if (it == examples_.end()) {
      std::vector<std::string> tokens;
      for (const auto& t : tagger_.tag(skeletons_[skeleton].example)) tokens.push_back(t.text);
      it = examples_.emplace(skeleton, std::move(tokens)).first;
    }
    return it->second;
  }

  const std::vector<std::string>& vocabulary(const PosTag& tag) {
    auto it = vocab_.find(tag.str());
    if (it == vocab_.end()) it = vocab_.emplace(tag.str(), tagger_.vocabulary(tag)).first;
    return it->second;
  }

  bool fits(const std::string& word, const PosTag& tag) const {
    const auto tokens = tagger_.tag(word);
    return tokens.size() == 1 && tokens.front().tag == tag;
  }

  // The word in the case of `model`, or as given when recasing would
  // change its tag.
  std::optional<std::string> adapt(std::string_view word, std::string_view model, const PosTag& tag) const {
    std::string cased = match_case(word, model);
    if (fits(cased, tag)) return cased;
    std::string plain(word);
    if (fits(plain, tag)) return plain;
    return std::nullopt;
  }

  bool matches_skeleton(const GaCandidate& c) const {
    const auto tagged = tagger_.tag(c.text());
    const auto& seq = skeletons_[c.skeleton].pos_sequence;
    if (tagged.size() != seq.size() || tagged.size() != c.tokens.size()) return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (tagged[i].tag != seq[i] || tagged[i].text != c.tokens[i]) return false;
    }
    return true;
  }

  std::size_t sample_skeleton() {
    double target = rng_.uniform() * total_weight_;
    for (std::size_t idx : compatible_) {
      target -= static_cast<double>(skeletons_[idx].frequency);
      if (target < 0.0) return idx;
    }
    return compatible_.back();
  }

  GaCandidate seed_candidate() {
    GaCandidate c;
    c.skeleton = sample_skeleton();
    const std::vector<std::string>& example = example_tokens(c.skeleton);
    const auto& seq = skeletons_[c.skeleton].pos_sequence;
    std::set<std::string> used;
    for (std::size_t p = 0; p < seq.size(); ++p) {
      const std::string& model = p < example.size() ? example[p] : std::string();
      std::optional<std::string> word;
      if (const auto it = keywords_by_tag_.find(seq[p].str()); it != keywords_by_tag_.end()) {
        std::vector<std::string> pool = it->second;
        rng_.shuffle(std::span<std::string>(pool));
        for (const std::string& k : pool) {
          if (used.count(text::to_lower(k))) continue;
          if ((word = adapt(k, model, seq[p]))) break;
        }
      }
      const std::vector<std::string>& vocab = vocabulary(seq[p]);
      for (std::size_t draw = 0; !word && !vocab.empty() && draw < kVocabularyDraws; ++draw) {
        const std::string& v = vocab[rng_.index(vocab.size())];
        if (!used.count(text::to_lower(v))) word = adapt(v, model, seq[p]);
      }
      if (!word) word = model;
      used.insert(text::to_lower(*word));
      c.tokens.push_back(std::move(*word));
    }
    if (!matches_skeleton(c)) c.tokens = example;
    return c;
  }

  void cross(GaCandidate& a, GaCandidate& b) {
    const auto& sa = skeletons_[a.skeleton].pos_sequence;
    const auto& sb = skeletons_[b.skeleton].pos_sequence;
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < sa.size(); ++i) {
      for (std::size_t j = 0; j < sb.size(); ++j) {
        if (sa[i] == sb[j] && !text::iequals(a.tokens[i], b.tokens[j]) && has_alnum(a.tokens[i])) {
          options.emplace_back(i, j);
        }
      }
    }
    if (options.empty()) return;
    const auto [i, j] = options[rng_.index(options.size())];
    auto [ta, tb] = crossover(a.tokens, b.tokens, i, j);
    GaCandidate ca{std::move(ta), a.skeleton, 0.0};
    GaCandidate cb{std::move(tb), b.skeleton, 0.0};
    if (matches_skeleton(ca)) a = std::move(ca);
    if (matches_skeleton(cb)) b = std::move(cb);
  }

  void mutate_in_place(GaCandidate& c) {
    const auto& seq = skeletons_[c.skeleton].pos_sequence;
    const std::size_t p = rng_.index(seq.size());
    if (!has_alnum(c.tokens[p])) return;
    const auto kw = keywords_by_tag_.find(seq[p].str());
    const std::vector<std::string>& vocab = vocabulary(seq[p]);
    const bool from_keywords = kw != keywords_by_tag_.end() && (vocab.empty() || rng_.bernoulli(0.5));
    const std::vector<std::string>& pool = from_keywords ? kw->second : vocab;
    if (pool.empty()) return;
    const std::string& replacement = pool[rng_.index(pool.size())];
    if (text::iequals(replacement, c.tokens[p])) return;
    if (!adapt(replacement, c.tokens[p], seq[p])) return;
    GaCandidate child{mutate(c.tokens, p, replacement), c.skeleton, 0.0};
    if (!fits(child.tokens[p], seq[p])) child.tokens[p] = replacement;
    if (matches_skeleton(child)) c = std::move(child);
  }

  double fitness(const GaCandidate& c) const {
    const ScoringWeights& w = config_.scoring_weights;
    std::vector<std::string> words;
    for (const std::string& t : c.tokens) {
      if (has_alnum(t)) words.push_back(text::to_lower(t));
    }
    double coverage = 0.0;
    if (!top_keywords_.empty() && !words.empty()) {
      const std::set<std::string> distinct(words.begin(), words.end());
      std::size_t hits = 0;
      for (const std::string& word : distinct) hits += top_keywords_.count(word);
      coverage = static_cast<double>(hits) /
                 static_cast<double>(std::min(top_keywords_.size(), words.size()));
    }
    const std::size_t n = text::word_count(c.text());
    const double length = n >= 3 && n <= 12 ? 1.0 : 0.0;
    const double prior = max_frequency_ == 0
                             ? 0.0
                             : static_cast<double>(skeletons_[c.skeleton].frequency) /
                                   static_cast<double>(max_frequency_);
    double repetition = 0.0;
    if (!words.empty()) {
      const std::set<std::string> distinct(words.begin(), words.end());
      repetition = static_cast<double>(words.size() - distinct.size()) / static_cast<double>(words.size());
    }
    return w.keyword_coverage * coverage + w.length_prior * length + w.skeleton_prior * prior -
           w.repetition_penalty * repetition;
  }

  void rank(std::vector<GaCandidate>& population) const {
    for (GaCandidate& c : population) c.score = fitness(c);
    std::stable_sort(population.begin(), population.end(), [](const GaCandidate& a, const GaCandidate& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.text() < b.text();
    });
  }

  GaCandidate select(const std::vector<GaCandidate>& population) {
    const GaCandidate& a = population[rng_.index(population.size())];
    const GaCandidate& b = population[rng_.index(population.size())];
    return a.score >= b.score ? a : b;
  }

  std::span<const Skeleton> skeletons_;
  const GaConfig& config_;
  const PosTagger& tagger_;
  Rng rng_;
  std::map<std::string, std::vector<std::string>> keywords_by_tag_;
  std::set<std::string> top_keywords_;
  std::vector<std::size_t> compatible_;
  double total_weight_ = 0.0;
  std::size_t max_frequency_ = 0;
  std::map<std::size_t, std::vector<std::string>> examples_;
  std::map<std::string, std::vector<std::string>> vocab_;
};

}  // namespace

void GaConfig::validate() const {
  const auto rate = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!rate(mutation_rate) || !rate(crossover_rate) || !rate(elite_fraction)) {
    throw ValidationError("ga config: rates must lie in [0,1]");
  }
  if (population_size < 2) throw ValidationError("ga config: population_size must be at least 2");
  if (num_candidates == 0) throw ValidationError("ga config: num_candidates must be positive");
}

std::vector<GaCandidate> generate_skeleton_slogans(std::string_view description,
                                                   std::span<const Skeleton> skeletons,
                                                   const GaConfig& config,
                                                   const PosTagger& tagger) {
  config.validate();
  if (skeletons.empty()) throw ValidationError("no-skeleton");
  Evolver evolver(description, skeletons, config, tagger);
  return evolver.run();
}

}  // namespace slogan::baselines
