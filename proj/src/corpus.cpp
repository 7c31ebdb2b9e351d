#include "slogan/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <span>
#include <unordered_set>

#include "slogan/delex.hpp"
#include "slogan/error.hpp"
#include "slogan/rng.hpp"
#include "slogan/text.hpp"

namespace slogan::corpus {

namespace {

// The company mask contains '<' and '>', which are also title separators.
// While the title is cut up the mask travels as this single control byte.
constexpr char kMarker = '\x01';

std::string protect(std::string_view s) {
  return text::replace_all(s, delex::kCompanyMask, std::string(1, kMarker));
}

std::string unprotect(std::string_view s) {
  return text::replace_all(s, std::string(1, kMarker), delex::kCompanyMask);
}

bool keeps(char32_t cp) { return cp == kMarker || text::is_alnum(cp); }

std::string_view strip_edges(std::string_view s) {
  std::size_t begin = 0;
  while (begin < s.size()) {
    const text::CodePoint cp = text::decode_at(s, begin);
    if (keeps(cp.value)) break;
    begin += cp.length;
  }
  std::size_t end = s.size();
  while (end > begin) {
    const text::CodePoint cp = text::decode_before(s, end);
    if (keeps(cp.value)) break;
    end -= cp.length;
  }
  return s.substr(begin, end - begin);
}

// Splits on whitespace-bounded runs of separator characters.
std::vector<std::string> split_chunks(std::string_view title, std::string_view separators) {
  std::vector<std::string> chunks;
  std::vector<std::string> current;
  const auto flush = [&] {
    if (!current.empty()) chunks.push_back(text::join(current, " "));
    current.clear();
  };
  for (std::string_view tok : text::split_whitespace(title)) {
    const bool separator_run = std::all_of(tok.begin(), tok.end(), [&](char c) {
      return separators.find(c) != std::string_view::npos;
    });
    if (separator_run) {
      flush();
    } else {
      current.emplace_back(tok);
    }
  }
  flush();
  return chunks;
}

enum class NameCheck { Clean, Stripped, Middle };

// Removes a leading mask when it is followed by whitespace, the end, or a
// punctuation mark and whitespace ("<company>: Best Coffee").
NameCheck strip_leading_name(std::string& chunk) {
  if (chunk.find(kMarker) == std::string::npos) return NameCheck::Clean;
  if (chunk.front() == kMarker) {
    std::size_t after = 1;
    bool ok = after == chunk.size() || text::is_space(static_cast<unsigned char>(chunk[after]));
    if (!ok) {
      const text::CodePoint cp = text::decode_at(chunk, after);
      const std::size_t next = after + cp.length;
      ok = text::is_punct(cp.value) &&
           (next == chunk.size() || text::is_space(static_cast<unsigned char>(chunk[next])));
    }
    if (ok) {
      chunk = std::string(strip_edges(std::string_view(chunk).substr(1)));
      if (chunk.find(kMarker) == std::string::npos) return NameCheck::Stripped;
    }
  }
  return NameCheck::Middle;
}

bool equals_affix(std::string_view chunk, const std::vector<std::string>& affixes) {
  return std::any_of(affixes.begin(), affixes.end(), [&](const std::string& a) {
    return text::iequals(text::collapse_whitespace(strip_edges(a)), chunk);
  });
}

bool is_joiner_at(std::string_view s, std::size_t pos, std::size_t len) {
  const char32_t cp = text::decode_at(s, pos).value;
  if (cp != '\'' && cp != '-' && cp != 0x2019 && cp != 0x2010) return false;
  if (pos == 0 || pos + len >= s.size()) return false;
  return text::is_alnum(text::decode_before(s, pos).value) &&
         text::is_alnum(text::decode_at(s, pos + len).value);
}

std::vector<std::string> lower_words(std::string_view s) {
  std::vector<std::string> out = text::words(s);
  for (std::string& w : out) w = text::to_lower(w);
  return out;
}

double fraction(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::string_view to_string(Split split) {
  switch (split) {
    case Split::train: return "train";
    case Split::valid: return "valid";
    case Split::test: return "test";
  }
  return "train";
}

Split parse_split(std::string_view name) {
  if (name == "train") return Split::train;
  if (name == "valid" || name == "validation") return Split::valid;
  if (name == "test") return Split::test;
  throw ValidationError("unknown split \"" + std::string(name) + "\"");
}

std::vector<std::string> CleaningConfig::default_blocked_phrases() {
  return {"page could not be loaded", "access to this page is denied",
          "access denied",            "403 forbidden",
          "404 not found",            "page not found",
          "attention required",
          "just a moment",            "site can't be reached",
          "website is under construction", "under construction",
          "coming soon",              "domain for sale",
          "this domain is for sale",  "account suspended",
          "service unavailable",      "502 bad gateway",
          "internal server error",    "error 404",
          "checking your browser",    "index of /",
          "default web site page",    "security check"};
}

std::vector<std::string> CleaningConfig::default_structural_affixes() {
  return {"home",       "homepage",     "home page", "welcome",
          "welcome page", "about us",   "about",     "contact us",
          "main page",  "official site", "official website", "index",
          "start page", "landing page"};
}

void CleaningConfig::validate() const {
  if (min_desc_words == 0 || min_slogan_words == 0 || max_slogan_words == 0 ||
      max_slogan_punct == 0 || min_punct_free_run == 0) {
    throw ValidationError("cleaning config: counts must be positive");
  }
  if (min_slogan_words > max_slogan_words) {
    throw ValidationError("cleaning config: slogan_word_range is inverted");
  }
  if (!(max_gpe_ratio > 0.0 && max_gpe_ratio <= 1.0)) {
    throw ValidationError("cleaning config: max_gpe_ratio must be in (0,1]");
  }
}

int step_of(Rejection reason) {
  switch (reason) {
    case Rejection::InvalidRecord: return 1;
    case Rejection::Empty: return 2;
    case Rejection::Blocked: return 3;
    case Rejection::NameInMiddle: return 5;
    case Rejection::NoChunk: return 5;
    case Rejection::Duplicate: return 6;
    case Rejection::Length: return 7;
    case Rejection::NonEnglish: return 8;
    case Rejection::Punctuation: return 9;
    case Rejection::GpeRatio: return 10;
  }
  return 0;
}

std::string_view to_string(Rejection reason) {
  switch (reason) {
    case Rejection::InvalidRecord: return "invalid-record";
    case Rejection::Empty: return "empty";
    case Rejection::Blocked: return "blocked";
    case Rejection::NameInMiddle: return "name-in-middle";
    case Rejection::NoChunk: return "no-chunk";
    case Rejection::Duplicate: return "duplicate";
    case Rejection::Length: return "length";
    case Rejection::NonEnglish: return "non-english";
    case Rejection::Punctuation: return "punctuation";
    case Rejection::GpeRatio: return "gpe-ratio";
  }
  return "unknown";
}

std::variant<std::string, Rejection> extract_title_slogan(
    std::string_view company_name, std::string_view delexicalised_title,
    const CleaningConfig& config) {
  const std::string title = protect(delexicalised_title);
  const std::string_view stripped = strip_edges(title);
  if (stripped.empty()) return Rejection::Empty;

  for (const std::string& phrase : config.blocked_phrases) {
    if (!phrase.empty() && text::contains_ci(unprotect(stripped), phrase)) {
      return Rejection::Blocked;
    }
  }

  bool saw_name = false;
  std::string best;
  for (const std::string& raw : split_chunks(stripped, config.separator_chars)) {
    std::string chunk(strip_edges(raw));
    if (chunk.empty() || equals_affix(chunk, config.structural_affixes)) continue;
    const NameCheck check = strip_leading_name(chunk);
    if (check == NameCheck::Middle) {
      saw_name = true;
      continue;
    }
    if (chunk.empty() || equals_affix(chunk, config.structural_affixes)) continue;

    // A shorter prefix of the name may still hide in the chunk.
    bool rejected = false;
    for (;;) {
      const delex::DelexResult again =
          delex::delexicalise_company(company_name, unprotect(chunk));
      if (!again.matched) break;
      chunk = protect(again.text);
      if (strip_leading_name(chunk) == NameCheck::Middle || chunk.empty()) {
        rejected = true;
        break;
      }
    }
    if (!rejected && !company_name.empty() &&
        text::contains_ci(chunk, text::collapse_whitespace(company_name))) {
      rejected = true;
    }
    if (rejected) {
      saw_name = true;
      continue;
    }
    if (chunk.size() > best.size()) best = std::move(chunk);
  }
  if (best.empty()) return saw_name ? Rejection::NameInMiddle : Rejection::NoChunk;
  return unprotect(best);
}

std::variant<std::string, Rejection> extract_title_slogan(const CompanyRecord& record,
                                                          const CleaningConfig& config) {
  const delex::DelexResult title = delex::delexicalise_company(record.company_name, record.raw_title);
  return extract_title_slogan(record.company_name, title.text, config);
}

std::size_t punctuation_count(std::string_view s) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const text::CodePoint cp = text::decode_at(s, pos);
    if (text::is_punct(cp.value) && !is_joiner_at(s, pos, cp.length)) ++count;
    pos += cp.length;
  }
  return count;
}

std::size_t longest_punct_free_run(std::string_view s) {
  std::size_t best = 0;
  std::size_t segment_start = 0;
  std::size_t pos = 0;
  const auto close = [&](std::size_t end) {
    best = std::max(best, text::word_count(s.substr(segment_start, end - segment_start)));
  };
  while (pos < s.size()) {
    const text::CodePoint cp = text::decode_at(s, pos);
    if (text::is_punct(cp.value) && !is_joiner_at(s, pos, cp.length)) {
      close(pos);
      segment_start = pos + cp.length;
    }
    pos += cp.length;
  }
  close(s.size());
  return best;
}

double gpe_ratio(std::string_view slogan, const annotate::EntityTagger& tagger) {
  if (slogan.empty()) return 0.0;
  std::size_t covered = 0;
  for (const annotate::NamedEntity& e : tagger.entities(slogan)) {
    if (e.label == "GPE") covered += e.end - e.start;
  }
  return fraction(covered, slogan.size());
}

CleanResult clean_pipeline(const std::vector<CompanyRecord>& records,
                           const CleaningConfig& config,
                           const annotate::EntityTagger& tagger,
                           const annotate::LanguageDetector& language) {
  config.validate();
  CleanResult result;
  std::unordered_set<std::string> seen_slogans;
  for (const CompanyRecord& record : records) {
    const auto reject = [&](Rejection r) { result.rejections.push_back({record.id, r}); };
    if (text::trim(record.company_name).empty()) {
      reject(Rejection::InvalidRecord);
      continue;
    }
    auto extracted = extract_title_slogan(record, config);
    if (const Rejection* r = std::get_if<Rejection>(&extracted)) {
      reject(*r);
      continue;
    }
    std::string slogan = text::collapse_whitespace(std::get<std::string>(extracted));

    if (!seen_slogans.insert(text::to_lower(slogan)).second) {
      reject(Rejection::Duplicate);
      continue;
    }
    const std::size_t slogan_words = text::word_count(slogan);
    if (slogan_words < config.min_slogan_words || slogan_words > config.max_slogan_words ||
        text::word_count(record.raw_description) < config.min_desc_words) {
      reject(Rejection::Length);
      continue;
    }
    if (!language.is_english(record.raw_description + " " + slogan)) {
      reject(Rejection::NonEnglish);
      continue;
    }
    if (punctuation_count(slogan) > config.max_slogan_punct ||
        longest_punct_free_run(slogan) < config.min_punct_free_run) {
      reject(Rejection::Punctuation);
      continue;
    }
    if (gpe_ratio(slogan, tagger) > config.max_gpe_ratio) {
      reject(Rejection::GpeRatio);
      continue;
    }
    result.pairs.push_back({record.id, record.company_name, record.raw_description,
                            std::move(slogan), Split::train, record.industry});
  }
  return result;
}

Partition split_dataset(std::vector<SloganPair> pairs, double valid_fraction,
                        double test_fraction, std::uint64_t seed) {
  if (!(valid_fraction > 0.0 && valid_fraction < 0.5) ||
      !(test_fraction > 0.0 && test_fraction < 0.5) ||
      valid_fraction + test_fraction >= 1.0) {
    throw ValidationError("split fractions must lie in (0,0.5)");
  }
  if (pairs.size() < 3) throw ValidationError("too-small");

  const std::size_t n = pairs.size();
  const auto n_valid = static_cast<std::size_t>(std::llround(static_cast<double>(n) * valid_fraction));
  const auto n_test = static_cast<std::size_t>(std::llround(static_cast<double>(n) * test_fraction));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));

  std::vector<Split> assigned(n, Split::train);
  for (std::size_t i = 0; i < n_valid; ++i) assigned[order[i]] = Split::valid;
  for (std::size_t i = n_valid; i < n_valid + n_test; ++i) assigned[order[i]] = Split::test;

  Partition part;
  for (std::size_t i = 0; i < n; ++i) {
    pairs[i].split = assigned[i];
    switch (assigned[i]) {
      case Split::train: part.train.push_back(std::move(pairs[i])); break;
      case Split::valid: part.valid.push_back(std::move(pairs[i])); break;
      case Split::test: part.test.push_back(std::move(pairs[i])); break;
    }
  }
  return part;
}

double unigram_overlap(std::string_view slogan, std::string_view description) {
  const std::vector<std::string> slogan_words = lower_words(slogan);
  if (slogan_words.empty()) return 0.0;
  const std::vector<std::string> desc_list = lower_words(description);
  const std::unordered_set<std::string> desc_words(desc_list.begin(), desc_list.end());
  const auto hits = static_cast<std::size_t>(std::count_if(
      slogan_words.begin(), slogan_words.end(),
      [&](const std::string& w) { return desc_words.count(w) > 0; }));
  return fraction(hits, slogan_words.size());
}

CorpusStats compute_corpus_stats(const std::vector<SloganPair>& pairs,
                                 const annotate::EntityTagger& tagger) {
  if (pairs.empty()) throw ValidationError("stats: empty corpus");
  CorpusStats stats;
  stats.size = pairs.size();

  std::size_t in_desc = 0;
  std::size_t with_company = 0;
  double overlap_sum = 0.0;
  struct Counts {
    std::size_t desc = 0, slogan = 0, slogan_minus_desc = 0;
  };
  std::map<std::string, Counts> entity_counts;

  for (const SloganPair& p : pairs) {
    if (text::to_lower(p.description).find(text::to_lower(text::trim(p.slogan))) !=
        std::string::npos) {
      ++in_desc;
    }
    overlap_sum += unigram_overlap(p.slogan, p.description);
    if (delex::delexicalise_company(p.company_name, p.description).matched) ++with_company;

    std::set<std::string> desc_labels;
    std::set<std::string> slogan_labels;
    std::set<std::string> novel_labels;
    for (const annotate::NamedEntity& e : tagger.entities(p.description)) {
      desc_labels.insert(e.label);
    }
    for (const annotate::NamedEntity& e : tagger.entities(p.slogan)) {
      slogan_labels.insert(e.label);
      const std::string_view surface =
          std::string_view(p.slogan).substr(e.start, e.end - e.start);
      if (!text::contains_ci(p.description, surface)) novel_labels.insert(e.label);
    }
    for (const std::string& l : desc_labels) ++entity_counts[l].desc;
    for (const std::string& l : slogan_labels) ++entity_counts[l].slogan;
    for (const std::string& l : novel_labels) ++entity_counts[l].slogan_minus_desc;

    ++stats.industry_histogram[p.industry.value_or("unknown")];
    ++stats.slogan_length_histogram[text::word_count(p.slogan)];
    ++stats.description_length_histogram[text::word_count(p.description)];
  }

  const std::size_t n = pairs.size();
  stats.pct_slogan_in_desc = fraction(in_desc, n);
  stats.pct_unigram_overlap = overlap_sum / static_cast<double>(n);
  stats.pct_desc_with_company = fraction(with_company, n);
  for (const auto& [label, c] : entity_counts) {
    stats.entity_type_table[label] = {fraction(c.desc, n), fraction(c.slogan, n),
                                      fraction(c.slogan_minus_desc, n)};
  }
  return stats;
}

CompanyRecord record_from_json(const io::Json& row, std::size_t line_index) {
  if (!row.is_object()) throw ValidationError("company record must be a JSON object");
  CompanyRecord r;
  r.id = io::optional_string(row, "id", "rec-" + std::to_string(line_index));
  r.company_name = io::require_string(row, "company_name");
  r.url = io::optional_string(row, "url");
  if (row.contains("industry") && row["industry"].is_string()) {
    r.industry = row["industry"].get<std::string>();
  }
  r.raw_title = io::require_string(row, "raw_title");
  r.raw_description = io::require_string(row, "raw_description");
  return r;
}

SloganPair pair_from_json(const io::Json& row) {
  if (!row.is_object()) throw ValidationError("slogan pair must be a JSON object");
  SloganPair p;
  p.id = io::require_string(row, "id");
  p.company_name = io::optional_string(row, "company_name");
  p.description = io::require_string(row, "description");
  p.slogan = io::require_string(row, "slogan");
  p.split = parse_split(io::optional_string(row, "split", "train"));
  if (row.contains("industry") && row["industry"].is_string()) {
    p.industry = row["industry"].get<std::string>();
  }
  return p;
}

io::Json to_json(const SloganPair& p) {
  io::Json j{{"id", p.id},
             {"company_name", p.company_name},
             {"description", p.description},
             {"slogan", p.slogan},
             {"split", std::string(to_string(p.split))}};
  j["industry"] = p.industry ? io::Json(*p.industry) : io::Json(nullptr);
  return j;
}

io::Json to_json(const RejectionEntry& e) {
  return {{"id", e.id}, {"step", step_of(e.reason)}, {"reason", std::string(to_string(e.reason))}};
}

io::Json to_json(const CorpusStats& s) {
  io::Json entities = io::Json::object();
  for (const auto& [label, row] : s.entity_type_table) {
    entities[label] = {{"pct_desc", row.pct_desc},
                       {"pct_slogan", row.pct_slogan},
                       {"pct_slogan_minus_desc", row.pct_slogan_minus_desc}};
  }
  const auto histogram = [](const std::map<std::size_t, std::size_t>& h) {
    io::Json j = io::Json::object();
    for (const auto& [len, count] : h) j[std::to_string(len)] = count;
    return j;
  };
  return {{"size", s.size},
          {"pct_slogan_in_desc", s.pct_slogan_in_desc},
          {"pct_unigram_overlap", s.pct_unigram_overlap},
          {"pct_desc_with_company", s.pct_desc_with_company},
          {"entity_type_table", entities},
          {"industry_histogram", s.industry_histogram},
          {"length_histograms",
           {{"slogan", histogram(s.slogan_length_histogram)},
            {"description", histogram(s.description_length_histogram)}}}};
}

CleaningConfig cleaning_config_from_json(const io::Json& json) {
  CleaningConfig c;
  if (!json.is_object()) return c;
  try {
    if (json.contains("blocked_phrases")) c.blocked_phrases = json["blocked_phrases"].get<std::vector<std::string>>();
    if (json.contains("structural_affixes")) c.structural_affixes = json["structural_affixes"].get<std::vector<std::string>>();
    if (json.contains("separator_chars")) {
      const io::Json& sep = json["separator_chars"];
      c.separator_chars = sep.is_array() ? text::join(sep.get<std::vector<std::string>>(), "")
                                         : sep.get<std::string>();
    }
    if (json.contains("min_desc_words")) c.min_desc_words = json["min_desc_words"].get<std::size_t>();
    if (json.contains("slogan_word_range")) {
      const auto range = json["slogan_word_range"].get<std::vector<std::size_t>>();
      if (range.size() != 2) throw ValidationError("slogan_word_range needs two values");
      c.min_slogan_words = range[0];
      c.max_slogan_words = range[1];
    }
    if (json.contains("max_slogan_punct")) c.max_slogan_punct = json["max_slogan_punct"].get<std::size_t>();
    if (json.contains("min_punct_free_run")) c.min_punct_free_run = json["min_punct_free_run"].get<std::size_t>();
    if (json.contains("max_gpe_ratio")) c.max_gpe_ratio = json["max_gpe_ratio"].get<double>();
  } catch (const io::Json::exception& e) {
    throw ValidationError(std::string("cleaning config: ") + e.what());
  }
  c.validate();
  return c;
}

}  // namespace slogan::corpus
