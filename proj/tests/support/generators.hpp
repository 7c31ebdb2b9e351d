#pragma once

// Random inputs for the roundtrip property suites.

#include <random>
#include <string>
#include <vector>

#include "slogan/entmask.hpp"

namespace gen {

inline const std::vector<std::string>& filler() {
  static const std::vector<std::string> words{
      "we",   "build", "the",  "best",    "coffee", "for",   "teams", "and",  "families", "every",
      "day",  "with",  "care", "quality", "in",     "town,", "fresh", "fast", "smart",    "(new)",
      "tools", "since", "our",  "home.",  "a",      "of",    "more",  "love", "-",        "great"};
  return words;
}

inline std::string pick(std::mt19937& rng, const std::vector<std::string>& pool) {
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

inline std::size_t between(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::string recase(std::mt19937& rng, std::string w) {
  switch (between(rng, 0, 2)) {
    case 0:
      for (char& c : w) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    case 1:
      for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      break;
    default:
      break;
  }
  return w;
}

struct DelexCase {
  std::string company;
  std::string text;
};

// A company name of one to three words and a text that mentions some
// prefix of it zero or more times, in varied casing and punctuation.
inline DelexCase delex_case(std::mt19937& rng) {
  static const std::vector<std::string> parts{"Zorvex", "Quillan", "Brightmoor", "Tandem", "Okapi",
                                              "Lumora", "Group",   "Labs",       "Inc.",   "Plc"};
  DelexCase c;
  std::vector<std::string> name;
  for (std::size_t i = between(rng, 1, 3); i > 0; --i) name.push_back(pick(rng, parts));
  for (std::size_t i = 0; i < name.size(); ++i) c.company += (i ? " " : "") + name[i];
  const std::size_t words = between(rng, 3, 15);
  for (std::size_t i = 0; i < words; ++i) {
    std::string w;
    if (between(rng, 0, 5) == 0) {
      const std::size_t len = between(rng, 1, name.size());
      for (std::size_t k = 0; k < len; ++k) w += (k ? " " : "") + recase(rng, name[k]);
      if (between(rng, 0, 3) == 0) w += pick(rng, {",", "'s", ".", ":"});
    } else {
      w = pick(rng, filler());
    }
    c.text += (i ? " " : "") + w;
  }
  return c;
}

struct MaskCase {
  std::string description;
  std::string slogan;
  std::vector<slogan::entmask::EntitySpan> description_spans;
  std::vector<slogan::entmask::EntitySpan> slogan_spans;
};

// Entity surfaces within a type never contain one another, so distinct
// surfaces always receive distinct tokens.
inline MaskCase mask_case(std::mt19937& rng) {
  using slogan::entmask::EntityType;
  static const std::vector<std::pair<std::string, EntityType>> entities{
      {"Oslo", EntityType::GPE},         {"Nairobi", EntityType::GPE},       {"Lisbon", EntityType::GPE},
      {"1999", EntityType::DATE},        {"March 2010", EntityType::DATE},   {"250", EntityType::CARDINAL},
      {"Alps", EntityType::LOCATION},    {"John Smith", EntityType::PERSON}, {"Maria Garcia", EntityType::PERSON},
      {"Belgian", EntityType::NORP},     {"Swedish", EntityType::NORP},      {"seven", EntityType::CARDINAL}};
  MaskCase c;
  const auto build = [&](std::string& text, std::vector<slogan::entmask::EntitySpan>& spans, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) {
      if (i) text += ' ';
      if (between(rng, 0, 3) == 0) {
        const auto& [surface, type] = entities[between(rng, 0, entities.size() - 1)];
        spans.push_back({text.size(), text.size() + surface.size(), surface, type});
        text += surface;
      } else {
        text += pick(rng, filler());
      }
    }
  };
  build(c.description, c.description_spans, between(rng, 1, 20));
  build(c.slogan, c.slogan_spans, between(rng, 0, 8));
  return c;
}

// Text mixing words, stop words, legal and broken mask tokens.
inline std::string repair_case(std::mt19937& rng) {
  static const std::vector<std::string> pieces{
      "[country]", "[country1]", "[date]",   "[person2]", "[national]", "[GPE]",  "[]",    "[country",
      "[date",     "[coun",      "[number]", "]",         "[",          "from",   "the",   "in",
      "of",        "Best",       "Coffee",   "Lawyers",   "at",         "[x1]",   "[[date]]", "town]"};
  std::string out;
  for (std::size_t i = between(rng, 0, 12); i > 0; --i) {
    if (!out.empty() && between(rng, 0, 4) != 0) out += ' ';
    out += pick(rng, pieces);
  }
  return out;
}

inline slogan::entmask::MaskMap random_map(std::mt19937& rng) {
  static const std::vector<std::string> tokens{"[country]", "[country1]", "[date]", "[person2]", "[number]"};
  slogan::entmask::MaskMap m;
  for (const auto& t : tokens) {
    if (between(rng, 0, 1) == 0) {
      m.reverse[t] = "surface of " + t.substr(1, t.size() - 2);
      m.forward[m.reverse[t]] = t;
    }
  }
  return m;
}

inline slogan::entmask::MaskedRecord filter_case(std::mt19937& rng, std::size_t index) {
  static const std::vector<std::string> tokens{"[country]", "[country1]", "[date]", "[person]", "[national]"};
  slogan::entmask::MaskedRecord r;
  r.id = "r" + std::to_string(index);
  r.split = pick(rng, {"train", "train", "valid", "test"});
  r.masked_description = "About us";
  for (std::size_t i = between(rng, 0, 3); i > 0; --i) r.masked_description += " near " + pick(rng, tokens);
  r.masked_slogan = "Slogan";
  for (std::size_t i = between(rng, 0, 2); i > 0; --i) r.masked_slogan += " in " + pick(rng, tokens);
  return r;
}

}  // namespace gen
