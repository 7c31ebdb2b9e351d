#include <gtest/gtest.h>

#include <algorithm>

#include "../support/generators.hpp"
#include "slogan/annotate.hpp"
#include "slogan/delex.hpp"
#include "slogan/entmask.hpp"
#include "slogan/jsonl.hpp"
#include "slogan/text.hpp"

using namespace slogan;

namespace {

constexpr int kCases = 1000;

bool mask_touches_alnum(const std::string& text) {
  const std::string_view mask = delex::kCompanyMask;
  for (std::size_t at = text.find(mask); at != std::string::npos; at = text.find(mask, at + 1)) {
    if (at > 0 && std::isalnum(static_cast<unsigned char>(text[at - 1]))) return true;
    const std::size_t end = at + mask.size();
    if (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end]))) return true;
  }
  return false;
}

bool contains_word_ci(const std::string& text, const std::string& needle) {
  const std::string hay = text::to_lower(text);
  const std::string lowered = text::to_lower(needle);
  const auto alnum = [&](std::size_t i) { return std::isalnum(static_cast<unsigned char>(hay[i])) != 0; };
  for (std::size_t at = hay.find(lowered); at != std::string::npos; at = hay.find(lowered, at + 1)) {
    const std::size_t end = at + lowered.size();
    if ((at == 0 || !alnum(at - 1)) && (end >= hay.size() || !alnum(end))) return true;
  }
  return false;
}

}  // namespace

TEST(Property, DelexRelexRoundTrip) {
  std::mt19937 rng(2024);
  int matched = 0;
  for (int i = 0; i < kCases; ++i) {
    const gen::DelexCase c = gen::delex_case(rng);
    const delex::DelexResult r = delex::delexicalise_company(c.company, c.text);
    if (!r.matched) {
      EXPECT_EQ(r.text, c.text);
      continue;
    }
    ++matched;
    EXPECT_EQ(text::to_lower(delex::relexicalise(r.text, r.surface_form)), text::to_lower(c.text))
        << c.company << " | " << c.text;
    EXPECT_FALSE(contains_word_ci(r.text, r.surface_form)) << c.company << " | " << c.text;
    EXPECT_FALSE(mask_touches_alnum(r.text)) << r.text;
  }
  EXPECT_GT(matched, kCases / 2);
}

TEST(Property, MaskUnmaskRoundTrip) {
  std::mt19937 rng(7);
  for (int i = 0; i < kCases; ++i) {
    const gen::MaskCase c = gen::mask_case(rng);
    const entmask::MaskedPair p =
        entmask::mask_pair(c.description, c.slogan, c.description_spans, c.slogan_spans);
    EXPECT_EQ(entmask::unmask_slogan(p.masked_slogan, p.map), c.slogan);
    EXPECT_EQ(entmask::unmask_slogan(p.masked_description, p.map), c.description);
    for (const std::string& token : entmask::mask_tokens_in(p.masked_slogan)) {
      EXPECT_TRUE(p.map.has_token(token));
    }
  }
}

TEST(Property, MaskUnmaskRoundTripWithBuiltInTagger) {
  const annotate::GazetteerEntityTagger tagger;
  for (const io::Json& row : io::read_jsonl(std::string(SLOGAN_FIXTURES) + "/e2e_pairs.jsonl")) {
    const std::string desc = row["description"];
    const std::string slogan = row["slogan"];
    const entmask::MaskedPair p = entmask::mask_pair(desc, slogan, entmask::masked_entity_spans(desc, tagger),
                                                     entmask::masked_entity_spans(slogan, tagger));
    EXPECT_EQ(entmask::unmask_slogan(p.masked_slogan, p.map), slogan);
    EXPECT_EQ(entmask::unmask_slogan(p.masked_description, p.map), desc);
  }
}

TEST(Property, RepairIsIdempotentAndLeavesOnlyKnownTokens) {
  std::mt19937 rng(99);
  for (int i = 0; i < kCases; ++i) {
    const std::string input = gen::repair_case(rng);
    const entmask::MaskMap map = gen::random_map(rng);
    const std::string once = entmask::repair_mask_tokens(input, map);
    EXPECT_EQ(entmask::repair_mask_tokens(once, map), once) << input;
    EXPECT_NO_THROW(entmask::unmask_slogan(once, map)) << input << " -> " << once;
    for (const std::string& token : entmask::mask_tokens_in(once)) EXPECT_TRUE(map.has_token(token));
  }
}

TEST(Property, FilterKeepsOnlyGroundedTrainPairs) {
  std::mt19937 rng(5);
  std::vector<entmask::MaskedRecord> rows;
  for (int i = 0; i < kCases; ++i) rows.push_back(gen::filter_case(rng, static_cast<std::size_t>(i)));
  const auto kept = entmask::filter_hallucination_pairs(rows);
  std::size_t cursor = 0;
  for (const auto& r : kept) {
    if (r.split == "train") {
      const auto desc = entmask::mask_tokens_in(r.masked_description);
      for (const std::string& t : entmask::mask_tokens_in(r.masked_slogan)) EXPECT_TRUE(desc.count(t)) << r.id;
    }
    while (cursor < rows.size() && rows[cursor].id != r.id) {
      EXPECT_EQ(rows[cursor].split, "train") << "dropped a non-train row";
      ++cursor;
    }
    ASSERT_LT(cursor, rows.size());
    ++cursor;
  }
  EXPECT_LT(kept.size(), rows.size());
}
