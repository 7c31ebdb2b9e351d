#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slogan/annotate.hpp"

namespace slogan::entmask {

// The six entity types that get masked. ORG is deliberately absent.
enum class EntityType { GPE, DATE, CARDINAL, LOCATION, PERSON, NORP };

inline constexpr EntityType kMaskedTypes[] = {
    EntityType::GPE,    EntityType::DATE,   EntityType::CARDINAL,
    EntityType::LOCATION, EntityType::PERSON, EntityType::NORP};

std::string_view to_string(EntityType type);
// Single lowercase word used inside the mask token: GPE -> "country".
std::string_view mask_word(EntityType type);
// Accepts GPE, DATE, CARDINAL, LOC/LOCATION, PERSON/PER, NORP. Any other
// label (ORG, PRODUCT, ...) yields nullopt.
std::optional<EntityType> type_from_label(std::string_view label);

struct EntitySpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;
  EntityType type = EntityType::GPE;
};

struct MaskMap {
  std::map<std::string, std::string> forward;  // surface -> token
  std::map<std::string, std::string> reverse;  // token -> surface
  std::map<EntityType, int> counters;          // ids minted per type

  bool has_token(std::string_view token) const {
    return reverse.find(std::string(token)) != reverse.end();
  }
  bool empty() const { return reverse.empty(); }
};

// Incremental id assignment for one (description, slogan) pair. A new span
// reuses the token of the earliest prior same-type entity when either
// surface is a case-insensitive substring of the other; otherwise a fresh
// token is minted: "[word]" for the first of a type, then "[word1]", ...
class EntityIdAssigner {
 public:
  std::string assign(const EntitySpan& span);
  const MaskMap& map() const noexcept { return map_; }
  MaskMap release() && { return std::move(map_); }

 private:
  struct Seen {
    std::string surface;
    EntityType type;
    std::string token;
  };
  std::vector<Seen> seen_;
  MaskMap map_;
};

MaskMap assign_entity_ids(std::span<const EntitySpan> spans);

struct MaskedPair {
  std::string masked_description;
  std::string masked_slogan;
  MaskMap map;
};

// Replaces every span by its token. Description spans are numbered first.
// Spans must lie inside their text and match its slice; overlapping spans
// raise ValidationError("overlap").
MaskedPair mask_pair(std::string_view description, std::string_view slogan,
                     std::vector<EntitySpan> description_spans,
                     std::vector<EntitySpan> slogan_spans);

// Runs `tagger` and keeps the spans of the six masked types, dropping any
// that overlap an earlier kept span.
std::vector<EntitySpan> masked_entity_spans(std::string_view text,
                                            const annotate::EntityTagger& tagger);

// Token grammar: "[" word [positive integer] "]" with word one of the six
// mask words.
bool is_legal_mask_token(std::string_view token);
// True when `text` begins with a legal mask token.
bool starts_with_mask_token(std::string_view text);
// Every legal mask token occurring in `text`.
std::set<std::string> mask_tokens_in(std::string_view text);

// Completes a missing ']' on "[word" fragments, then drops every bracketed
// token that is illegal or absent from map.reverse together with the stop
// words right before it, and collapses whitespace. Idempotent.
std::string repair_mask_tokens(std::string_view text, const MaskMap& map);

// Substitutes tokens via map.reverse. An unknown token is a defect (repair
// must run first) and raises std::logic_error.
std::string unmask_slogan(std::string_view text, const MaskMap& map);

// Stop words removed in front of a dropped token.
bool is_repair_stopword(std::string_view lowercase_word);

// One row of the masked-pair file.
struct MaskedRecord {
  std::string id;
  std::string split;  // train / valid / test
  std::string masked_description;
  std::string masked_slogan;
  std::map<std::string, std::string> reverse_map;
  std::string company_surface;
};

// Drops train-split rows whose slogan carries a mask token missing from the
// description. Other splits pass through untouched.
std::vector<MaskedRecord> filter_hallucination_pairs(std::vector<MaskedRecord> rows);

}  // namespace slogan::entmask
