#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace slogan::annotate {

// Syntactic control code: coarse POS class of a slogan's first word.
enum class ControlCode { NN, JJ, VB, DT, PR, OTHER, ENT };

inline constexpr ControlCode kSyntacticCodes[] = {
    ControlCode::NN, ControlCode::JJ, ControlCode::VB,
    ControlCode::DT, ControlCode::PR, ControlCode::OTHER};

std::string_view to_string(ControlCode code);
std::optional<ControlCode> parse_control_code(std::string_view name);

// Penn Treebank tag. Construction never fails; is_known() reports whether
// the tag belongs to the PTB inventory.
class PosTag {
 public:
  PosTag() = default;
  explicit PosTag(std::string tag) : tag_(std::move(tag)) {}

  const std::string& str() const noexcept { return tag_; }
  bool is_known() const;

  friend auto operator<=>(const PosTag&, const PosTag&) = default;

 private:
  std::string tag_;
};

struct TaggedToken {
  std::string text;
  PosTag tag;
  std::size_t offset = 0;  // byte offset into the tagged text
};

struct NamedEntity {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string label;  // OntoNotes-style label, e.g. GPE, DATE, ORG
};

class PosTagger {
 public:
  virtual ~PosTagger() = default;
  virtual std::vector<TaggedToken> tag(std::string_view text) const = 0;
  // Known words carrying `tag`, used to fill skeleton slots. Optional.
  virtual std::vector<std::string> vocabulary(const PosTag& /*tag*/) const {
    return {};
  }
};

class EntityTagger {
 public:
  virtual ~EntityTagger() = default;
  virtual std::vector<NamedEntity> entities(std::string_view text) const = 0;
};

class LanguageDetector {
 public:
  virtual ~LanguageDetector() = default;
  virtual bool is_english(std::string_view text) const = 0;
};

// Context-free lexicon tagger: a word's tag depends only on the word.
// Lookup order: mask tokens, punctuation, numbers, lexicon (case-folded),
// suffix rules, title case -> NNP, default NN.
class LexiconPosTagger final : public PosTagger {
 public:
  LexiconPosTagger();

  std::vector<TaggedToken> tag(std::string_view text) const override;
  std::vector<std::string> vocabulary(const PosTag& tag) const override;

  PosTag tag_word(std::string_view word) const;
  std::size_t lexicon_size() const { return lexicon_.size(); }

 private:
  std::unordered_map<std::string, std::string> lexicon_;
  std::unordered_map<std::string, std::vector<std::string>> by_tag_;
};

// Splits text into tagger tokens: whitespace chunks with edge punctuation
// peeled off; a leading entity mask token ("[country]'s") stays whole.
std::vector<std::pair<std::string, std::size_t>> pos_tokens(std::string_view text);

// Gazetteer/regex named-entity recogniser for GPE, LOC, NORP, DATE,
// CARDINAL and PERSON. Deterministic; intended as a test oracle rather than
// a production tagger.
class GazetteerEntityTagger final : public EntityTagger {
 public:
  GazetteerEntityTagger();
  std::vector<NamedEntity> entities(std::string_view text) const override;

 private:
  struct Entry {
    std::vector<std::string> words;
    std::string label;
  };
  std::unordered_map<std::string, std::vector<Entry>> by_first_word_;
  std::unordered_set<std::string> given_names_;
};

// Approximates a language identifier: English when the share of English
// stop words among the words of the text reaches `threshold`.
class StopwordLanguageDetector final : public LanguageDetector {
 public:
  explicit StopwordLanguageDetector(double threshold = 0.12)
      : threshold_(threshold) {}

  bool is_english(std::string_view text) const override;
  double stopword_ratio(std::string_view text) const;

 private:
  double threshold_;
};

bool is_english_stopword(std::string_view lowercase_word);

ControlCode coarse_pos(const PosTag& tag);

// ENT when the slogan starts with an entity mask token, otherwise the
// coarse POS of the first word. Throws ValidationError("empty").
ControlCode derive_control_code(std::string_view slogan, const PosTagger& tagger);

}  // namespace slogan::annotate
