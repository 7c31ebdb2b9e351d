#include <algorithm>
#include <array>

#include "slogan/annotate.hpp"
#include "slogan/entmask.hpp"
#include "slogan/error.hpp"
#include "slogan/text.hpp"

namespace slogan::annotate {

std::string_view to_string(ControlCode code) {
  switch (code) {
    case ControlCode::NN: return "NN";
    case ControlCode::JJ: return "JJ";
    case ControlCode::VB: return "VB";
    case ControlCode::DT: return "DT";
    case ControlCode::PR: return "PR";
    case ControlCode::OTHER: return "OTHER";
    case ControlCode::ENT: return "ENT";
  }
  return "OTHER";
}

std::optional<ControlCode> parse_control_code(std::string_view name) {
  for (ControlCode code : {ControlCode::NN, ControlCode::JJ, ControlCode::VB,
                           ControlCode::DT, ControlCode::PR, ControlCode::OTHER,
                           ControlCode::ENT}) {
    if (text::iequals(name, to_string(code))) return code;
  }
  return std::nullopt;
}

bool PosTag::is_known() const {
  static constexpr std::array<std::string_view, 45> kInventory = {
      "CC",  "CD",  "DT",   "EX",   "FW",   "IN",    "JJ",    "JJR", "JJS",
      "LS",  "MD",  "NN",   "NNS",  "NNP",  "NNPS",  "PDT",   "POS", "PRP",
      "PRP$", "RB", "RBR",  "RBS",  "RP",   "SYM",   "TO",    "UH",  "VB",
      "VBD", "VBG", "VBN",  "VBP",  "VBZ",  "WDT",   "WP",    "WP$", "WRB",
      "$",   "#",   "``",   "''",   "-LRB-", "-RRB-", ",",    ".",   ":"};
  for (std::string_view t : kInventory) {
    if (t == tag_) return true;
  }
  return false;
}

ControlCode coarse_pos(const PosTag& tag) {
  const std::string& t = tag.str();
  if (t.starts_with("NN")) return ControlCode::NN;
  if (t.starts_with("JJ") || t.starts_with("RB")) return ControlCode::JJ;
  if (t.starts_with("VB")) return ControlCode::VB;
  if (t == "DT") return ControlCode::DT;
  if (t == "PRP" || t == "PRP$") return ControlCode::PR;
  return ControlCode::OTHER;
}

ControlCode derive_control_code(std::string_view slogan, const PosTagger& tagger) {
  const std::string_view trimmed = text::trim(slogan);
  if (trimmed.empty()) throw ValidationError("empty");
  if (entmask::starts_with_mask_token(trimmed)) return ControlCode::ENT;
  const std::vector<TaggedToken> tokens = tagger.tag(trimmed);
  if (tokens.empty()) throw ValidationError("empty");
  // Leading quotes or bullets are not the first word.
  for (const TaggedToken& token : tokens) {
    const bool wordlike = std::any_of(token.text.begin(), token.text.end(), [](char c) {
      return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
             static_cast<unsigned char>(c) >= 0x80;
    });
    if (wordlike) return coarse_pos(token.tag);
  }
  return coarse_pos(tokens.front().tag);
}

}  // namespace slogan::annotate
