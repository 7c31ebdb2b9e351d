#pragma once

#include <string>
#include <string_view>

namespace slogan::delex {

inline constexpr std::string_view kCompanyMask = "<company>";

struct DelexResult {
  std::string text;
  // Matched prefix of the company name, with the casing found in the text.
  std::string surface_form;
  bool matched = false;
};

// Replaces the longest word-prefix of `company_name` found in `text`.
//
// Prefixes are tried from the full name down to its first word; the first
// one present (case-insensitive, on word boundaries) wins and every
// occurrence of it is replaced by `mask_token`. Trailing punctuation of a
// prefix ("Acme," / "Inc.") is ignored when matching.
DelexResult delexicalise_company(std::string_view company_name,
                                 std::string_view text,
                                 std::string_view mask_token = kCompanyMask);

// Inverse substitution. Throws ValidationError("no-surface") when the mask
// occurs in `text` but `surface_form` is empty.
std::string relexicalise(std::string_view text, std::string_view surface_form,
                         std::string_view mask_token = kCompanyMask);

}  // namespace slogan::delex
