#include "slogan/delex.hpp"

#include <vector>

#include "slogan/error.hpp"
#include "slogan/text.hpp"

namespace slogan::delex {

DelexResult delexicalise_company(std::string_view company_name,
                                 std::string_view text,
                                 std::string_view mask_token) {
  DelexResult result{std::string(text), {}, false};
  const std::vector<std::string_view> name_words =
      text::split_whitespace(company_name);

  for (std::size_t len = name_words.size(); len > 0; --len) {
    const char* first = name_words.front().data();
    const char* last = name_words[len - 1].data() + name_words[len - 1].size();
    std::string_view prefix(first, static_cast<std::size_t>(last - first));
    // Internal whitespace in the name is matched as a single space.
    const std::string candidate = text::collapse_whitespace(
        text::strip_non_alnum(prefix));
    if (candidate.empty()) continue;

    std::size_t hit = text::find_word_ci(text, candidate);
    if (hit == std::string_view::npos) continue;

    result.matched = true;
    result.surface_form = std::string(text.substr(hit, candidate.size()));
    std::string out;
    std::size_t pos = 0;
    while (hit != std::string_view::npos) {
      out.append(text.substr(pos, hit - pos));
      out.append(mask_token);
      pos = hit + candidate.size();
      hit = text::find_word_ci(text, candidate, pos);
    }
    out.append(text.substr(pos));
    result.text = std::move(out);
    return result;
  }
  return result;
}

std::string relexicalise(std::string_view text, std::string_view surface_form,
                         std::string_view mask_token) {
  if (text.find(mask_token) == std::string_view::npos) return std::string(text);
  if (surface_form.empty()) throw ValidationError("no-surface");
  return text::replace_all(text, mask_token, surface_form);
}

}  // namespace slogan::delex
