#include <algorithm>
#include <array>

#include "gazetteer_data.hpp"
#include "slogan/annotate.hpp"
#include "slogan/text.hpp"

namespace slogan::annotate {

namespace {

struct NerToken {
  std::size_t start;
  std::size_t end;
  std::string_view text;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Runs of alphanumerics; digits may carry internal ',' or '.' ("1,000").
std::vector<NerToken> ner_tokens(std::string_view s) {
  std::vector<NerToken> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    text::CodePoint cp = text::decode_at(s, pos);
    if (!text::is_alnum(cp.value)) {
      pos += cp.length;
      continue;
    }
    const std::size_t start = pos;
    while (pos < s.size()) {
      cp = text::decode_at(s, pos);
      if (text::is_alnum(cp.value)) {
        pos += cp.length;
      } else if ((s[pos] == ',' || s[pos] == '.') && pos > start &&
                 is_digit(s[pos - 1]) && pos + 1 < s.size() && is_digit(s[pos + 1])) {
        ++pos;
      } else {
        break;
      }
    }
    out.push_back({start, pos, s.substr(start, pos - start)});
  }
  return out;
}

bool is_number(std::string_view t) {
  return !t.empty() && is_digit(t.front()) && is_digit(t.back()) &&
         std::all_of(t.begin(), t.end(),
                     [](char c) { return is_digit(c) || c == ',' || c == '.'; });
}

bool is_year(std::string_view t) {
  if (t.size() != 4 || !std::all_of(t.begin(), t.end(), is_digit)) return false;
  const int y = std::stoi(std::string(t));
  return y >= 1800 && y <= 2099;
}

bool is_decade(std::string_view t) {
  return t.size() == 5 && t.back() == 's' && is_year(t.substr(0, 4)) && t[3] == '0';
}

bool is_day(std::string_view t) {
  std::string_view digits = t;
  for (std::string_view suf : {"st", "nd", "rd", "th"}) {
    if (t.size() > 2 && t.ends_with(suf)) digits = t.substr(0, t.size() - 2);
  }
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), is_digit)) {
    return false;
  }
  const int d = std::stoi(std::string(digits));
  return d >= 1 && d <= 31;
}

bool is_ordinal(std::string_view t) {
  return t.size() > 2 && is_digit(t.front()) && !is_number(t) &&
         (t.ends_with("st") || t.ends_with("nd") || t.ends_with("rd") || t.ends_with("th"));
}

constexpr std::array<std::string_view, 23> kMonths = {
    "January", "February", "March", "April", "May", "June", "July", "August",
    "September", "October", "November", "December", "Jan", "Feb", "Mar",
    "Apr", "Jun", "Jul", "Aug", "Sep", "Sept", "Oct", "Nov"};
constexpr std::array<std::string_view, 7> kWeekdays = {
    "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"};
constexpr std::array<std::string_view, 31> kNumberWords = {
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen", "twenty", "thirty", "forty",
    "fifty", "sixty", "seventy", "eighty", "ninety", "hundred", "thousand",
    "million", "billion"};
constexpr std::array<std::string_view, 10> kDurationUnits = {
    "year", "years", "month", "months", "week", "weeks", "day", "days",
    "decade", "decades"};
constexpr std::array<std::string_view, 8> kHonorifics = {
    "Mr", "Mrs", "Ms", "Dr", "Prof", "Sir", "Dame", "Mx"};

template <std::size_t N>
bool in(const std::array<std::string_view, N>& list, std::string_view t) {
  return std::find(list.begin(), list.end(), t) != list.end();
}

bool is_number_word(std::string_view t) { return in(kNumberWords, text::to_lower(t)); }

bool title_case_word(std::string_view t) {
  return !t.empty() && t.front() >= 'A' && t.front() <= 'Z' &&
         std::all_of(t.begin() + 1, t.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || c == '\'';
         });
}

// Tokens i and i+1 separated by exactly one run of plain spaces.
bool adjacent(std::string_view s, const NerToken& a, const NerToken& b) {
  if (b.start <= a.end) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(a.end),
                     s.begin() + static_cast<std::ptrdiff_t>(b.start),
                     [](char c) { return c == ' '; });
}

bool followed_by(std::string_view s, std::size_t pos, char c) {
  return pos < s.size() && s[pos] == c;
}

bool preceded_by(std::string_view s, std::size_t pos, char c) {
  return pos > 0 && s[pos - 1] == c;
}

}  // namespace

GazetteerEntityTagger::GazetteerEntityTagger() {
  for (std::size_t b = 0; b < data::kGazetteerBlocks; ++b) {
    std::string_view entries = data::kGazetteer[b].entries;
    while (!entries.empty()) {
      const std::size_t bar = entries.find('|');
      const std::string_view entry = entries.substr(0, bar);
      entries = bar == std::string_view::npos ? std::string_view{} : entries.substr(bar + 1);
      const std::vector<NerToken> toks = ner_tokens(entry);
      if (toks.empty()) continue;
      Entry e{{std::string(entry)}, data::kGazetteer[b].label};
      auto& bucket = by_first_word_[std::string(toks.front().text)];
      const bool duplicate = std::any_of(bucket.begin(), bucket.end(), [&](const Entry& x) {
        return x.words.front() == e.words.front();
      });
      if (!duplicate) bucket.push_back(std::move(e));
    }
  }
  for (auto& [word, bucket] : by_first_word_) {
    std::stable_sort(bucket.begin(), bucket.end(), [](const Entry& a, const Entry& b) {
      return a.words.front().size() > b.words.front().size();
    });
  }
  for (std::string_view name : text::split_whitespace(data::kGivenNames)) {
    given_names_.emplace(name);
  }
}

std::vector<NamedEntity> GazetteerEntityTagger::entities(std::string_view s) const {
  const std::vector<NerToken> toks = ner_tokens(s);
  std::vector<NamedEntity> out;
  std::size_t i = 0;
  const auto emit = [&](std::size_t start, std::size_t end, std::string label) {
    out.push_back({start, end, std::move(label)});
    while (i < toks.size() && toks[i].start < end) ++i;
  };

  while (i < toks.size()) {
    const NerToken& tok = toks[i];
    const NerToken* next = i + 1 < toks.size() && adjacent(s, tok, toks[i + 1])
                               ? &toks[i + 1]
                               : nullptr;

    // Gazetteer, longest entry first.
    if (const auto it = by_first_word_.find(std::string(tok.text)); it != by_first_word_.end()) {
      bool matched = false;
      for (const Entry& e : it->second) {
        const std::string& entry = e.words.front();
        if (s.compare(tok.start, entry.size(), entry) != 0) continue;
        const std::size_t end = tok.start + entry.size();
        if (end < s.size() && text::is_alnum(text::decode_at(s, end).value)) continue;
        emit(tok.start, end, e.label);
        matched = true;
        break;
      }
      if (matched) continue;
    }

    // DATE: month [day] [year], weekday, year, decade, "<n> years".
    if (in(kMonths, tok.text) && tok.text != "May" && tok.text != "March" &&
        tok.text != "Mar") {
      std::size_t end = tok.end;
      std::size_t j = i;
      if (next && is_day(next->text)) {
        end = next->end;
        ++j;
      }
      if (j + 1 < toks.size() && is_year(toks[j + 1].text) && toks[j + 1].start - end <= 2) {
        end = toks[j + 1].end;
      }
      emit(tok.start, end, "DATE");
      continue;
    }
    if ((tok.text == "May" || tok.text == "March") && next &&
        (is_day(next->text) || is_year(next->text))) {
      emit(tok.start, next->end, "DATE");
      continue;
    }
    if (in(kWeekdays, tok.text) || is_decade(tok.text)) {
      emit(tok.start, tok.end, "DATE");
      continue;
    }
    if (is_year(tok.text) && !preceded_by(s, tok.start, '$') &&
        !followed_by(s, tok.end, '%')) {
      emit(tok.start, tok.end, "DATE");
      continue;
    }
    if ((is_number(tok.text) || is_number_word(tok.text)) && next &&
        in(kDurationUnits, text::to_lower(next->text))) {
      emit(tok.start, next->end, "DATE");
      continue;
    }

    // CARDINAL; money and percentages are other entity types.
    if (is_number(tok.text) && !is_ordinal(tok.text)) {
      if (!preceded_by(s, tok.start, '$') && !followed_by(s, tok.end, '%')) {
        emit(tok.start, tok.end, "CARDINAL");
      } else {
        ++i;
      }
      continue;
    }
    if (is_number_word(tok.text)) {
      std::size_t j = i;
      while (j + 1 < toks.size() && adjacent(s, toks[j], toks[j + 1]) &&
             is_number_word(toks[j + 1].text)) {
        ++j;
      }
      emit(tok.start, toks[j].end, "CARDINAL");
      continue;
    }

    // PERSON: honorific + name, or known given name + title-case surname.
    if (in(kHonorifics, tok.text)) {
      std::size_t j = i + 1;
      if (j < toks.size() && title_case_word(toks[j].text) &&
          toks[j].start - tok.end <= 2) {
        std::size_t end = toks[j].end;
        if (j + 1 < toks.size() && adjacent(s, toks[j], toks[j + 1]) &&
            title_case_word(toks[j + 1].text)) {
          end = toks[j + 1].end;
        }
        ++i;
        emit(toks[i].start, end, "PERSON");
        continue;
      }
    }
    if (given_names_.count(std::string(tok.text)) && next && title_case_word(next->text) &&
        !by_first_word_.count(std::string(next->text))) {
      emit(tok.start, next->end, "PERSON");
      continue;
    }
    ++i;
  }
  return out;
}

}  // namespace slogan::annotate
