#include "slogan/ctrlprep.hpp"

#include <array>
#include <cmath>

#include "slogan/error.hpp"
#include "slogan/rng.hpp"
#include "slogan/text.hpp"

namespace slogan::ctrlprep {

namespace {

constexpr std::array<ControlCode, 5> kDefaultCodes = {
    ControlCode::JJ, ControlCode::VB, ControlCode::DT, ControlCode::PR, ControlCode::OTHER};

constexpr std::array<ControlCode, 6> kUpsampledCodes = {
    ControlCode::JJ, ControlCode::VB,    ControlCode::DT,
    ControlCode::PR, ControlCode::OTHER, ControlCode::ENT};

}  // namespace

std::size_t proxy_token_count(std::string_view s) {
  const std::size_t words = text::split_whitespace(s).size();
  // Integer form of ceil(words * 1.3).
  return (words * 13 + 9) / 10;
}

std::string truncate_to_tokens(std::string_view s, std::size_t max_tokens,
                               const TokenCounter& counter) {
  if (counter(s) <= max_tokens) return std::string(text::trim(s));
  const std::vector<std::string_view> tokens = text::split_whitespace(s);
  // Counts are monotone in the prefix length, so binary search the cut.
  std::size_t lo = 0;
  std::size_t hi = tokens.size();
  const auto prefix = [&](std::size_t n) -> std::string_view {
    if (n == 0) return {};
    const char* begin = tokens.front().data();
    const char* end = tokens[n - 1].data() + tokens[n - 1].size();
    return {begin, static_cast<std::size_t>(end - begin)};
  };
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (counter(prefix(mid)) <= max_tokens) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return std::string(prefix(lo));
}

std::string ConditionedInput::render() const {
  std::string out(annotate::to_string(code));
  out += ' ';
  out += separator;
  out += ' ';
  out += body;
  return out;
}

ConditionedInput assemble_prompt(ControlCode code, std::string_view description,
                                 std::size_t max_body_tokens, const TokenCounter& counter) {
  if (text::trim(description).empty()) throw ValidationError("empty description");
  ConditionedInput input;
  input.code = code;
  input.max_body_tokens = max_body_tokens;
  input.body = truncate_to_tokens(description, max_body_tokens, counter);
  return input;
}

io::Json to_json(const ConditionedExample& e) {
  return {{"code", std::string(annotate::to_string(e.code))},
          {"masked_description", e.masked_description},
          {"masked_slogan", e.masked_slogan},
          {"reverse_map", e.reverse_map}};
}

ConditionedExample example_from_json(const io::Json& row) {
  ConditionedExample e;
  const std::string code = io::require_string(row, "code");
  const auto parsed = annotate::parse_control_code(code);
  if (!parsed) throw ValidationError("unknown control code \"" + code + "\"");
  e.code = *parsed;
  e.masked_description = io::require_string(row, "masked_description");
  e.masked_slogan = io::require_string(row, "masked_slogan");
  if (row.contains("reverse_map")) {
    try {
      e.reverse_map = row["reverse_map"].get<std::map<std::string, std::string>>();
    } catch (const io::Json::exception&) {
      throw ValidationError("reverse_map must map strings to strings");
    }
  }
  return e;
}

UpsampleResult upsample_by_code(std::vector<ConditionedExample> examples,
                                std::size_t target, std::uint64_t seed) {
  std::map<ControlCode, std::vector<std::size_t>> by_code;
  for (std::size_t i = 0; i < examples.size(); ++i) by_code[examples[i].code].push_back(i);

  UpsampleResult result;
  for (ControlCode code : kUpsampledCodes) {
    const auto it = by_code.find(code);
    if (it != by_code.end() && it->second.size() > target) {
      throw ValidationError("upsample target " + std::to_string(target) + " is below the " +
                            std::string(annotate::to_string(code)) + " count " +
                            std::to_string(it->second.size()));
    }
  }

  Rng rng(seed);
  for (ControlCode code : kUpsampledCodes) {
    const auto it = by_code.find(code);
    if (it == by_code.end()) {
      if (code != ControlCode::ENT) {
        result.warnings.push_back("no examples with code " +
                                  std::string(annotate::to_string(code)) + "; left empty");
      }
      continue;
    }
    const std::vector<std::size_t>& pool = it->second;
    for (std::size_t have = pool.size(); have < target; ++have) {
      examples.push_back(examples[pool[rng.index(pool.size())]]);
    }
  }
  result.examples = std::move(examples);
  return result;
}

CodePolicy CodePolicy::parse(std::string_view spec) {
  CodePolicy p;
  if (spec == "paper_default") return p;
  if (spec == "uniform_all") {
    p.kind = Kind::uniform_all;
    return p;
  }
  if (spec == "uniform_all_norepeat") {
    p.kind = Kind::uniform_all;
    p.without_replacement = true;
    return p;
  }
  if (spec.starts_with("fixed:")) {
    const auto code = annotate::parse_control_code(spec.substr(6));
    if (!code) throw ValidationError("unknown control code in policy \"" + std::string(spec) + "\"");
    p.kind = Kind::fixed;
    p.fixed_code = *code;
    return p;
  }
  throw ValidationError("unknown code policy \"" + std::string(spec) + "\"");
}

std::vector<ControlCode> sample_inference_codes(std::size_t n, const CodePolicy& policy,
                                                std::uint64_t seed) {
  if (n == 0) throw ValidationError("sample_inference_codes: n must be positive");
  std::vector<ControlCode> out;
  out.reserve(n);
  Rng rng(seed);
  switch (policy.kind) {
    case CodePolicy::Kind::fixed:
      out.assign(n, policy.fixed_code);
      break;
    case CodePolicy::Kind::paper_default:
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(kDefaultCodes[rng.index(kDefaultCodes.size())]);
      }
      break;
    case CodePolicy::Kind::uniform_all: {
      std::array<ControlCode, 6> round{};
      std::copy(std::begin(annotate::kSyntacticCodes), std::end(annotate::kSyntacticCodes),
                round.begin());
      while (out.size() < n) {
        if (policy.without_replacement) {
          rng.shuffle(std::span<ControlCode>(round));
          for (ControlCode c : round) {
            if (out.size() < n) out.push_back(c);
          }
        } else {
          out.push_back(round[rng.index(round.size())]);
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace slogan::ctrlprep
