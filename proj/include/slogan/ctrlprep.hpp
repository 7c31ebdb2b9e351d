#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "slogan/annotate.hpp"
#include "slogan/jsonl.hpp"

namespace slogan::ctrlprep {

using annotate::ControlCode;

inline constexpr std::string_view kSeparator = "</s>";
inline constexpr std::size_t kMaxBodyTokens = 80;
inline constexpr std::size_t kMaxTargetTokens = 20;

// Counts model tokens in a text. Backends may supply their own.
using TokenCounter = std::function<std::size_t(std::string_view)>;

// ceil(1.3 * whitespace tokens): stands in for a subword count when no
// backend tokenizer is attached.
std::size_t proxy_token_count(std::string_view text);

// Longest whitespace-token prefix of `text` whose count fits `max_tokens`,
// cut right after the last kept token. A prefix of the original bytes.
std::string truncate_to_tokens(std::string_view text, std::size_t max_tokens,
                               const TokenCounter& counter = proxy_token_count);

struct ConditionedInput {
  ControlCode code = ControlCode::NN;
  std::string separator{kSeparator};
  std::string body;
  std::size_t max_body_tokens = kMaxBodyTokens;
  std::size_t max_target_tokens = kMaxTargetTokens;

  // "<code> <separator> <body>"
  std::string render() const;
};

// Throws ValidationError on an empty description.
ConditionedInput assemble_prompt(ControlCode code, std::string_view description,
                                 std::size_t max_body_tokens = kMaxBodyTokens,
                                 const TokenCounter& counter = proxy_token_count);

// One row of the conditioned-training file.
struct ConditionedExample {
  ControlCode code = ControlCode::NN;
  std::string masked_description;
  std::string masked_slogan;
  std::map<std::string, std::string> reverse_map;
};

io::Json to_json(const ConditionedExample& example);
ConditionedExample example_from_json(const io::Json& row);

struct UpsampleResult {
  std::vector<ConditionedExample> examples;
  std::vector<std::string> warnings;
};

// Tops every non-NN code up to `target` by drawing its own examples with
// replacement. Originals come first in input order, followed by the draws
// grouped by code. Throws ValidationError when a code already exceeds
// `target`.
UpsampleResult upsample_by_code(std::vector<ConditionedExample> examples,
                                std::size_t target = 100000, std::uint64_t seed = 0);

struct CodePolicy {
  enum class Kind { paper_default, uniform_all, fixed };
  Kind kind = Kind::paper_default;
  ControlCode fixed_code = ControlCode::NN;
  // uniform_all only: deal shuffled rounds of the six codes.
  bool without_replacement = false;

  // "paper_default", "uniform_all", "uniform_all_norepeat", "fixed:DT".
  static CodePolicy parse(std::string_view spec);
};

// Throws ValidationError when n == 0.
std::vector<ControlCode> sample_inference_codes(std::size_t n, const CodePolicy& policy,
                                                std::uint64_t seed);

}  // namespace slogan::ctrlprep
