#include "slogan/ctrlprep.hpp"
#include "slogan/delex.hpp"
#include "slogan/entmask.hpp"
#include "slogan/genclient.hpp"

namespace slogan::genclient {

std::vector<FinalSlogan> end_to_end_generate(std::string_view company_name,
                                             std::string_view description,
                                             std::span<const ControlCode> codes,
                                             GenerationBackend& backend,
                                             const annotate::EntityTagger& tagger,
                                             const PipelineOptions& options) {
  const delex::DelexResult delexed = delex::delexicalise_company(company_name, description);
  const std::vector<entmask::EntitySpan> spans = entmask::masked_entity_spans(delexed.text, tagger);
  const entmask::MaskedPair masked = entmask::mask_pair(delexed.text, "", spans, {});
  const std::string surface = delexed.matched ? delexed.surface_form : std::string(company_name);

  std::vector<std::optional<ControlCode>> plan;
  if (codes.empty()) {
    plan.emplace_back(std::nullopt);
  } else {
    plan.assign(codes.begin(), codes.end());
  }
  std::vector<GenerationRequest> requests;
  for (const std::optional<ControlCode>& code : plan) {
    GenerationRequest r;
    r.control_code = code;
    // The body is the same for every code; only the code field changes.
    r.description = ctrlprep::assemble_prompt(code.value_or(ControlCode::NN),
                                              masked.masked_description, options.max_body_tokens)
                        .body;
    r.decoding = options.decoding;
    r.num_return = options.num_return_per_code;
    requests.push_back(std::move(r));
  }

  const std::vector<GenerationResponse> responses =
      generate_batch(backend, requests, options.max_in_flight);
  std::vector<FinalSlogan> out;
  for (std::size_t i = 0; i < responses.size(); ++i) {
    for (const std::string& raw : responses[i].slogans) {
      const std::string repaired = entmask::repair_mask_tokens(raw, masked.map);
      const std::string unmasked = entmask::unmask_slogan(repaired, masked.map);
      out.push_back({plan[i], delex::relexicalise(unmasked, surface)});
    }
  }
  return out;
}

}  // namespace slogan::genclient
