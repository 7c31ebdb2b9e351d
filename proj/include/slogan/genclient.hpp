#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slogan/annotate.hpp"
#include "slogan/jsonl.hpp"

namespace slogan::genclient {

using annotate::ControlCode;

enum class Strategy { greedy, nucleus };

std::string_view to_string(Strategy strategy);

struct DecodingConfig {
  Strategy strategy = Strategy::greedy;
  double top_p = 0.95;
  double temperature = 1.0;
  double repetition_penalty = 1.2;
  int max_new_tokens = 20;

  // Throws ValidationError when a field is out of range.
  void validate() const;
};

struct GenerationRequest {
  std::string description;
  std::optional<ControlCode> control_code;
  DecodingConfig decoding;
  int num_return = 1;
};

struct GenerationResponse {
  std::vector<std::string> slogans;
  std::string backend_id;
};

// Wire format of POST /generate.
io::Json to_json(const DecodingConfig& decoding);
io::Json to_json(const GenerationRequest& request);
io::Json to_json(const GenerationResponse& response);
DecodingConfig decoding_from_json(const io::Json& json);
// Strict parsers. Requests raise ValidationError, responses ProtocolError
// carrying the offending payload.
GenerationRequest request_from_json(const io::Json& json);
GenerationResponse response_from_json(std::string_view payload);

class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;
  // Must be safe to call from several threads at once.
  virtual GenerationResponse generate(const GenerationRequest& request) = 0;
};

// Wraps a callable; handy for stubs.
class CallbackBackend final : public GenerationBackend {
 public:
  using Fn = std::function<GenerationResponse(const GenerationRequest&)>;
  explicit CallbackBackend(Fn fn) : fn_(std::move(fn)) {}
  GenerationResponse generate(const GenerationRequest& request) override { return fn_(request); }

 private:
  Fn fn_;
};

struct HttpOptions {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::seconds timeout{30};
};

// POSTs to "<base_url>/generate". Connection failures, timeouts and 5xx
// answers are retried with doubling backoff and end in RetryableError;
// other non-200 answers and malformed bodies raise ProtocolError.
class HttpBackend final : public GenerationBackend {
 public:
  explicit HttpBackend(std::string base_url, HttpOptions options = {});
  GenerationResponse generate(const GenerationRequest& request) override;

 private:
  std::string base_url_;
  std::string path_prefix_;
  HttpOptions options_;
};

// Validates the request, calls the backend and checks that exactly
// num_return slogans came back. Slogans are returned verbatim.
GenerationResponse generate(GenerationBackend& backend, const GenerationRequest& request);

// Runs requests with at most `max_in_flight` outstanding calls. Results
// keep request order; the first failure is rethrown after all workers stop.
std::vector<GenerationResponse> generate_batch(GenerationBackend& backend,
                                               std::span<const GenerationRequest> requests,
                                               std::size_t max_in_flight = 4);

struct FinalSlogan {
  std::optional<ControlCode> code;
  std::string slogan;
};

struct PipelineOptions {
  DecodingConfig decoding;
  int num_return_per_code = 1;
  std::size_t max_in_flight = 4;
  std::size_t max_body_tokens = 80;
};

// delexicalise -> mask entities -> prompt per code -> generate -> repair ->
// unmask -> relexicalise. An empty code list sends one request without a
// code. Outputs carry no mask tokens.
std::vector<FinalSlogan> end_to_end_generate(std::string_view company_name,
                                             std::string_view description,
                                             std::span<const ControlCode> codes,
                                             GenerationBackend& backend,
                                             const annotate::EntityTagger& tagger,
                                             const PipelineOptions& options = {});

}  // namespace slogan::genclient
