#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "slogan/error.hpp"
#include "slogan/genclient.hpp"
#include "slogan/text.hpp"

namespace slogan::genclient {

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::greedy ? "greedy" : "nucleus";
}

void DecodingConfig::validate() const {
  if (!(top_p > 0.0 && top_p <= 1.0)) throw ValidationError("decoding: top_p must lie in (0,1]");
  if (!(temperature > 0.0)) throw ValidationError("decoding: temperature must be positive");
  if (!(repetition_penalty >= 1.0)) throw ValidationError("decoding: repetition_penalty must be >= 1");
  if (max_new_tokens < 1) throw ValidationError("decoding: max_new_tokens must be positive");
}

io::Json to_json(const DecodingConfig& d) {
  return {{"strategy", std::string(to_string(d.strategy))},
          {"top_p", d.top_p},
          {"temperature", d.temperature},
          {"repetition_penalty", d.repetition_penalty},
          {"max_new_tokens", d.max_new_tokens}};
}

io::Json to_json(const GenerationRequest& r) {
  io::Json j;
  j["description"] = r.description;
  j["control_code"] = r.control_code ? io::Json(std::string(annotate::to_string(*r.control_code)))
                                     : io::Json(nullptr);
  j["decoding"] = to_json(r.decoding);
  j["num_return"] = r.num_return;
  return j;
}

io::Json to_json(const GenerationResponse& r) {
  return {{"slogans", r.slogans}, {"backend_id", r.backend_id}};
}

DecodingConfig decoding_from_json(const io::Json& j) {
  DecodingConfig d;
  if (!j.is_object()) throw ValidationError("decoding must be an object");
  try {
    if (j.contains("strategy")) {
      const std::string s = j["strategy"].get<std::string>();
      if (s == "greedy") {
        d.strategy = Strategy::greedy;
      } else if (s == "nucleus") {
        d.strategy = Strategy::nucleus;
      } else {
        throw ValidationError("decoding: unknown strategy \"" + s + "\"");
      }
    }
    if (j.contains("top_p")) d.top_p = j["top_p"].get<double>();
    if (j.contains("temperature")) d.temperature = j["temperature"].get<double>();
    if (j.contains("repetition_penalty")) d.repetition_penalty = j["repetition_penalty"].get<double>();
    if (j.contains("max_new_tokens")) d.max_new_tokens = j["max_new_tokens"].get<int>();
  } catch (const io::Json::exception& e) {
    throw ValidationError(std::string("decoding: ") + e.what());
  }
  d.validate();
  return d;
}

GenerationRequest request_from_json(const io::Json& j) {
  static const std::set<std::string> kKeys = {"description", "control_code", "decoding", "num_return"};
  if (!j.is_object()) throw ValidationError("request must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.count(key)) throw ValidationError("request: unexpected key \"" + key + "\"");
  }
  for (const std::string& key : kKeys) {
    if (!j.contains(key)) throw ValidationError("request: missing key \"" + key + "\"");
  }
  GenerationRequest r;
  if (!j["description"].is_string()) throw ValidationError("request: description must be a string");
  r.description = j["description"].get<std::string>();
  const io::Json& code = j["control_code"];
  if (code.is_string()) {
    r.control_code = annotate::parse_control_code(code.get<std::string>());
    if (!r.control_code) throw ValidationError("request: unknown control_code");
  } else if (!code.is_null()) {
    throw ValidationError("request: control_code must be a string or null");
  }
  r.decoding = decoding_from_json(j["decoding"]);
  if (!j["num_return"].is_number_integer()) throw ValidationError("request: num_return must be an integer");
  r.num_return = j["num_return"].get<int>();
  if (r.num_return < 1) throw ValidationError("request: num_return must be positive");
  return r;
}

GenerationResponse response_from_json(std::string_view payload) {
  const std::string body(payload);
  io::Json j;
  try {
    j = io::Json::parse(body);
  } catch (const io::Json::exception&) {
    throw ProtocolError("response is not valid JSON", body);
  }
  if (!j.is_object() || !j.contains("slogans") || !j["slogans"].is_array() ||
      !j.contains("backend_id") || !j["backend_id"].is_string()) {
    throw ProtocolError("response does not match {slogans, backend_id}", body);
  }
  GenerationResponse r;
  for (const io::Json& s : j["slogans"]) {
    if (!s.is_string()) throw ProtocolError("response slogans must be strings", body);
    r.slogans.push_back(s.get<std::string>());
  }
  r.backend_id = j["backend_id"].get<std::string>();
  return r;
}

GenerationResponse generate(GenerationBackend& backend, const GenerationRequest& request) {
  if (text::trim(request.description).empty()) throw ValidationError("request: empty description");
  if (request.num_return < 1) throw ValidationError("request: num_return must be positive");
  request.decoding.validate();
  GenerationResponse response = backend.generate(request);
  if (response.slogans.size() != static_cast<std::size_t>(request.num_return)) {
    throw ProtocolError("backend returned " + std::to_string(response.slogans.size()) +
                            " slogans, expected " + std::to_string(request.num_return),
                        to_json(response).dump());
  }
  return response;
}

std::vector<GenerationResponse> generate_batch(GenerationBackend& backend,
                                               std::span<const GenerationRequest> requests,
                                               std::size_t max_in_flight) {
  std::vector<GenerationResponse> out(requests.size());
  if (requests.empty()) return out;
  const std::size_t workers = std::clamp<std::size_t>(max_in_flight, 1, requests.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= requests.size() || failed.load()) return;
      try {
        out[i] = generate(backend, requests[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace slogan::genclient
