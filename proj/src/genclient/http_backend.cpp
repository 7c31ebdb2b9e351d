#include <thread>

#include "httplib.h"
#include "slogan/error.hpp"
#include "slogan/genclient.hpp"

namespace slogan::genclient {

HttpBackend::HttpBackend(std::string base_url, HttpOptions options) : options_(options) {
  while (!base_url.empty() && base_url.back() == '/') base_url.pop_back();
  const std::size_t scheme = base_url.find("://");
  const std::size_t path_at = base_url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  if (path_at != std::string::npos) {
    path_prefix_ = base_url.substr(path_at);
    base_url.resize(path_at);
  }
  base_url_ = std::move(base_url);
  if (options_.max_attempts < 1) throw ValidationError("http backend: max_attempts must be positive");
}

GenerationResponse HttpBackend::generate(const GenerationRequest& request) {
  const std::string body = to_json(request).dump();
  const std::string path = path_prefix_ + "/generate";
  std::chrono::milliseconds backoff = options_.initial_backoff;
  std::string last_error;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    httplib::Client client(base_url_);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_write_timeout(options_.timeout);
    const auto res = client.Post(path, body, "application/json");
    if (!res) {
      last_error = "cannot reach " + base_url_ + ": " + httplib::to_string(res.error());
    } else if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status) + " from " + base_url_;
    } else if (res->status != 200) {
      throw ProtocolError("HTTP " + std::to_string(res->status) + " from " + base_url_, res->body);
    } else {
      return response_from_json(res->body);
    }
    if (attempt < options_.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
  throw RetryableError(last_error + " (after " + std::to_string(options_.max_attempts) + " attempts)");
}

}  // namespace slogan::genclient
