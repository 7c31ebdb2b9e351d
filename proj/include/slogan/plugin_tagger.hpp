#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "slogan/annotate.hpp"

namespace slogan::annotate {

// Adapter for an external tagger process or service. One request per text:
//   {"text": "..."}
// answered by
//   {"tokens": [{"text": "...", "tag": "NNP"}, ...],
//    "entities": [{"start": 0, "end": 7, "type": "GPE"}, ...]}
// Over a subprocess the messages are single JSON lines on stdin/stdout;
// over HTTP the request is POSTed to the configured URL.
class PluginTagger final : public PosTagger, public EntityTagger {
 public:
  class Transport {
   public:
    virtual ~Transport() = default;
    virtual std::string round_trip(const std::string& request_line) = 0;
  };

  explicit PluginTagger(std::unique_ptr<Transport> transport);
  ~PluginTagger() override;

  // argv[0] is looked up on PATH.
  static std::unique_ptr<PluginTagger> spawn(const std::vector<std::string>& argv);
  // url like "http://127.0.0.1:8080/tag".
  static std::unique_ptr<PluginTagger> connect(const std::string& url);

  std::vector<TaggedToken> tag(std::string_view text) const override;
  std::vector<NamedEntity> entities(std::string_view text) const override;

 private:
  struct Reply {
    std::vector<TaggedToken> tokens;
    std::vector<NamedEntity> entities;
  };
  Reply query(std::string_view text) const;

  mutable std::mutex mutex_;
  std::unique_ptr<Transport> transport_;
};

}  // namespace slogan::annotate
