#include "slogan/plugin_tagger.hpp"

#include <csignal>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "httplib.h"
#include "slogan/error.hpp"
#include "slogan/jsonl.hpp"

namespace slogan::annotate {

namespace {

class SubprocessTransport final : public PluginTagger::Transport {
 public:
  explicit SubprocessTransport(const std::vector<std::string>& argv) {
    if (argv.empty()) throw ValidationError("plugin tagger: empty command");
    std::signal(SIGPIPE, SIG_IGN);
    int to_child[2];
    int from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0) {
      throw IoError(std::string("plugin tagger: pipe: ") + std::strerror(errno));
    }
    pid_ = fork();
    if (pid_ < 0) throw IoError(std::string("plugin tagger: fork: ") + std::strerror(errno));
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      std::vector<char*> args;
      for (const std::string& a : argv) args.push_back(const_cast<char*>(a.c_str()));
      args.push_back(nullptr);
      execvp(args[0], args.data());
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    write_fd_ = to_child[1];
    read_fd_ = from_child[0];
  }

  ~SubprocessTransport() override {
    if (write_fd_ >= 0) close(write_fd_);
    if (read_fd_ >= 0) close(read_fd_);
    if (pid_ > 0) waitpid(pid_, nullptr, 0);
  }

  std::string round_trip(const std::string& request_line) override {
    std::string msg = request_line + "\n";
    std::size_t sent = 0;
    while (sent < msg.size()) {
      const ssize_t n = write(write_fd_, msg.data() + sent, msg.size() - sent);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw IoError("plugin tagger: write failed (process exited?)");
      }
      sent += static_cast<std::size_t>(n);
    }
    for (;;) {
      if (const std::size_t nl = buffer_.find('\n'); nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return line;
      }
      char chunk[4096];
      const ssize_t n = read(read_fd_, chunk, sizeof chunk);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) throw IoError("plugin tagger: process closed its output");
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 private:
  pid_t pid_ = -1;
  int write_fd_ = -1;
  int read_fd_ = -1;
  std::string buffer_;
};

class HttpTransport final : public PluginTagger::Transport {
 public:
  explicit HttpTransport(const std::string& url) {
    const std::size_t scheme = url.find("://");
    const std::size_t path_at = url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    base_ = url.substr(0, path_at);
    path_ = path_at == std::string::npos ? "/" : url.substr(path_at);
  }

  std::string round_trip(const std::string& request_line) override {
    httplib::Client client(base_);
    client.set_read_timeout(30, 0);
    auto res = client.Post(path_, request_line, "application/json");
    if (!res) throw IoError("plugin tagger: cannot reach " + base_);
    if (res->status != 200) {
      throw ProtocolError("plugin tagger: HTTP " + std::to_string(res->status), res->body);
    }
    return res->body;
  }

 private:
  std::string base_;
  std::string path_;
};

}  // namespace

PluginTagger::PluginTagger(std::unique_ptr<Transport> transport)
    : transport_(std::move(transport)) {}

PluginTagger::~PluginTagger() = default;

std::unique_ptr<PluginTagger> PluginTagger::spawn(const std::vector<std::string>& argv) {
  return std::make_unique<PluginTagger>(std::make_unique<SubprocessTransport>(argv));
}

std::unique_ptr<PluginTagger> PluginTagger::connect(const std::string& url) {
  return std::make_unique<PluginTagger>(std::make_unique<HttpTransport>(url));
}

PluginTagger::Reply PluginTagger::query(std::string_view text) const {
  const std::string request = io::Json{{"text", std::string(text)}}.dump();
  std::string raw;
  {
    std::lock_guard lock(mutex_);
    raw = transport_->round_trip(request);
  }
  io::Json body;
  try {
    body = io::Json::parse(raw);
  } catch (const io::Json::exception&) {
    throw ProtocolError("plugin tagger: malformed reply", raw);
  }
  Reply reply;
  try {
    std::size_t cursor = 0;
    for (const io::Json& t : body.value("tokens", io::Json::array())) {
      TaggedToken tok{t.at("text").get<std::string>(), PosTag(t.at("tag").get<std::string>()), 0};
      const std::size_t at = text.find(tok.text, cursor);
      tok.offset = at == std::string_view::npos ? cursor : at;
      if (at != std::string_view::npos) cursor = at + tok.text.size();
      reply.tokens.push_back(std::move(tok));
    }
    for (const io::Json& e : body.value("entities", io::Json::array())) {
      NamedEntity ent{e.at("start").get<std::size_t>(), e.at("end").get<std::size_t>(),
                      e.at("type").get<std::string>()};
      if (ent.start >= ent.end || ent.end > text.size()) {
        throw ProtocolError("plugin tagger: entity span out of range", raw);
      }
      reply.entities.push_back(std::move(ent));
    }
  } catch (const io::Json::exception&) {
    throw ProtocolError("plugin tagger: reply does not match the schema", raw);
  }
  return reply;
}

std::vector<TaggedToken> PluginTagger::tag(std::string_view text) const {
  if (text.empty()) return {};
  return query(text).tokens;
}

std::vector<NamedEntity> PluginTagger::entities(std::string_view text) const {
  if (text.empty()) return {};
  return query(text).entities;
}

}  // namespace slogan::annotate
