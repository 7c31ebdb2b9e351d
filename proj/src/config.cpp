#include "slogan/config.hpp"

#include <fstream>
#include <sstream>

#include "slogan/error.hpp"
#include "slogan/text.hpp"

namespace slogan::config {

namespace {

class TomlLine {
 public:
  TomlLine(std::string_view s, std::size_t line_no) : s_(s), line_no_(line_no) {}

  io::Json value() {
    skip_ws();
    if (pos_ >= s_.size()) fail("missing value");
    const char c = s_[pos_];
    if (c == '"' || c == '\'') return string_value();
    if (c == '[') return array_value();
    std::size_t end = pos_;
    while (end < s_.size() && s_[end] != ',' && s_[end] != ']' &&
           s_[end] != '#' && s_[end] != ' ' && s_[end] != '\t') {
      ++end;
    }
    const std::string token(s_.substr(pos_, end - pos_));
    pos_ = end;
    if (token == "true") return true;
    if (token == "false") return false;
    try {
      std::size_t used = 0;
      if (token.find_first_of(".eE") == std::string::npos) {
        const long long v = std::stoll(token, &used);
        if (used == token.size()) return v;
      } else {
        const double v = std::stod(token, &used);
        if (used == token.size()) return v;
      }
    } catch (const std::exception&) {
    }
    fail("unsupported value '" + token + "'");
  }

  void expect_end() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] != '#') fail("trailing characters");
  }

 private:
  io::Json string_value() {
    const char quote = s_[pos_++];
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != quote) {
      char c = s_[pos_++];
      if (quote == '"' && c == '\\' && pos_ < s_.size()) {
        const char esc = s_[pos_++];
        switch (esc) {
          case 'n': c = '\n'; break;
          case 't': c = '\t'; break;
          default: c = esc; break;
        }
      }
      out.push_back(c);
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  io::Json array_value() {
    ++pos_;
    io::Json out = io::Json::array();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        return out;
      }
      out.push_back(value());
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
      } else if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        return out;
      } else {
        fail("malformed array (arrays must fit on one line)");
      }
    }
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("toml line " + std::to_string(line_no_) + ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
};

}  // namespace

io::Json parse_toml(std::string_view content) {
  io::Json root = io::Json::object();
  io::Json* table = &root;
  std::size_t line_no = 0;
  std::istringstream in{std::string(content)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      const auto close = line.find(']');
      if (close == std::string_view::npos) {
        throw ValidationError("toml line " + std::to_string(line_no) +
                              ": unterminated table header");
      }
      table = &root;
      std::string_view name = text::trim(line.substr(1, close - 1));
      while (!name.empty()) {
        const auto dot = name.find('.');
        const std::string part(text::trim(name.substr(0, dot)));
        table = &(*table)[part];
        if (table->is_null()) *table = io::Json::object();
        name = dot == std::string_view::npos ? std::string_view{}
                                             : name.substr(dot + 1);
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("toml line " + std::to_string(line_no) +
                            ": expected key = value");
    }
    std::string key(text::trim(line.substr(0, eq)));
    if (key.size() >= 2 && key.front() == '"' && key.back() == '"') {
      key = key.substr(1, key.size() - 2);
    }
    TomlLine parser(line.substr(eq + 1), line_no);
    (*table)[key] = parser.value();
    parser.expect_end();
  }
  return root;
}

io::Json load(const std::filesystem::path& path) {
  if (path.extension() == ".toml") {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_toml(buffer.str());
  }
  io::Json value = io::read_json(path);
  if (!value.is_object()) {
    throw ValidationError(path.string() + ": config must be a JSON object");
  }
  return value;
}

}  // namespace slogan::config
