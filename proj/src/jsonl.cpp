#include "slogan/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "slogan/error.hpp"

namespace slogan::io {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::vector<Json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<Json> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": " + e.what());
    }
    if (!rows.back().is_object()) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": expected a JSON object");
    }
  }
  if (in.bad()) throw IoError("read failure on " + path.string());
  return rows;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<Json>& rows) {
  std::ofstream out = open_out(path);
  for (const Json& row : rows) out << row.dump() << '\n';
  if (!out) throw IoError("write failure on " + path.string());
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& value) {
  std::ofstream out = open_out(path);
  out << value.dump(2) << '\n';
  if (!out) throw IoError("write failure on " + path.string());
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out = open_out(path);
  out << content;
  if (!out) throw IoError("write failure on " + path.string());
}

std::string require_string(const Json& row, std::string_view key) {
  const auto it = row.find(key);
  if (it == row.end() || !it->is_string()) {
    throw ValidationError("missing string field '" + std::string(key) + "'");
  }
  return it->get<std::string>();
}

std::string optional_string(const Json& row, std::string_view key,
                            std::string fallback) {
  const auto it = row.find(key);
  if (it == row.end() || it->is_null()) return fallback;
  if (!it->is_string()) {
    throw ValidationError("field '" + std::string(key) + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace slogan::io
