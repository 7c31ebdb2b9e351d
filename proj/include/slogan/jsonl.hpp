#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace slogan::io {

using Json = nlohmann::json;

// One object per line, UTF-8. Blank lines are skipped. Parse failures raise
// ValidationError naming the file and line; open failures raise IoError.
std::vector<Json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path, const std::vector<Json>& rows);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& value);
void write_text(const std::filesystem::path& path, std::string_view content);

// Field accessors that turn schema violations into ValidationError.
std::string require_string(const Json& row, std::string_view key);
std::string optional_string(const Json& row, std::string_view key,
                            std::string fallback = {});

}  // namespace slogan::io
