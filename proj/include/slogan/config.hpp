#pragma once

#include <filesystem>
#include <string_view>

#include "slogan/jsonl.hpp"

namespace slogan::config {

// Loads a config file into a JSON object. `.toml` files are read with a
// small flat reader (tables, strings, numbers, booleans, arrays of scalars);
// everything else is parsed as JSON.
io::Json load(const std::filesystem::path& path);

io::Json parse_toml(std::string_view content);

}  // namespace slogan::config
