#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "json.hpp"
#include "starspec/search.hpp"

namespace starspec {

nlohmann::json to_json(const SearchRecord& rec);

/// Throws Error{parse_error} on missing or mistyped fields.
SearchRecord search_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConjectureReport& rep);

/// One compact JSON object per line.
void write_records(std::span<const SearchRecord> records, const std::filesystem::path& path);

/// Throws Error{io_error} naming the path, or Error{parse_error} whose
/// position() is the 1-based line number.
std::vector<SearchRecord> read_records(const std::filesystem::path& path);

}  // namespace starspec
