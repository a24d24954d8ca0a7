#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hooklab/hooks.hpp"

namespace hooklab {

inline constexpr const char* kVersion = "hooklab 1.0.0";

/// CSV body: header `n,t,count`, one LF-terminated row per (n, t).
std::string census_csv(const HookCensus& c);

/// {class, n_max, t_max, cardinality, total_hooks, generated_by}. Counts
/// that fit in 64 bits are JSON numbers, larger ones decimal strings.
nlohmann::json census_sidecar(const HookCensus& c);

/// Rebuilds a census from its CSV and sidecar; throws consistency_error
/// on malformed or mismatched input.
HookCensus parse_census(const std::string& csv, const nlohmann::json& sidecar);

/// out.csv -> out.json; a path without extension gets `.json` appended.
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

/// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

void write_census(const HookCensus& c, const std::filesystem::path& csv_path);
HookCensus read_census(const std::filesystem::path& csv_path);

/// <dir>/census_<class>.csv
std::filesystem::path cache_path(const std::filesystem::path& dir, ClassId c);
std::optional<HookCensus> load_cached(const std::filesystem::path& dir, ClassId c);
void store_cached(const std::filesystem::path& dir, const HookCensus& c);

}  // namespace hooklab
