#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace higgs::cache {

/// Results are keyed by (command, params, code version); a key change --
/// including a version bump -- is a miss.
struct Key {
  std::string command;
  nlohmann::json params;
  std::string version;

  nlohmann::json to_json() const;
  /// Content-addressed file name derived from the canonical key encoding.
  std::string filename() const;
};

/// Stored value for the key, or nullopt on miss.  A corrupt or mismatched
/// entry warns on stderr and reports a miss so the caller recomputes and
/// overwrites.
std::optional<nlohmann::json> get(const std::filesystem::path& dir, const Key& key);

/// Atomic store: write to a temporary file in dir, then rename.
void put(const std::filesystem::path& dir, const Key& key, const nlohmann::json& value);

}  // namespace higgs::cache
