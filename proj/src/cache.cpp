#include "higgscoh/cache.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>

namespace higgs::cache {

namespace fs = std::filesystem;

namespace {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

nlohmann::json Key::to_json() const {
  return {{"command", command}, {"params", params}, {"version", version}};
}

std::string Key::filename() const {
  return command + "-" + fnv1a_hex(to_json().dump()) + ".json";
}

std::optional<nlohmann::json> get(const fs::path& dir, const Key& key) {
  fs::path file = dir / key.filename();
  std::error_code ec;
  if (!fs::exists(file, ec)) return std::nullopt;

  std::ifstream in(file);
  nlohmann::json entry = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (entry.is_discarded() || !entry.is_object() || !entry.contains("key") ||
      !entry.contains("value") || entry["key"] != key.to_json()) {
    std::cerr << "warning: corrupt cache entry " << file.string()
              << ", recomputing\n";
    return std::nullopt;
  }
  return entry["value"];
}

void put(const fs::path& dir, const Key& key, const nlohmann::json& value) {
  fs::create_directories(dir);
  fs::path file = dir / key.filename();
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out)
      throw std::runtime_error("cache: cannot write " + tmp.string());
    out << nlohmann::json{{"key", key.to_json()}, {"value", value}}.dump(2)
        << "\n";
  }
  fs::rename(tmp, file);
}

}  // namespace higgs::cache
