#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace surgery::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kInvariant = 2 };

/// One JSON file per (kind, params) under the cache directory. A file written by another
/// tool_version, or for different params, counts as a miss.
class Cache {
 public:
  explicit Cache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}
  bool enabled() const { return dir_.has_value(); }

  std::optional<nlohmann::json> load(const std::string& kind, const nlohmann::json& params) const;
  void store(const std::string& kind, const nlohmann::json& params, const nlohmann::json& results) const;
  std::filesystem::path path_for(const std::string& kind, const nlohmann::json& params) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

/// args excludes the program name. env_cache is the value of SURGERY_OBSTRUCTOR_CACHE, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* env_cache = nullptr);

}  // namespace surgery::cli
