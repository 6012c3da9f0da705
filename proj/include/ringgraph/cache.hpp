#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace ringgraph {

inline constexpr const char* kArtifactVersion = "ringgraph-1.0.0";

// File-per-entry cache of serialized results. Writes go to a temporary file
// that is renamed into place, so readers never see partial entries.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // $RINGGRAPH_CACHE, or .ringgraph-cache in the working directory.
  static std::filesystem::path default_dir();

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& value) const;

  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

std::string cache_key(const std::string& canonical_ring, bool unital);

}  // namespace ringgraph
