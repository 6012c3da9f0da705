#include "ringgraph/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <unistd.h>

namespace ringgraph {
namespace {

// FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::filesystem::path ResultCache::default_dir() {
  if (const char* env = std::getenv("RINGGRAPH_CACHE"); env != nullptr && *env != '\0') return env;
  return ".ringgraph-cache";
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << fnv1a(key) << ".json";
  return dir_ / name.str();
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const auto entry = nlohmann::json::parse(in);
    if (entry.at("key").get<std::string>() != key) return std::nullopt;
    return entry.at("value").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const std::string& value) const {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(dir_);
  const auto target = path_for(key);
  auto temp = target;
  temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << nlohmann::json{{"key", key}, {"value", value}}.dump() << "\n";
    if (!out) throw std::runtime_error("cache: cannot write " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

std::string cache_key(const std::string& canonical_ring, bool unital) {
  return canonical_ring + "|" + (unital ? "unital" : "nonunital") + "|" + kArtifactVersion;
}

}  // namespace ringgraph
