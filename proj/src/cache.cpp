#include "chss/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace chss {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    io_ok_ = false;
    dir_.clear();
  }
}

std::optional<std::string> Cache::get(const std::string& key) {
  std::string full = std::string(kCacheSchema) + "|" + key;
  auto it = mem_.find(full);
  if (it != mem_.end()) return it->second;
  if (dir_.empty() || !io_ok_) return std::nullopt;
  std::ostringstream name;
  name << dir_ << "/" << std::hex << fnv1a64(full) << ".entry";
  std::ifstream in(name.str());
  if (!in) return std::nullopt;
  std::string stored_key;
  if (!std::getline(in, stored_key) || stored_key != full) return std::nullopt;  // corrupt → recompute
  std::ostringstream body;
  body << in.rdbuf();
  std::string v = body.str();
  mem_[full] = v;
  return v;
}

void Cache::put(const std::string& key, const std::string& value) {
  std::string full = std::string(kCacheSchema) + "|" + key;
  mem_[full] = value;
  if (dir_.empty() || !io_ok_) return;
  std::ostringstream name;
  name << dir_ << "/" << std::hex << fnv1a64(full) << ".entry";
  std::ofstream out(name.str(), std::ios::trunc);
  if (!out) {
    io_ok_ = false;
    return;
  }
  out << full << "\n" << value;
}

}  // namespace chss
