#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace chss {

uint64_t fnv1a64(const std::string& s);

// Content-addressed value store.  Entries are keyed by a schema-versioned
// string; a stored file echoes its key and is recomputed on any mismatch.
// I/O failures degrade to in-memory operation.
class Cache {
 public:
  Cache() = default;
  explicit Cache(std::string dir);

  std::optional<std::string> get(const std::string& key);
  void put(const std::string& key, const std::string& value);

  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
  std::map<std::string, std::string> mem_;
  bool io_ok_ = true;
};

inline const char* kCacheSchema = "chss-cache-v1";

}  // namespace chss
