#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "core/padic.hpp"

namespace iwk {

// FNV-1a 64-bit digest, used as the integrity check on cache payloads.
std::uint64_t fnv1a64(const std::string& bytes);

// On-disk memo store. Entries are JSON files named by key; each wraps its
// payload with a format version and an FNV-1a digest. Corrupt or
// version-skewed entries are discarded and rebuilt, never trusted. Writes go
// through a temp file and rename under a process-wide lock (single writer).
// With no directory configured every call is a miss and store() is a no-op,
// so results are identical with and without a cache.
class CacheStore {
  public:
    static CacheStore& instance();

    void set_directory(const std::string& dir);
    std::string directory() const;

    std::optional<std::string> load(const std::string& key);
    void store(const std::string& key, const std::string& payload);

  private:
    CacheStore();
    mutable std::mutex mu_;
    std::string dir_;
};

// Teichmuller lift table for r = 1..p-1 mod p^precision, memoized in memory
// and through the cache store. Truncating a higher-precision table is exact,
// so one entry per prime suffices.
std::vector<mpz_class> teichmuller_table(long p, int precision);

} // namespace iwk
