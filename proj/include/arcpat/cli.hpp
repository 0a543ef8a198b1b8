#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace arcpat::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCacheEnv = "ARCPAT_CACHE";

enum Exit { ok = 0, verification_failed = 1, usage = 2, resource_cap = 3 };

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string version = kVersion;
    double wall_seconds = 0;
    int cache_hits = 0;
    std::string cache_spot_check = "none";  // none | ok | mismatch
};

// Sequence cache: one JSON file of decimal strings keyed by (family, avoid set, n, k).
class Cache {
public:
    explicit Cache(std::string path);

    static std::string key(const std::string& family, const std::string& avoid, int n, int k);
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value);
    std::vector<std::string> keys() const;
    void erase(const std::string& key);
    // Write to a temporary file in the same directory, then rename over the target.
    void save() const;
    bool dirty() const { return dirty_; }

private:
    std::string path_;
    std::map<std::string, std::string> entries_;
    bool dirty_ = false;
};

// Runs one command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcpat::cli
