#pragma once

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "hyperdeg/common.hpp"

namespace hyperdeg {

struct CacheConfig {
    std::string dir;       // empty disables caching
    bool enabled = false;

    static CacheConfig from_environment() {
        CacheConfig c;
        if (const char* env = std::getenv("HYPERDEG_CACHE")) {
            c.dir = env;
            c.enabled = !c.dir.empty();
        }
        return c;
    }
};

struct CacheStats {
    int hits = 0;
    int misses = 0;
    int rebuilds = 0;  // digest mismatches
};

namespace detail {
inline std::string digest_hex(const std::string& payload) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(payload)));
    return buf;
}
}  // namespace detail

// Returns the cached payload for `key` when its digest validates; otherwise
// builds, stores, and returns it.  A corrupt entry triggers a rebuild with a
// warning rather than an error.
inline std::string cache_get_or_build(const CacheConfig& cfg, const std::string& key,
                                      const std::function<std::string()>& build,
                                      CacheStats* stats = nullptr) {
    if (!cfg.enabled) {
        if (stats) ++stats->misses;
        return build();
    }
    namespace fs = std::filesystem;
    fs::create_directories(cfg.dir);
    fs::path file = fs::path(cfg.dir) / (key + ".cache");
    if (fs::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        std::string header;
        std::getline(in, header);
        std::stringstream rest;
        rest << in.rdbuf();
        std::string payload = rest.str();
        const std::string prefix = "hyperdeg-cache v1 digest=";
        if (header.rfind(prefix, 0) == 0 &&
            header.substr(prefix.size()) == detail::digest_hex(payload)) {
            if (stats) ++stats->hits;
            return payload;
        }
        std::cerr << "warning: cache entry " << file.string() << " is corrupt; rebuilding\n";
        if (stats) ++stats->rebuilds;
    } else if (stats) {
        ++stats->misses;
    }
    std::string payload = build();
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << "hyperdeg-cache v1 digest=" << detail::digest_hex(payload) << "\n" << payload;
    return payload;
}

}  // namespace hyperdeg
