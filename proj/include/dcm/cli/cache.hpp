#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include <json.hpp>

#include "dcm/classical.hpp"
#include "dcm/histogram.hpp"

namespace dcm::cli {

/// Identifies one enumerated cell P sigma_r P.
struct CacheKey {
    int n = 0;
    int r_coset = 0;
    Family family = Family::Orthogonal;
};

/// Cache document: parameters, field degree and modulus, and the histogram
/// as { "<beta bits>": "<count>" } with zero counts included.
nlohmann::json cache_entry_json(const CacheKey& key, const TraceHistogram& h);

/// Parses a cache document for the given field. Returns nullopt if the
/// entry belongs to different parameters or another modulus.
std::optional<TraceHistogram> parse_cache_entry(const nlohmann::json& doc, const CacheKey& key,
                                                const FieldRef& field);

/// Directory of cache documents, one file per (family, n, r, q). Writes go
/// through a temporary file and rename, guarded by an exclusive lock file;
/// a writer that finds the lock held skips the write.
class HistogramCache {
public:
    explicit HistogramCache(std::filesystem::path dir);

    std::filesystem::path path_for(const CacheKey& key, const Field& field) const;
    std::optional<TraceHistogram> load(const CacheKey& key, const FieldRef& field) const;
    /// Returns false if another writer holds the lock.
    bool store(const CacheKey& key, const TraceHistogram& h) const;

private:
    std::filesystem::path dir_;
};

}  // namespace dcm::cli
