#include "dcm/cli/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <fstream>
#include <string>
#include <utility>

#include "dcm/error.hpp"

namespace dcm::cli {

nlohmann::json cache_entry_json(const CacheKey& key, const TraceHistogram& h) {
    nlohmann::json hist = nlohmann::json::object();
    for (std::uint32_t b = 0; b < h.field().size(); ++b) hist[std::to_string(b)] = h[b].get_str();
    return {{"n", key.n},
            {"r_coset", key.r_coset},
            {"family", std::string(family_name(key.family))},
            {"q", std::to_string(h.field().size())},
            {"degree", h.field().degree()},
            {"modulus", std::to_string(h.field().modulus())},
            {"histogram", hist}};
}

std::optional<TraceHistogram> parse_cache_entry(const nlohmann::json& doc, const CacheKey& key,
                                                const FieldRef& field) {
    try {
        if (doc.at("n").get<int>() != key.n || doc.at("r_coset").get<int>() != key.r_coset ||
            doc.at("family").get<std::string>() != family_name(key.family) ||
            doc.at("degree").get<int>() != field->degree() ||
            doc.at("modulus").get<std::string>() != std::to_string(field->modulus()))
            return std::nullopt;
        const auto& hist = doc.at("histogram");
        if (hist.size() != field->size()) return std::nullopt;
        TraceHistogram h(field);
        for (std::uint32_t b = 0; b < field->size(); ++b) h[b] = Int(hist.at(std::to_string(b)).get<std::string>());
        return h;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

HistogramCache::HistogramCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path HistogramCache::path_for(const CacheKey& key, const Field& field) const {
    return dir_ / ("hist_" + std::string(family_name(key.family)) + "_n" + std::to_string(key.n) + "_r" +
                   std::to_string(key.r_coset) + "_q" + std::to_string(field.size()) + ".json");
}

std::optional<TraceHistogram> HistogramCache::load(const CacheKey& key, const FieldRef& field) const {
    std::ifstream in(path_for(key, *field));
    if (!in) return std::nullopt;
    const auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) return std::nullopt;
    return parse_cache_entry(doc, key, field);
}

bool HistogramCache::store(const CacheKey& key, const TraceHistogram& h) const {
    std::filesystem::create_directories(dir_);
    const auto target = path_for(key, h.field());
    const auto lock = std::filesystem::path(target.string() + ".lock");
    const int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0) return false;
    ::close(fd);
    const auto tmp = std::filesystem::path(target.string() + ".tmp");
    {
        std::ofstream out(tmp);
        out << cache_entry_json(key, h).dump(2) << '\n';
        if (!out) {
            std::filesystem::remove(lock);
            throw Error("failed to write cache file " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
    std::filesystem::remove(lock);
    return true;
}

}  // namespace dcm::cli
