#pragma once

#include "heckecount/census/builders.hpp"
#include "heckecount/localsys/localsys.hpp"
#include "heckecount/motives/motives.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace hc::hecke {

// Builds censuses on demand, memoizes them, and optionally persists them in a
// cache directory keyed by family, q, format version and normalization.
class CensusStore {
public:
    explicit CensusStore(std::optional<std::filesystem::path> cache_dir = {}, unsigned threads = 1);

    const census::Census& g1(std::uint64_t q);
    const census::Census& g2(std::uint64_t q);
    const census::Census& quartic(std::uint64_t q);
    const census::Census& hyperelliptic3(std::uint64_t q);
    const census::Census& picard(std::uint64_t q);

    const localsys::ClassStream& a2(std::uint64_t q);
    const localsys::ClassStream& a3(std::uint64_t q);

    // S[n] via the genus-1 census at q.
    motives::TraceProvider provider(std::uint64_t q);

    unsigned threads() const { return threads_; }
    const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }
    // "tag:q:version" for every census loaded so far over F_q and its
    // extensions (all of them for q = 0).
    std::vector<std::string> provenance(std::uint64_t q = 0) const;

private:
    const census::Census& get(census::Family f, std::uint64_t q);
    census::Census build(census::Family f, std::uint64_t q);
    void persist(census::Family f, std::uint64_t q, const census::Census& c);

    std::optional<std::filesystem::path> cache_dir_;
    unsigned threads_;
    std::recursive_mutex mu_;
    std::map<std::pair<census::Family, std::uint64_t>, std::unique_ptr<census::Census>> censuses_;
    std::map<std::uint64_t, std::unique_ptr<localsys::ClassStream>> a2_, a3_;
    std::map<std::pair<std::uint64_t, int>, BigInt> s1_;
};

} // namespace hc::hecke
