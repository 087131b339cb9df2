#include "heckecount/hecke/store.hpp"

#include "heckecount/error.hpp"

namespace hc::hecke {

using census::Census;
using census::Family;

CensusStore::CensusStore(std::optional<std::filesystem::path> cache_dir, unsigned threads)
    : cache_dir_(std::move(cache_dir)), threads_(threads == 0 ? 1 : threads)
{
}

Census CensusStore::build(Family f, std::uint64_t q)
{
    census::BuildOptions opt;
    opt.threads = threads_;
    switch (f) {
    case Family::g1:
        return census::build_census_g1(q, opt);
    case Family::g2:
        return census::build_census_g2(q, false, opt);
    case Family::g3_quartic:
    case Family::g3_hyp: {
        auto g3 = census::build_census_g3(q, false, opt);
        // keep the sibling too; both come out of one run
        auto other = f == Family::g3_quartic ? std::move(g3.hyperelliptic) : std::move(g3.quartic);
        Family of = f == Family::g3_quartic ? Family::g3_hyp : Family::g3_quartic;
        persist(of, q, other);
        censuses_[{of, q}] = std::make_unique<Census>(std::move(other));
        return f == Family::g3_quartic ? std::move(g3.quartic) : std::move(g3.hyperelliptic);
    }
    case Family::picard:
        return census::build_census_picard(q, opt);
    }
    throw InvalidArgument("unknown family");
}

void CensusStore::persist(Family f, std::uint64_t q, const Census& c)
{
    if (!cache_dir_)
        return;
    std::filesystem::create_directories(*cache_dir_);
    census::save_census(c, *cache_dir_ / census::cache_name(f, q, c.normalization, false));
}

const Census& CensusStore::get(Family f, std::uint64_t q)
{
    std::lock_guard lock(mu_);
    auto key = std::make_pair(f, q);
    if (auto it = censuses_.find(key); it != censuses_.end())
        return *it->second;
    std::optional<std::filesystem::path> path;
    if (cache_dir_)
        path = *cache_dir_ / census::cache_name(f, q, census::default_normalization(f, q), false);
    if (path && std::filesystem::exists(*path)) {
        censuses_[key] = std::make_unique<Census>(census::load_census(*path));
        return *censuses_[key];
    }
    Census c = build(f, q);
    persist(f, q, c);
    censuses_[key] = std::make_unique<Census>(std::move(c));
    return *censuses_[key];
}

const Census& CensusStore::g1(std::uint64_t q) { return get(Family::g1, q); }
const Census& CensusStore::g2(std::uint64_t q) { return get(Family::g2, q); }
const Census& CensusStore::quartic(std::uint64_t q) { return get(Family::g3_quartic, q); }
const Census& CensusStore::hyperelliptic3(std::uint64_t q) { return get(Family::g3_hyp, q); }
const Census& CensusStore::picard(std::uint64_t q) { return get(Family::picard, q); }

const localsys::ClassStream& CensusStore::a2(std::uint64_t q)
{
    std::lock_guard lock(mu_);
    auto& slot = a2_[q];
    if (!slot)
        slot = std::make_unique<localsys::ClassStream>(localsys::assemble_A2(g2(q), g1(q), g1(q * q)));
    return *slot;
}

const localsys::ClassStream& CensusStore::a3(std::uint64_t q)
{
    std::lock_guard lock(mu_);
    auto& slot = a3_[q];
    if (!slot)
        slot = std::make_unique<localsys::ClassStream>(localsys::assemble_A3(
            quartic(q), hyperelliptic3(q), g2(q), g1(q), g1(q * q), g1(q * q * q)));
    return *slot;
}

motives::TraceProvider CensusStore::provider(std::uint64_t q)
{
    motives::TraceProvider p;
    p.q = q;
    p.s1 = [this, q](int n) -> BigInt {
        std::lock_guard lock(mu_);
        auto key = std::make_pair(q, n);
        if (auto it = s1_.find(key); it != s1_.end())
            return it->second;
        BigInt v = -1 - localsys::ec_trace_A1(n - 2, g1(q));
        s1_[key] = v;
        return v;
    };
    return p;
}

std::vector<std::string> CensusStore::provenance(std::uint64_t q) const
{
    auto over = [q](std::uint64_t r) {
        if (q == 0)
            return true;
        for (std::uint64_t x = q; x <= r; x *= q)
            if (x == r)
                return true;
        return false;
    };
    std::vector<std::string> out;
    for (const auto& [key, c] : censuses_)
        if (over(key.second))
                out.push_back(std::string(census::family_tag(key.first)) + ":q" + std::to_string(key.second) + ":v" +
                          std::to_string(c->version));
    return out;
}

} // namespace hc::hecke
