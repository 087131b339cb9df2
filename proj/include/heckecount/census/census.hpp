#pragma once

#include "heckecount/exactnum/bigint.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hc::census {

enum class Family { g1, g2, g3_quartic, g3_hyp, picard };

const char* family_tag(Family f);
Family parse_family(std::string_view tag);
// Number of integers per record: the genus, or six for picard (re/im of p_1..p_3 on W).
unsigned powersum_arity(Family f);
unsigned genus(Family f);

inline constexpr int format_version = 1;

struct FrobeniusClass {
    std::vector<std::int64_t> powersums; // a_i = q^i + 1 - N_i
    std::int32_t aut = 0;                // 0 when absent
    bool twistable = false;

    auto operator<=>(const FrobeniusClass&) const = default;
};

// Histogram of Frobenius data. Without aut data a count is a number of family
// members, to be divided by the normalization; with aut data it is a number of
// isomorphism classes, each of mass 1/aut.
struct Census {
    std::uint64_t q = 0;
    Family family = Family::g1;
    BigInt normalization = 1;
    int version = format_version;
    std::map<FrobeniusClass, std::int64_t> entries;

    bool has_aut() const;
    BigRat mass(const FrobeniusClass& c, std::int64_t count) const;
    BigRat total_mass() const;
    void add(const FrobeniusClass& c, std::int64_t count);
    void merge(const Census& other); // same q, family, normalization

    bool operator==(const Census&) const = default;
};

std::string serialize(const Census& c);
Census parse_census(std::string_view text);
void save_census(const Census& c, const std::filesystem::path& path);
Census load_census(const std::filesystem::path& path);

// Cache file name keyed by family, q, format version and normalization.
std::string cache_name(Family f, std::uint64_t q, const BigInt& normalization, bool with_aut);

} // namespace hc::census
