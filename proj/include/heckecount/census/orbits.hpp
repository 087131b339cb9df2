#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace hc::census {

// v -> M v + t on F_p^N, with vectors indexed by sum v_i p^i.
// The map is compiled into per-chunk lookup tables of packed partial images.
class AffineAction {
public:
    using Apply = std::function<std::vector<std::uint32_t>(const std::vector<std::uint32_t>&)>;

    // apply must be affine over F_p; it is sampled at 0 and the unit vectors.
    AffineAction(std::uint32_t p, unsigned dim, const Apply& apply);

    std::uint64_t operator()(std::uint64_t index) const;

private:
    std::uint64_t pack(const std::vector<std::uint32_t>& v) const;

    std::uint32_t p_;
    unsigned dim_;
    unsigned bits_;
    unsigned chunk_;
    std::uint64_t chunk_size_;
    std::vector<std::vector<std::uint64_t>> tables_;
    std::uint64_t translation_;
    std::vector<std::vector<std::uint64_t>> decode_; // per byte
};

struct Orbit {
    std::uint64_t rep;  // smallest index in the orbit
    std::uint64_t size;
};

// Orbits of the group generated by gens on all p^dim vectors, sorted by rep.
std::vector<Orbit> orbits(std::uint32_t p, unsigned dim, const std::vector<AffineAction>& gens,
                          unsigned threads = 1);

std::vector<std::uint32_t> unpack_index(std::uint64_t index, std::uint32_t p, unsigned dim);
std::uint64_t pack_index(const std::vector<std::uint32_t>& v, std::uint32_t p);

} // namespace hc::census
