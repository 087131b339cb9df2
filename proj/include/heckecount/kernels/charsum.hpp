#pragma once

#include "heckecount/exactnum/field.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace hc::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
Isa detected_isa();
// Current dispatch target. HECKECOUNT_FORCE_SCALAR=1 pins it to scalar.
Isa active_isa();
void set_active_isa(Isa isa); // testing hook; clamps to what the CPU supports

// Coordinates of x^k in the F_p-basis of F_{p^ext}, laid out [k][j][x] so
// that one (k, j) row is contiguous across all field elements x.
struct PowerTable {
    std::uint32_t p = 0;
    std::uint32_t ext = 0;
    std::uint32_t max_degree = 0;
    std::uint32_t size = 0; // p^ext
    std::vector<std::int32_t> coords;

    const std::int32_t* row(unsigned k, unsigned j) const
    {
        return coords.data() + (static_cast<std::size_t>(k) * ext + j) * size;
    }
};

// field must be a prime-field extension F_{p^ext} (field.n() == ext over F_p).
PowerTable make_power_table(const FieldCtx& field, unsigned max_degree);

using CodeCounts = std::array<std::uint64_t, 4>;

// For f(x) = sum coeffs[k] x^k with coeffs in F_p (0 <= c < p), counts how
// many x in F_{p^ext} have code_table[f(x)] == c for c = 0..3.
// coeffs.size() must be <= max_degree + 1; code_table has p^ext entries.
void charsum_counts(const PowerTable& table, std::span<const std::int32_t> coeffs,
                    std::span<const std::int32_t> code_table, CodeCounts& counts);

void charsum_counts_scalar(const PowerTable& table, std::span<const std::int32_t> coeffs,
                           std::span<const std::int32_t> code_table, CodeCounts& counts,
                           std::uint32_t begin, std::uint32_t end);
void charsum_counts_avx2(const PowerTable& table, std::span<const std::int32_t> coeffs,
                         std::span<const std::int32_t> code_table, CodeCounts& counts);

} // namespace hc::kernels
