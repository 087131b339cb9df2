#include "heckecount/kernels/charsum.hpp"

#include <immintrin.h>

namespace hc::kernels {

// Eight field elements per step. Residues are reduced with a float
// reciprocal estimate plus one correction, exact because every
// accumulator stays below 2^24.
void charsum_counts_avx2(const PowerTable& table, std::span<const std::int32_t> coeffs,
                         std::span<const std::int32_t> code_table, CodeCounts& counts)
{
    const std::int32_t p = static_cast<std::int32_t>(table.p);
    const unsigned nk = static_cast<unsigned>(coeffs.size());
    const std::uint32_t body = table.size & ~7u;

    const __m256i vp = _mm256_set1_epi32(p);
    const __m256i vpm1 = _mm256_set1_epi32(p - 1);
    const __m256i vzero = _mm256_setzero_si256();
    const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
    __m256i vc[16];
    for (unsigned k = 0; k < nk && k < 16; ++k)
        vc[k] = _mm256_set1_epi32(coeffs[k]);
    const __m256i code_eq[4] = {_mm256_set1_epi32(0), _mm256_set1_epi32(1), _mm256_set1_epi32(2),
                                _mm256_set1_epi32(3)};
    std::uint64_t local[4] = {0, 0, 0, 0};

    if (nk > 16) {
        charsum_counts_scalar(table, coeffs, code_table, counts, 0, table.size);
        return;
    }

    for (std::uint32_t x = 0; x < body; x += 8) {
        __m256i idx = vzero;
        std::int32_t scale = 1;
        for (unsigned j = 0; j < table.ext; ++j) {
            __m256i acc = vzero;
            for (unsigned k = 0; k < nk; ++k) {
                __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table.row(k, j) + x));
                acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(v, vc[k]));
            }
            __m256 qf = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(acc), vinv));
            __m256i r = _mm256_sub_epi32(acc, _mm256_mullo_epi32(_mm256_cvttps_epi32(qf), vp));
            // r in [-p, 2p): fold back into [0, p)
            r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(vzero, r), vp));
            r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vpm1), vp));
            idx = _mm256_add_epi32(idx, _mm256_mullo_epi32(r, _mm256_set1_epi32(scale)));
            scale *= p;
        }
        __m256i codes = _mm256_i32gather_epi32(code_table.data(), idx, 4);
        for (int c = 0; c < 4; ++c) {
            int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(codes, code_eq[c])));
            local[c] += static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(mask)));
        }
    }
    for (int c = 0; c < 4; ++c)
        counts[c] += local[c];
    charsum_counts_scalar(table, coeffs, code_table, counts, body, table.size);
}

} // namespace hc::kernels
