#include "heckecount/kernels/charsum.hpp"

#include "heckecount/error.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace hc::kernels {

namespace {

Isa initial_isa()
{
    const char* force = std::getenv("HECKECOUNT_FORCE_SCALAR");
    if (force && std::strcmp(force, "0") != 0 && *force)
        return Isa::scalar;
    return detected_isa();
}

std::atomic<Isa>& active()
{
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

} // namespace

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa()
{
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2"))
        return Isa::avx2;
#endif
    return Isa::scalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa)
{
    if (isa == Isa::avx2 && detected_isa() != Isa::avx2)
        isa = Isa::scalar;
    active().store(isa, std::memory_order_relaxed);
}

PowerTable make_power_table(const FieldCtx& field, unsigned max_degree)
{
    PowerTable t;
    t.p = field.p();
    t.ext = field.n();
    t.max_degree = max_degree;
    t.size = field.q();
    t.coords.assign(static_cast<std::size_t>(max_degree + 1) * t.ext * t.size, 0);
    for (Elem x = 0; x < t.size; ++x) {
        Elem xk = 1;
        for (unsigned k = 0; k <= max_degree; ++k) {
            Elem v = xk;
            for (unsigned j = 0; j < t.ext; ++j) {
                t.coords[(static_cast<std::size_t>(k) * t.ext + j) * t.size + x] =
                    static_cast<std::int32_t>(v % t.p);
                v /= t.p;
            }
            xk = field.mul(xk, x);
        }
    }
    return t;
}

void charsum_counts_scalar(const PowerTable& table, std::span<const std::int32_t> coeffs,
                           std::span<const std::int32_t> code_table, CodeCounts& counts,
                           std::uint32_t begin, std::uint32_t end)
{
    const std::int32_t p = static_cast<std::int32_t>(table.p);
    const unsigned nk = static_cast<unsigned>(coeffs.size());
    for (std::uint32_t x = begin; x < end; ++x) {
        std::int64_t idx = 0, scale = 1;
        for (unsigned j = 0; j < table.ext; ++j) {
            std::int64_t acc = 0;
            for (unsigned k = 0; k < nk; ++k)
                acc += std::int64_t(coeffs[k]) * table.row(k, j)[x];
            idx += (acc % p) * scale;
            scale *= p;
        }
        ++counts[code_table[idx]];
    }
}

void charsum_counts(const PowerTable& table, std::span<const std::int32_t> coeffs,
                    std::span<const std::int32_t> code_table, CodeCounts& counts)
{
    if (coeffs.size() > table.max_degree + 1)
        throw InvalidArgument("polynomial degree exceeds power table");
    // the vector path needs every accumulator below 2^24
    const std::uint64_t bound = coeffs.size() * std::uint64_t(table.p - 1) * (table.p - 1);
    if (active_isa() == Isa::avx2 && bound < (1u << 24))
        charsum_counts_avx2(table, coeffs, code_table, counts);
    else
        charsum_counts_scalar(table, coeffs, code_table, counts, 0, table.size);
}

} // namespace hc::kernels
