#include <doctest.h>

#include "heckecount/exactnum/poly.hpp"
#include "heckecount/kernels/charsum.hpp"

#include <random>

using namespace hc;
using namespace hc::kernels;

namespace {

CodeCounts naive(const FieldCtx& F, const std::vector<std::int32_t>& coeffs, const std::vector<std::int32_t>& code)
{
    poly::Poly f(coeffs.begin(), coeffs.end());
    CodeCounts c{};
    for (Elem x = 0; x < F.q(); ++x)
        ++c[code[poly::eval(F, f, x)]];
    return c;
}

} // namespace

TEST_CASE("character-sum kernels agree with direct evaluation")
{
    std::mt19937_64 rng(3);
    const Isa saved = active_isa();
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 3}, {5, 2}, {7, 3}, {13, 2}, {31, 2}, {101, 1}}) {
        FieldCtx F(p, n);
        auto table = make_power_table(F, 8);
        CAPTURE(F.q());
        for (int t = 0; t < 20; ++t) {
            std::vector<std::int32_t> coeffs(1 + rng() % 9);
            for (auto& c : coeffs)
                c = static_cast<std::int32_t>(rng() % p);
            std::vector<std::int32_t> code(F.q());
            for (auto& c : code)
                c = static_cast<std::int32_t>(rng() % 4);
            CodeCounts want = naive(F, coeffs, code);

            CodeCounts scalar{};
            charsum_counts_scalar(table, coeffs, code, scalar, 0, table.size);
            CHECK(scalar == want);

            // split ranges merge to the same histogram
            CodeCounts split{};
            charsum_counts_scalar(table, coeffs, code, split, 0, table.size / 3);
            charsum_counts_scalar(table, coeffs, code, split, table.size / 3, table.size);
            CHECK(split == want);

            if (detected_isa() == Isa::avx2) {
                CodeCounts vec{};
                charsum_counts_avx2(table, coeffs, code, vec);
                CHECK(vec == want);
            }
            for (Isa isa : {Isa::scalar, Isa::avx2}) {
                set_active_isa(isa);
                CodeCounts d{};
                charsum_counts(table, coeffs, code, d);
                CHECK(d == want);
            }
        }
    }
    set_active_isa(saved);
}

TEST_CASE("dispatch never selects an unsupported instruction set")
{
    const Isa saved = active_isa();
    set_active_isa(Isa::avx2);
    if (detected_isa() == Isa::scalar)
        CHECK(active_isa() == Isa::scalar);
    else
        CHECK(active_isa() == Isa::avx2);
    set_active_isa(saved);
    CHECK(std::string(isa_name(Isa::scalar)) == "scalar");
}
