// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include "heckecount/cli/verify.hpp"
#include "heckecount/error.hpp"
#include "heckecount/localsys/localsys.hpp"

#include "../support/weyl.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace hc;

namespace {

int failures = 0;

void line(int n, const verify::Check& c, const std::string& extra = "")
{
    if (!c.pass)
        ++failures;
    std::printf("criterion %2d: %s  %s (%s, %.2fs)%s\n", n, c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str(),
                c.seconds, extra.c_str());
    if (!c.pass) {
        std::istringstream in(c.report);
        for (std::string l; std::getline(in, l);)
            if (l.rfind("FAIL", 0) == 0)
                std::printf("              %s\n", l.c_str());
    }
    std::fflush(stdout);
}

verify::Check within(verify::Check c, double limit)
{
    if (c.seconds > limit) {
        c.pass = false;
        c.detail += ", over the " + std::to_string(static_cast<int>(limit)) + "s budget";
    }
    return c;
}

const std::vector<std::uint64_t> deg2_primes{2, 3, 5, 7, 11, 13};

verify::Check characters()
{
    verify::Check c;
    c.name = "symplectic Jacobi-Trudi against the Weyl alternant and dimension";
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240607);
    int n = 0, bad = 0;
    for (unsigned g = 1; g <= 3; ++g)
        for (int i = 0; i < 120; ++i) {
            auto lam = testing::random_lambda(rng, g, 12);
            auto f = testing::random_frobenius(rng, g);
            localsys::EigenvalueData d(f.q, f.powersums());
            ++n;
            if (BigRat(localsys::sp_character(lam, d)) != testing::weyl_character(lam, f))
                ++bad;
        }
    int dims = 0;
    for (int i = 0; i < 20; ++i) {
        unsigned g = 1 + static_cast<unsigned>(rng() % 3);
        auto lam = testing::random_lambda(rng, g, 15);
        localsys::EigenvalueData ones(BigInt(1), std::vector<BigInt>(g, BigInt(2 * g)));
        ++dims;
        if (localsys::sp_character(lam, ones) != testing::weyl_dimension(lam))
            ++bad;
    }
    c.pass = bad == 0;
    c.detail = std::to_string(n) + " alternant and " + std::to_string(dims) + " dimension instances, " +
               std::to_string(bad) + " mismatches";
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

std::string deterministic_reports(unsigned threads)
{
    hecke::CensusStore store({}, threads);
    return verify::g1_weight_table(store).report + verify::siegel2_goldens(store, deg2_primes).report +
           verify::siegel3_goldens(store, {2, 3}).report;
}

} // namespace

int main()
{
    const auto data = verify::default_data_dir();
    hecke::CensusStore store({}, 1);

    {
        hecke::CensusStore fresh({}, 1);
        line(1, within(verify::g1_weight_table(fresh), 1.0));
    }
    line(2, within(verify::sl2_oracle(store, 40, 31, 199), 60.0));
    {
        hecke::CensusStore fresh({}, 1);
        auto small = verify::siegel2_goldens(fresh, {2, 3, 5, 7});
        auto c = verify::siegel2_goldens(fresh, deg2_primes);
        c.pass = c.pass && small.seconds < 60.0 && c.seconds + small.seconds < 1200.0;
        char buf[64];
        std::snprintf(buf, sizeof buf, " [p <= 7: %.2fs]", small.seconds);
        line(3, c, buf);
    }
    line(4, verify::siegel2_properties(store, 9, 10, 7));
    line(5, within(verify::siegel3_goldens(store, {2, 3}), 2700.0));
    line(6, verify::motive_identity_11_5_2(store));
    line(7, verify::saito_kurokawa(store, 13));
    line(8, verify::harder_mod41(store, 13));
    line(9, verify::harder_mod199(store, data / "S_2_1_14.txt"));
    line(10, characters());
    line(11, verify::masses(199, {3, 5}));
    line(12, verify::picard_properties(store, {7, 13, 19}, data / "picard_phi.txt"));
    {
        verify::Check c;
        c.name = "reports for criteria 1, 3, 5 identical with 1, 2 and 8 threads";
        auto t0 = std::chrono::steady_clock::now();
        try {
            std::string r1 = deterministic_reports(1);
            std::string r2 = deterministic_reports(2);
            std::string r8 = deterministic_reports(8);
            c.pass = !r1.empty() && r1 == r2 && r1 == r8;
            c.detail = std::to_string(r1.size()) + " bytes compared";
        } catch (const Error& e) {
            c.detail = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        line(13, c);
    }
    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
