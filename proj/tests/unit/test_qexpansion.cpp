#include <doctest.h>

#include "heckecount/error.hpp"
#include "heckecount/motives/motives.hpp"
#include "heckecount/qexpansion/qexpansion.hpp"

#include <numeric>
#include <set>

using namespace hc;
using namespace hc::qexp;

TEST_CASE("Delta from the eta product")
{
    auto d = delta_expansion(10);
    CHECK(d.str(5) == "q - 24*q^2 + 252*q^3 - 1472*q^4 + 4830*q^5");
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[6] == -6048);
    CHECK(d.weight == 12);
}

TEST_CASE("Eisenstein series")
{
    CHECK(bernoulli(4) == BigRat(-1, 30));
    CHECK(bernoulli(6) == BigRat(1, 42));
    CHECK(bernoulli(12) == BigRat(-691, 2730));
    auto e4 = eisenstein_expansion(4, 5), e6 = eisenstein_expansion(6, 5);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
    CHECK(e6[1] == -504);
    CHECK(divisor_sigma(3, 2) == 9);
    for (int k = 4; k <= 20; k += 2)
        CHECK(eisenstein_expansion(k, 3)[0] == 1);
    CHECK_THROWS_AS(eisenstein_expansion(5, 5), InvalidArgument);
    CHECK_THROWS_AS(eisenstein_expansion(2, 5), InvalidArgument);
}

TEST_CASE("Delta is (E4^3 - E6^2)/1728 to every tested precision")
{
    for (int N : {5, 30, 120}) {
        auto e4 = eisenstein_expansion(4, N), e6 = eisenstein_expansion(6, N);
        auto rhs = scale(e4 * e4 * e4 - e6 * e6, BigRat(1, 1728));
        auto d = delta_expansion(N);
        for (int n = 0; n <= N; ++n)
            CHECK(rhs[n] == d[n]);
    }
}

TEST_CASE("tau(p) for p <= 199 against the product expansion")
{
    auto d = delta_expansion(199);
    // Ramanujan: tau(p)^2 <= 4 p^11 and tau(mn) = tau(m) tau(n) for coprime m, n
    for (int n = 2; n <= 199; ++n) {
        for (int m = 2; m * n <= 199; ++m)
            if (std::gcd(m, n) == 1)
                CHECK(d[m * n] == d[m] * d[n]);
    }
    CHECK(hecke_trace(12, 199) == d[199].get_num());
    CHECK(hecke_trace(12, 2) == -24);
}

TEST_CASE("cusp form bases")
{
    CHECK(cusp_basis(12, 5).size() == 1);
    CHECK(cusp_basis(22, 5).size() == 1);
    CHECK(cusp_basis(30, 5).size() == 2);
    CHECK(cusp_basis(14, 5).empty());
    for (int k = 12; k <= 60; k += 2)
        CHECK(static_cast<long>(cusp_basis(k, 10).size()) == motives::dim_cusp_sl2(k));
    auto b = cusp_basis(30, 8);
    CHECK(b[0][1] == 1);
    CHECK(b[0][2] == 0);
    CHECK(b[1][1] == 0);
    CHECK(b[1][2] == 1);
}

TEST_CASE("Hecke eigenvalues")
{
    CHECK(hecke_eigen(12, 2, 10) == std::vector<QuadInt>{QuadInt::rational(-24)});
    CHECK(hecke_eigen(22, 2, 10) == std::vector<QuadInt>{QuadInt::rational(-288)});
    auto ev = hecke_eigen(30, 2, 10);
    REQUIRE(ev.size() == 2);
    std::set<std::string> s{ev[0].str(), ev[1].str()};
    CHECK(s == std::set<std::string>{"4320+96*sqrt(51349)", "4320-96*sqrt(51349)"});
    CHECK_THROWS_AS(hecke_eigen(30, 5, 6), PrecisionError);
}

TEST_CASE("eigenforms are multiplicative")
{
    for (int k : {12, 16, 22, 24, 30}) {
        auto forms = eigenforms(k, 60);
        for (const auto& f : forms)
            for (int m = 2; m <= 7; ++m)
                for (int n = m + 1; m * n <= 60; ++n)
                    if (std::gcd(m, n) == 1)
                        CHECK(f.a(m * n) == f.a(m) * f.a(n));
    }
}
