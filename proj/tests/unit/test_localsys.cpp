#include <doctest.h>

#include "../support/weyl.hpp"
#include "heckecount/census/builders.hpp"
#include "heckecount/error.hpp"
#include "heckecount/localsys/localsys.hpp"
#include "heckecount/qexpansion/qexpansion.hpp"

using namespace hc;
using namespace hc::localsys;

TEST_CASE("eigenvalue data from point counts")
{
    auto d = eigen_data(3, {BigInt(4), BigInt(16)});
    CHECK(d.genus() == 2);
    CHECK(d.powersums() == std::vector<BigInt>{0, -6});
    CHECK(d.elementary()[1] == 0);
    CHECK(d.elementary()[2] == 3);
    CHECK(d.elementary()[4] == 9); // e_{2g} = q^g
    CHECK_THROWS_AS(eigen_data(3, {BigInt(100), BigInt(16)}), IntegrityError);
    CHECK_THROWS_AS(eigen_data(3, {}), InvalidArgument);
}

TEST_CASE("small characters in closed form")
{
    EigenvalueData d1(2, {BigInt(0)});
    CHECK(sp_character({10}, d1) == -32);
    CHECK(sp_character({0}, d1) == 1);
    CHECK(sp_character({1}, d1) == 0);

    auto d2 = eigen_data(5, {BigInt(7), BigInt(31)});
    CHECK(sp_character({1, 0}, d2) == d2.powersums()[0]);
    CHECK(sp_character({1, 1}, d2) == d2.elementary()[2] - 5);
    CHECK_THROWS_AS(sp_character({0, 1}, d2), InvalidArgument);
    CHECK_THROWS_AS(sp_character({1}, d2), InvalidArgument);
}

TEST_CASE("characters agree with the Weyl alternant")
{
    std::mt19937_64 rng(77);
    for (unsigned g = 1; g <= 3; ++g)
        for (int i = 0; i < 100; ++i) {
            auto lam = testing::random_lambda(rng, g, 10);
            auto f = testing::random_frobenius(rng, g);
            EigenvalueData d(f.q, f.powersums());
            CAPTURE(g);
            CHECK(BigRat(sp_character(lam, d)) == testing::weyl_character(lam, f));
        }
}

TEST_CASE("character at the identity is the Weyl dimension")
{
    CHECK(testing::weyl_dimension({1, 0}) == 4);
    CHECK(testing::weyl_dimension({1, 1}) == 5);
    CHECK(testing::weyl_dimension({1, 1, 1}) == 14);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        unsigned g = 1 + static_cast<unsigned>(rng() % 3);
        auto lam = testing::random_lambda(rng, g, 14);
        EigenvalueData ones(BigInt(1), std::vector<BigInt>(g, BigInt(2 * g)));
        CHECK(sp_character(lam, ones) == testing::weyl_dimension(lam));
    }
}

TEST_CASE("quadratic twist multiplies a character by (-1)^|lambda|")
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 60; ++i) {
        unsigned g = 1 + static_cast<unsigned>(rng() % 3);
        auto lam = testing::random_lambda(rng, g, 9);
        auto f = testing::random_frobenius(rng, g);
        EigenvalueData d(f.q, f.powersums());
        int w = 0;
        for (int x : lam)
            w += x;
        CHECK(sp_character(lam, d.negated()) == (w % 2 ? -1 : 1) * sp_character(lam, d));
    }
}

TEST_CASE("genus-1 compactly supported traces")
{
    for (std::uint64_t q : {5, 7, 17}) {
        auto c = census::build_census_g1(q);
        CHECK(ec_trace_A1(0, c) == BigInt(static_cast<unsigned long>(q)));
        for (int a = 1; a <= 11; a += 2)
            CHECK(ec_trace_A1(a, c) == 0);
    }
    CHECK(ec_trace_A1(10, census::build_census_g1(2)) == 23);
    // e_c(A_1, V_a) = -S[a+2] - 1 for even a >= 2
    for (std::uint64_t p : {2, 3, 5, 7, 11})
        for (int a = 2; a <= 24; a += 2) {
            CAPTURE(p);
            CAPTURE(a);
            CHECK(ec_trace_A1(a, census::build_census_g1(p)) == -qexp::hecke_trace(a + 2, p) - 1);
        }
    CHECK_THROWS_AS(ec_trace_A1(0, census::build_census_g2(3, false)), InvalidArgument);
}

TEST_CASE("odd total weight sums to zero on A_2")
{
    for (std::uint64_t q : {3, 5}) {
        auto s = assemble_A2(census::build_census_g2(q, false), census::build_census_g1(q),
                             census::build_census_g1(q * q));
        CHECK(total_mass(s) == BigRat(ipow(BigInt(static_cast<unsigned long>(q)), 3) +
                                      ipow(BigInt(static_cast<unsigned long>(q)), 2)));
        for (auto lam : std::vector<std::vector<int>>{{1, 0}, {3, 0}, {2, 1}, {5, 2}})
            CHECK(weighted_sum(lam, s) == 0);
        CHECK_THROWS_AS(assemble_A2(census::build_census_g2(q, false), census::build_census_g1(q),
                                    census::build_census_g1(q)),
                        InvalidArgument);
    }
}
