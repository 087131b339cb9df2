#include <doctest.h>

#include "heckecount/error.hpp"
#include "heckecount/motives/motives.hpp"

#include <random>
#include <tuple>

using namespace hc;
using namespace hc::motives;

namespace {

TraceProvider toy(std::uint64_t q)
{
    TraceProvider t;
    t.q = q;
    t.s1 = [](int n) -> BigInt { return BigInt(n * 7 - 3); };
    return t;
}

} // namespace

TEST_CASE("cusp form dimensions")
{
    CHECK(dim_cusp_sl2(2) == -1);
    CHECK(dim_cusp_sl2(4) == 0);
    CHECK(dim_cusp_sl2(12) == 1);
    CHECK(dim_cusp_sl2(14) == 0);
    CHECK(dim_cusp_sl2(22) == 1);
    CHECK(dim_cusp_sl2(26) == 1);
    CHECK(dim_cusp_sl2(36) == 3);
    CHECK(dim_cusp_sl2(68) == 5);
    CHECK(dim_cusp_sl2(84) == 7);
    CHECK_THROWS_AS(dim_cusp_sl2(13), InvalidArgument);
}

TEST_CASE("genus-2 correction terms")
{
    auto L = [](int m) { return MotiveExpr::L(m); };
    auto S = [](int n) { return MotiveExpr::S({n}); };
    CHECK(e2_extra(32, 32) == 5 * L(34) + S(34));
    CHECK(e2_extra(32, 32).str() == "5*L^34 + S[34]");
    CHECK(e2_extra(18, 4) == -(L(5) * (S(16) + 1)) + 2);
    CHECK(e2_extra(18, 14) == -3 * L(15) + S(16) + 1);
    CHECK(e2_extra(40, 40) == S(42) + MotiveExpr(7) * L(42));
    CHECK_THROWS_AS(e2_extra(5, 2), InvalidArgument);
    CHECK_THROWS_AS(e2_extra(2, 4), InvalidArgument);
}

TEST_CASE("S[2] is rewritten to -L-1")
{
    CHECK(MotiveExpr::S({2}) == -MotiveExpr::L(1) - 1);
    CHECK(trace(MotiveExpr::S({2}), toy(5)) == -6);
    CHECK(trace(MotiveExpr::L(7), toy(2)) == 128);
    CHECK(trace(MotiveExpr(1), toy(2)) == 1);
}

TEST_CASE("trace is a ring homomorphism")
{
    std::mt19937_64 rng(1);
    auto random_expr = [&]() {
        MotiveExpr e;
        for (int i = 0; i < 3; ++i) {
            MotiveExpr m = MotiveExpr::L(static_cast<int>(rng() % 5));
            if (rng() % 2)
                m = m * MotiveExpr::S({static_cast<int>(4 + 2 * (rng() % 8))});
            e += MotiveExpr(static_cast<long>(rng() % 11) - 5) * m;
        }
        return e;
    };
    auto t = toy(3);
    for (int i = 0; i < 100; ++i) {
        MotiveExpr x = random_expr(), y = random_expr();
        CHECK(trace(x + y, t) == trace(x, t) + trace(y, t));
        CHECK(trace(x * y, t) == trace(x, t) * trace(y, t));
    }
}

TEST_CASE("unresolvable symbols are named")
{
    TraceProvider t;
    t.q = 2;
    t.s1 = [](int) -> BigInt { return 0; };
    try {
        trace(MotiveExpr::S({6, 3, 6}), t);
        FAIL("expected MissingData");
    } catch (const MissingData& e) {
        CHECK(std::string(e.what()).find("S[6,3,6]") != std::string::npos);
    }
}

TEST_CASE("genus-3 correction term depends linearly on the A2 traces")
{
    auto t = toy(3);
    auto zero = [](int, int) -> BigInt { return 0; };
    auto f = [](int a, int b) -> BigInt { return BigInt(100 * a + b + 1); };
    auto masked = [&](int a, int b) -> BigInt { return (a - b) % 2 ? BigInt(0) : f(a, b); };
    for (auto [a, b, c] : {std::tuple{0, 0, 0}, {2, 1, 1}, {3, 2, 1}, {4, 4, 2}, {6, 3, 0}}) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        BigInt diff = e3_extra_trace(a, b, c, t, f) - e3_extra_trace(a, b, c, t, zero);
        CHECK(diff == -masked(a + 1, b + 1) + masked(a + 1, c) - masked(b, c));
    }
    CHECK_THROWS_AS(e3_extra_trace(1, 2, 0, t, zero), InvalidArgument);
}
