#include <doctest.h>

#include "heckecount/error.hpp"
#include "heckecount/hecke/hecke.hpp"
#include "heckecount/qexpansion/qexpansion.hpp"

using namespace hc;
using namespace hc::hecke;

namespace {

CensusStore& store()
{
    static CensusStore s;
    return s;
}

} // namespace

TEST_CASE("elliptic traces")
{
    auto& s = store();
    CHECK(trace_T_sl2(12, 2, s.g1(2)) == -24);
    CHECK(trace_T_sl2(12, 3, s.g1(3)) == 252);
    CHECK(trace_T_sl2(12, 5, s.g1(5)) == 4830);
    for (std::uint64_t p : {2, 3, 5, 7})
        CHECK(trace_T_sl2(10, p, s.g1(p)) == 0);
    CHECK(trace_T_sl2(16, 2, s.g1(2)) == qexp::hecke_trace(16, 2));
    // over F_4 the census gives alpha^2 + beta^2 = tau(2)^2 - 2^12
    auto r = trace_report_sl2(12, 4, s);
    CHECK(r.raw_frobenius);
    CHECK(r.trace == BigInt(-24 * -24) - 2 * 2048);
    CHECK(r.label() == "S_{12}");
}

TEST_CASE("degree-2 goldens at p <= 5")
{
    struct Row {
        int j, k;
        std::uint64_t p;
        const char* value;
    };
    for (auto [j, k, p, v] : {Row{0, 35, 2, "-25073418240"}, Row{0, 35, 3, "-11824551571578840"},
                              Row{14, 7, 2, "-3696"}, Row{14, 7, 5, "118996620"}, Row{4, 17, 3, "-210323304"}}) {
        CAPTURE(j);
        CAPTURE(k);
        CAPTURE(p);
        auto r = trace_T_siegel2(j, k, p, store());
        CHECK(r.trace == BigInt(v));
        CHECK_FALSE(r.censuses.empty());
    }
}

TEST_CASE("weights with vanishing degree-2 cusp forms give zero traces")
{
    int n = 0;
    for (auto [j, k] : dim0_list_siegel2()) {
        if (j + 3 * k > 40)
            continue;
        ++n;
        for (std::uint64_t p : {2, 3}) {
            CAPTURE(j);
            CAPTURE(k);
            CHECK(trace_T_siegel2(j, k, p, store()).trace == 0);
        }
    }
    CHECK(n > 5);
}

TEST_CASE("Saito-Kurokawa lifts")
{
    for (int k : {10, 12})
        for (std::uint64_t p : {2, 3}) {
            auto r = sk_lift_check(k, p, store());
            CAPTURE(k);
            CAPTURE(p);
            CHECK(r.holds);
            CHECK(r.lambda == r.expected);
        }
    CHECK_THROWS_AS(sk_lift_check(14, 2, store()), Unsupported);
    CHECK_THROWS_AS(sk_lift_check(10, 4, store()), InvalidArgument);
}

TEST_CASE("degree-3 traces over F_2")
{
    CHECK(trace_T_siegel3(13, 11, 10, 2, store()).trace == -2073600);
    CHECK(trace_T_siegel3(10, 6, 4, 2, store()).trace == 9504);
    CHECK(trace_T_siegel3(11, 5, 2, 2, store()).trace == 0);
    CHECK_THROWS_AS(trace_T_siegel3(13, 11, 10, 4, store()), Unsupported);
}

TEST_CASE("congruence rows")
{
    const QuadInt g = parse_quadint("4320+96*sqrt(51349)");
    auto row = congruence_deg3_row(2, BigInt(-2073600), QuadInt::rational(-24), g, 13, 11, 199);
    CHECK(row.norm == BigInt("-232402452480"));
    CHECK(row.pass);
    CHECK_FALSE(congruence_deg3_row(2, BigInt(-2073600), QuadInt::rational(-24), g, 13, 11, 197).pass);
    CHECK_FALSE(congruence_deg3_row(2, BigInt(-2073599), QuadInt::rational(-24), g, 13, 11, 199).pass);

    auto rep = harder_check_deg2(4, 10, 41, 22, 5, store());
    CHECK(rep.all_pass());
    REQUIRE(rep.rows.size() == 3);
    auto eig = qexp::hecke_eigen(22, 2, 10).front();
    CHECK(congruence_deg2_row(2, BigInt(rep.rows[0].lambda), eig, 4, 10, 41).pass);
    CHECK_FALSE(congruence_deg2_row(2, BigInt(rep.rows[0].lambda) + 1, eig, 4, 10, 41).pass);
}

TEST_CASE("eigenvalue tables")
{
    auto t = parse_eigenvalue_table("# a header\n2 -2073600\n3 5+2*sqrt(7)\n7 759+261*rho\n");
    CHECK(t.header == "a header");
    CHECK(t.integer(2) == -2073600);
    CHECK(t.quadratic(3) == parse_quadint("5+2*sqrt(7)"));
    CHECK(t.eisenstein(7) == EisensteinInt(759, 261));
    CHECK_THROWS_AS(t.integer(5), MissingData);
    CHECK_THROWS_AS(parse_eigenvalue_table("#h\n2 12\n2 13\n"), CorruptFile);
    CHECK_THROWS_AS(parse_eigenvalue_table("2 12\n"), CorruptFile);
    CHECK_THROWS_AS(parse_eigenvalue_table("# h\nx 12\n"), CorruptFile);
    CHECK_THROWS_AS(load_eigenvalue_table("/nonexistent/table.txt"), IoError);
}
