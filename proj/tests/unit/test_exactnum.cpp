#include <doctest.h>

#include "heckecount/error.hpp"
#include "heckecount/exactnum/eisenstein.hpp"
#include "heckecount/exactnum/field.hpp"
#include "heckecount/exactnum/quadint.hpp"

#include <random>
#include <set>

using namespace hc;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields()
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 31u, 101u})
        for (std::uint32_t n = 1; n <= 3; ++n)
            out.emplace_back(p, n);
    return out;
}

} // namespace

TEST_CASE("quadratic character of F_5")
{
    FieldCtx F = make_field(5, 1);
    CHECK(F.chi2(0) == 0);
    CHECK(F.chi2(1) == 1);
    CHECK(F.chi2(2) == -1);
    CHECK(F.chi2(3) == -1);
    CHECK(F.chi2(4) == 1);
}

TEST_CASE("Frobenius permutes F_8")
{
    FieldCtx F = make_field(2, 3);
    std::set<Elem> image;
    for (Elem x = 0; x < F.q(); ++x)
        image.insert(F.frobenius(x));
    CHECK(image.size() == 8);
}

TEST_CASE("cubic character on F_7")
{
    FieldCtx F = make_field(7, 1);
    REQUIRE(F.has_cubic_character());
    Elem g = F.generator();
    CHECK(F.chi3_index(g) == 1);
    CHECK((3 * F.chi3_index(g)) % 3 == 0);
    CHECK(F.chi3_index(F.pow(g, 3)) == 0);
    CHECK_FALSE(make_field(5, 1).has_cubic_character());
}

TEST_CASE("make_field rejects bad input")
{
    CHECK_THROWS_AS(make_field(6, 1), InvalidArgument);
    CHECK_THROWS_AS(make_field(2, 4), InvalidArgument);
    CHECK_THROWS_AS(make_field(1031, 2), Unsupported);
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(11);
    for (auto [p, n] : small_fields()) {
        FieldCtx F = make_field(p, n);
        CAPTURE(F.q());
        for (int t = 0; t < 300; ++t) {
            Elem x = rng() % F.q(), y = rng() % F.q(), z = rng() % F.q();
            CHECK(F.add(x, y) == F.add(y, x));
            CHECK(F.mul(x, y) == F.mul(y, x));
            CHECK(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
            CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
            CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
            CHECK(F.add(x, F.neg(x)) == 0);
            if (x != 0)
                CHECK(F.mul(x, F.inv(x)) == 1);
        }
    }
}

TEST_CASE("multiplicative group is cyclic and characters are orthogonal")
{
    for (auto [p, n] : small_fields()) {
        FieldCtx F = make_field(p, n);
        CAPTURE(F.q());
        std::set<Elem> powers;
        for (std::uint32_t k = 0; k + 1 < F.q(); ++k)
            powers.insert(F.exp(k));
        CHECK(powers.size() == F.q() - 1);
        if (p != 2) {
            long s = 0;
            for (Elem x = 1; x < F.q(); ++x) {
                s += F.chi2(x);
                CHECK(F.chi2(x) * F.chi2(x) == 1);
            }
            CHECK(s == 0);
        }
        if (F.has_cubic_character()) {
            EisensteinInt s;
            for (Elem x = 1; x < F.q(); ++x)
                s += EisensteinInt::rho_pow(F.chi3_index(x));
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("norm to a subfield lands in the subfield")
{
    FieldCtx small = make_field(7, 1), big = make_field(7, 3);
    SubfieldEmbedding e(small, big);
    for (Elem y = 1; y < big.q(); y += 17) {
        Elem nm = e.norm(y);
        CHECK(e.in_subfield(nm));
        CHECK(nm == big.mul(y, big.mul(big.pow(y, 7), big.pow(y, 49))));
    }
}

TEST_CASE("Eisenstein integers")
{
    EisensteinInt rho = EisensteinInt::rho();
    CHECK(rho * rho + rho + 1 == EisensteinInt(0));
    CHECK(rho.pow(3) == EisensteinInt(1));
    EisensteinInt x(3, 5);
    CHECK(x.conj() == EisensteinInt(-2, -5));
    CHECK(x.norm() == 9 - 15 + 25);
    CHECK(x * x.conj() == EisensteinInt(x.norm(), 0));
    CHECK(parse_eisenstein("759+261*rho") == EisensteinInt(759, 261));
    CHECK(parse_eisenstein("-4137+1683*rho") == EisensteinInt(-4137, 1683));
    CHECK(parse_eisenstein("72") == EisensteinInt(72));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        EisensteinInt a(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 2001) - 1000);
        EisensteinInt b(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 2001) - 1000);
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.norm() >= 0);
    }
}

TEST_CASE("real quadratic integers")
{
    QuadInt g = parse_quadint("4320+96*sqrt(51349)");
    CHECK(g.d == 51349);
    CHECK(g.norm() == BigRat(4320 * 4320) - BigRat(51349) * 96 * 96);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        QuadInt a(13, static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 201) - 100);
        QuadInt b(13, static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 201) - 100);
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
}

TEST_CASE("norm divisibility")
{
    // -2073600 + 24 (2^13 + 4320 + 96 sqrt(51349) + 2^16)
    QuadInt x = QuadInt::rational(-2073600) + (parse_quadint("4320+96*sqrt(51349)") + QuadInt::rational(8192 + 65536)) * BigRat(24);
    CHECK(to_integer(x.norm()) == BigInt("-232402452480"));
    CHECK(norm_divisibility(x, 199));
    CHECK_FALSE(norm_divisibility(x, 197));
    CHECK(norm_divisibility(QuadInt::rational(0), 7));
    CHECK(norm_divisibility(EisensteinInt(0), 5));
    CHECK(EisensteinInt(1, 1).norm() == 1);
    CHECK_FALSE(norm_divisibility(EisensteinInt(1, 1), 3));
    CHECK_THROWS_AS(norm_divisibility(QuadInt(5, BigRat(1, 3), 0), 3), InvalidArgument);
}

TEST_CASE("integer helpers")
{
    CHECK(parse_bigint("-10370198954152041951342796400") < 0);
    CHECK_THROWS_AS(parse_bigint("12a"), InvalidArgument);
    CHECK(prime_power(27).p == 3);
    CHECK(prime_power(27).n == 3);
    CHECK(prime_power(6).p == 0);
    CHECK(isqrt(BigInt(99)) == 9);
    CHECK_THROWS_AS(exact_div(7, 2), IntegrityError);
}
