#include <doctest.h>

#include "heckecount/census/builders.hpp"
#include "heckecount/error.hpp"
#include "heckecount/exactnum/poly.hpp"

#include <filesystem>
#include <fstream>

using namespace hc;
using namespace hc::census;

namespace {

std::map<std::vector<std::int64_t>, BigRat> by_powersums(const Census& c)
{
    std::map<std::vector<std::int64_t>, BigRat> m;
    for (const auto& [cls, count] : c.entries)
        m[cls.powersums] += c.mass(cls, count);
    return m;
}

// |a_i| <= 2g q^{i/2}, compared after squaring
bool weil_ok(const Census& c)
{
    const unsigned g = genus(c.family);
    for (const auto& [cls, count] : c.entries) {
        BigInt qi = 1;
        for (std::size_t i = 0; i < g; ++i) {
            qi *= static_cast<unsigned long>(c.q);
            BigInt a = static_cast<long>(cls.powersums[i]);
            if (a * a > 4 * g * g * qi)
                return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("genus-1 trace distribution at q = 17")
{
    auto c = build_census_g1(17);
    auto w = by_powersums(c);
    const std::map<long, BigRat> table = {{8, BigRat(1, 4)}, {7, BigRat(1, 2)}, {6, BigRat(3, 2)},
                                          {5, BigRat(1, 2)}, {4, BigRat(1)},    {3, BigRat(3, 2)},
                                          {2, BigRat(7, 4)}, {1, BigRat(1, 2)}, {0, BigRat(2)}};
    for (long t = -8; t <= 8; ++t)
        CHECK(w[{t}] == table.at(std::labs(t)));
}

TEST_CASE("genus-1 census matches a naive loop over short Weierstrass equations")
{
    const std::uint64_t q = 7;
    FieldCtx F = field_for(q);
    std::map<std::vector<std::int64_t>, BigRat> naive;
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b) {
            // 4a^3 + 27b^2 != 0
            Elem disc = F.add(F.mul(F.from_int(4), F.pow(a, 3)), F.mul(F.from_int(27), F.mul(b, b)));
            if (disc == 0)
                continue;
            long n = 1;
            for (Elem x = 0; x < q; ++x) {
                Elem rhs = F.add(F.add(F.pow(x, 3), F.mul(a, x)), b);
                n += 1 + F.chi2(rhs);
            }
            naive[{static_cast<std::int64_t>(q) + 1 - n}] += BigRat(1, q - 1);
        }
    CHECK(naive == by_powersums(build_census_g1(q)));
}

TEST_CASE("y^2 = x^3 + x over F_5 has four points")
{
    FieldCtx F = field_for(5);
    long n = 1;
    for (Elem x = 0; x < 5; ++x)
        n += 1 + F.chi2(F.add(F.pow(x, 3), x));
    CHECK(n == 4);
    auto m = by_powersums(build_census_g1(5));
    CHECK(m.count({2}) == 1);
}

TEST_CASE("genus-1 masses and automorphism orders")
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49, 81, 97}) {
        auto c = build_census_g1(q);
        CAPTURE(q);
        CHECK(c.total_mass() == BigRat(q));
        CHECK(weil_ok(c));
        if (!c.has_aut()) // normal forms beyond q = 27 in characteristic 2, 3
            continue;
        int special = 0;
        for (const auto& [cls, count] : c.entries) {
            CHECK((cls.aut == 2 || cls.aut == 4 || cls.aut == 6 || cls.aut == 8 || cls.aut == 12 || cls.aut == 24));
            if (cls.aut != 2)
                special += static_cast<int>(count);
        }
        // only j = 0 and j = 1728 carry extra automorphisms when p > 3
        if (q % 2 && q % 3)
            CHECK(special <= 10);
    }
}

TEST_CASE("full Weierstrass family count agrees with the census in characteristic 2 and 3")
{
    for (std::uint64_t q : {2, 3, 4, 8, 9}) {
        BigInt qq = static_cast<unsigned long>(q);
        BigInt norm = (qq - 1) * qq * qq * qq;
        BigRat mass(g1_full_family_smooth_count(q), norm);
        mass.canonicalize();
        CHECK(mass == BigRat(qq));
        CHECK(build_census_g1_normal_forms(q).total_mass() == BigRat(qq));
    }
}

TEST_CASE("genus-2 masses: family count and isomorphism classes")
{
    for (std::uint64_t q : {2, 3, 4, 5}) {
        CAPTURE(q);
        BigRat cube(ipow(BigInt(static_cast<unsigned long>(q)), 3));
        auto fam = build_census_g2(q, false);
        auto iso = build_census_g2(q, true);
        CHECK(fam.total_mass() == cube);
        CHECK(iso.total_mass() == cube);
        // the two censuses distribute mass identically over Frobenius data
        CHECK(by_powersums(fam) == by_powersums(iso));
        CHECK(weil_ok(fam));
    }
    for (std::uint64_t q : {7, 8, 9, 11, 13}) {
        auto fam = build_census_g2(q, false);
        CHECK(fam.total_mass() == BigRat(ipow(BigInt(static_cast<unsigned long>(q)), 3)));
        CHECK(weil_ok(fam));
    }
    CHECK_THROWS_AS(build_census_g2(6, false), Unsupported);
    CHECK_THROWS_AS(build_census_g2(9, true), Unsupported);
}

TEST_CASE("genus-3 censuses over F_2")
{
    // 15 monomials of a ternary quartic
    CHECK(ipow(BigInt(2), 15) == 32768);
    auto g3 = build_census_g3(2, false);
    CHECK(weil_ok(g3.quartic));
    CHECK(weil_ok(g3.hyperelliptic));
    for (const auto& [cls, count] : g3.quartic.entries) {
        CHECK(cls.twistable);
        CHECK(std::abs(cls.powersums[0]) <= 8);
    }
    CHECK(g3.quartic.total_mass() == BigRat(2 * 2 * 2 * 2 * 2 * 2 + 1));
    CHECK(g3.hyperelliptic.total_mass() == BigRat(32));
    auto with_aut = build_census_g3(2, true);
    CHECK(by_powersums(with_aut.hyperelliptic) == by_powersums(g3.hyperelliptic));
    CHECK_THROWS_AS(build_census_g3(4, false), Unsupported);
}

TEST_CASE("Picard census basics")
{
    for (std::uint64_t q : {7, 13, 19}) {
        auto c = build_census_picard(q);
        CHECK(c.normalization == BigInt(static_cast<unsigned long>(q * (q - 1) * (q - 1))));
        CHECK(c.total_mass() == BigRat(q * q));
        for (const auto& [cls, count] : c.entries) {
            BigRat m = c.mass(cls, count);
            CHECK(m > 0);
            CHECK(c.normalization % m.get_den() == 0);
        }
    }
    CHECK_THROWS_AS(build_census_picard(5), InvalidArgument);
}

TEST_CASE("censuses do not depend on the thread count")
{
    BuildOptions one, four;
    four.threads = 4;
    CHECK(serialize(build_census_g1(13, one)) == serialize(build_census_g1(13, four)));
    CHECK(serialize(build_census_g1(27, one)) == serialize(build_census_g1(27, four)));
    CHECK(serialize(build_census_g2(7, false, one)) == serialize(build_census_g2(7, false, four)));
    CHECK(serialize(build_census_g2(8, false, one)) == serialize(build_census_g2(8, false, four)));
    CHECK(serialize(build_census_picard(13, one)) == serialize(build_census_picard(13, four)));
    auto a = build_census_g3(2, false, one), b = build_census_g3(2, false, four);
    CHECK(serialize(a.quartic) == serialize(b.quartic));
    CHECK(serialize(a.hyperelliptic) == serialize(b.hyperelliptic));
}

TEST_CASE("census files round trip and report damage")
{
    auto c = build_census_g1(17);
    auto dir = std::filesystem::temp_directory_path() / "heckecount_unit";
    std::filesystem::create_directories(dir);
    auto path = dir / cache_name(c.family, c.q, c.normalization, true);
    save_census(c, path);
    CHECK(load_census(path) == c);

    auto g2 = build_census_g2(3, false);
    std::string text = serialize(g2);
    CHECK(text.find(" - ") != std::string::npos); // absent aut
    CHECK(parse_census(text) == g2);

    std::string truncated = text.substr(0, text.size() / 2);
    CHECK_THROWS_AS(parse_census(truncated), CorruptFile);

    std::string old = text;
    old.replace(old.find("#version 1"), 10, "#version 0");
    CHECK_THROWS_AS(parse_census(old), VersionMismatch);

    std::ofstream(dir / "garbage.census") << "#version 1\n#q x\n";
    CHECK_THROWS_AS(load_census(dir / "garbage.census"), CorruptFile);
    CHECK_THROWS_AS(load_census(dir / "missing.census"), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("merging partial histograms is order independent")
{
    auto c = build_census_g2(5, false);
    Census left = c, right = c;
    left.entries.clear();
    right.entries.clear();
    bool flip = false;
    for (const auto& [cls, count] : c.entries) {
        (flip ? left : right).add(cls, count);
        flip = !flip;
    }
    Census ab = left, ba = right;
    ab.merge(right);
    ba.merge(left);
    CHECK(ab == c);
    CHECK(ba == c);
}
