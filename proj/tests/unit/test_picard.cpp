#include <doctest.h>

#include "heckecount/census/builders.hpp"
#include "heckecount/error.hpp"
#include "heckecount/exactnum/poly.hpp"
#include "heckecount/picard/picard.hpp"

#include <random>

using namespace hc;
using namespace hc::picard;

namespace {

const census::Census& picard_census(std::uint64_t q)
{
    static std::map<std::uint64_t, census::Census> cache;
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, census::build_census_picard(q)).first;
    return it->second;
}

} // namespace

TEST_CASE("class data satisfies the functional equation")
{
    for (std::uint64_t q : {7, 13}) {
        BigInt q3 = ipow(BigInt(static_cast<unsigned long>(q)), 3);
        for (const auto& d : picard_classes(picard_census(q))) {
            CHECK(d.det() * d.det().conj() == EisensteinInt(q3, 0));
            CHECK(d.e[0] == EisensteinInt(1));
            CHECK(d.mass > 0);
            CHECK(d.conj().conj().p == d.p);
        }
    }
}

TEST_CASE("traces are integral and Galois symmetric")
{
    for (std::uint64_t q : {7, 13}) {
        const auto& c = picard_census(q);
        const BigInt qq(static_cast<unsigned long>(q));
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b)
                for (int i = 0; i <= 2; ++i) {
                    CAPTURE(q);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(i);
                    PicardWeight w{a, b, i};
                    auto t = picard_ec_trace_exact(w, c);
                    CHECK(t.is_integral());
                    EisensteinRat rhs = picard_ec_trace_exact(w.conjugate(), c);
                    rhs *= BigRat(ipow(qq, 3 * i));
                    CHECK(t.conj() == rhs);
                }
    }
}

TEST_CASE("census power sums match brute-force point counts")
{
    std::mt19937_64 rng(31);
    for (std::uint64_t q : {7, 13}) {
        const auto F = census::field_for(q);
        const BigInt qq(static_cast<unsigned long>(q));
        int tested = 0;
        while (tested < 25) {
            std::vector<Elem> f(5);
            for (auto& x : f)
                x = static_cast<Elem>(rng() % q);
            if (f[4] == 0 || !poly::squarefree(F, f))
                continue;
            ++tested;
            auto p = picard_powersums_direct(q, f);
            auto n = picard_point_counts(q, f);
            for (int i = 0; i < 3; ++i)
                CHECK(p[i] + p[i].conj() == EisensteinInt(ipow(qq, i + 1) + 1 - n[i], 0));
        }
    }
}

TEST_CASE("sixth-power probe and comparison report")
{
    auto probe = picard_sixth_power_probe(picard_census(7));
    CHECK(probe.q == 7);
    CHECK(probe.constant());

    census::Census empty = picard_census(7);
    empty.entries.clear();
    CHECK(picard_sixth_power_probe(empty).values.empty());

    std::map<std::uint64_t, EisensteinInt> ref{{7, EisensteinInt(1, 2)}};
    auto r = picard_comparison(picard_census(7), 1, ref);
    CHECK(r.k == 1);
    REQUIRE(r.reference.has_value());
    CHECK(*r.reference == EisensteinInt(1, 2));
    CHECK(r.ec_trace == picard_ec_trace({6, 0, 0}, picard_census(7)));
    CHECK_FALSE(picard_comparison(picard_census(13), 1, ref).reference.has_value());
}
