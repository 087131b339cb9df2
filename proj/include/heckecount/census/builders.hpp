#pragma once

#include "heckecount/census/census.hpp"
#include "heckecount/exactnum/field.hpp"

#include <cstdint>
#include <functional>
#include <string_view>

namespace hc::census {

struct BuildOptions {
    unsigned threads = 1;
    std::function<void(std::string_view)> progress; // optional
};

// q must be a prime power with q <= 2^20.
FieldCtx field_for(std::uint64_t q);
BigInt gl_order(unsigned n, std::uint64_t q);

// Elliptic curves up to isomorphism with aut orders (short form for p > 3,
// full Weierstrass orbits for p in {2,3} up to q = 27, normal forms beyond).
Census build_census_g1(std::uint64_t q, const BuildOptions& opt = {});
// Orbits of the full five-coefficient Weierstrass family (with aut).
Census build_census_g1_orbits(std::uint64_t q, unsigned threads = 1);
// p in {2,3}: weighted normal forms of the full family, mass only.
Census build_census_g1_normal_forms(std::uint64_t q, const BuildOptions& opt = {});
// Number of nonsingular (a1,a2,a3,a4,a6) in F_q^5, by counting roots of the
// discriminant in a6. Independent of every census.
BigInt g1_full_family_smooth_count(std::uint64_t q);

// Genus-2 curves. Without aut the counts are family members (normalization
// |GL_2(F_q)|, or |GL_2(F_q)| q^4 for the Artin-Schreier family in
// characteristic 2). With aut: orbit classification, q <= 7 (odd) or q <= 4.
Census build_census_g2(std::uint64_t q, bool with_aut, const BuildOptions& opt = {});

struct Genus3Census {
    Census quartic;       // always with aut, twistable
    Census hyperelliptic;
};
Genus3Census build_census_g3(std::uint64_t q, bool with_aut, const BuildOptions& opt = {});

// y^3 = f(x), deg f = 4 squarefree, q = 1 mod 3, q <= 200. Powersums are
// (re, im) of p_i(W) = -s_i(chi) for i = 1..3, normalization q (q-1)^2.
Census build_census_picard(std::uint64_t q, const BuildOptions& opt = {});

} // namespace hc::census

namespace hc::census {

// Normalization the default builder for (family, q) writes into its census.
BigInt default_normalization(Family f, std::uint64_t q);

} // namespace hc::census
