#pragma once

#include "heckecount/census/census.hpp"
#include "heckecount/exactnum/eisenstein.hpp"
#include "heckecount/exactnum/field.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hc::picard {

// lambda = (a+i, i, -b+i): Sym^a W (x) Sym^b W' (x) det W^i
struct PicardWeight {
    int a = 0;
    int b = 0;
    int i = 0;
    PicardWeight conjugate() const { return {b, a, -i}; }
};

// Frobenius on the rho-eigenspace W of H^1 of y^3 = f(x); W' is its conjugate.
struct PicardClassData {
    std::uint64_t q = 0;
    std::array<EisensteinInt, 3> p;     // power sums on W
    std::array<EisensteinInt, 4> e;     // e_0..e_3 on W
    BigRat mass;

    PicardClassData conj() const;
    EisensteinInt det() const { return e[3]; }
    EisensteinInt h(int k) const;       // complete homogeneous on W
    // p_i(W) + p_i(W') = q^i + 1 - N_i
    std::array<BigInt, 3> frobenius_traces() const;
};

// Validates e_3(W) e_3(W') = q^3.
PicardClassData picard_class_data(const census::FrobeniusClass& cls, std::int64_t count,
                                  const census::Census& c);
std::vector<PicardClassData> picard_classes(const census::Census& c);

// Exact trace; i < 0 uses det W^{-1} = det W' / q^3.
EisensteinRat picard_ec_trace_exact(const PicardWeight& w, const census::Census& c);
// As above, IntegrityError unless the value lies in Z[rho].
EisensteinInt picard_ec_trace(const PicardWeight& w, const census::Census& c);

struct SixthPowerReport {
    std::uint64_t q = 0;
    std::map<EisensteinInt, BigRat> values; // e_3(W)^6 -> mass
    bool constant() const { return values.size() == 1; }
};
SixthPowerReport picard_sixth_power_probe(const census::Census& c);

// Trace at lambda = [6k, 0, 0] next to the ingested reference eigenvalue of
// the same norm, if any. Nothing is asserted.
struct ComparisonReport {
    std::uint64_t q = 0;
    int k = 1;
    EisensteinInt ec_trace;
    std::optional<EisensteinInt> reference;
};
ComparisonReport picard_comparison(const census::Census& c, int k,
                                   const std::map<std::uint64_t, EisensteinInt>& reference);

// Independent per-curve helpers for y^3 = f(x), f over F_q given by
// coefficients c_0..c_4 (field element encoding).
std::array<EisensteinInt, 3> picard_powersums_direct(std::uint64_t q, const std::vector<Elem>& f);
// #C(F_{q^i}), i = 1..3, by enumerating (x, y) plus the single point at infinity.
std::array<std::int64_t, 3> picard_point_counts(std::uint64_t q, const std::vector<Elem>& f);

} // namespace hc::picard
