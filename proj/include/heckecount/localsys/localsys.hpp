#pragma once

#include "heckecount/census/census.hpp"
#include "heckecount/exactnum/bigint.hpp"

#include <vector>

namespace hc::localsys {

// Frobenius on H^1 of a g-dimensional ppav over F_q, described by the power
// sums p_i of its 2g eigenvalues.
class EigenvalueData {
public:
    EigenvalueData(std::uint64_t q, std::vector<BigInt> powersums);
    // Uses all-ones multiplier; lets characters be evaluated at formal data.
    EigenvalueData(BigInt q, std::vector<BigInt> powersums);

    unsigned genus() const { return static_cast<unsigned>(p_.size()); }
    const BigInt& q() const { return q_; }
    const std::vector<BigInt>& powersums() const { return p_; }
    // e_0..e_{2g} of the eigenvalues; P(T) = sum (-1)^k e_k T^k.
    const std::vector<BigInt>& elementary() const { return e_; }
    // complete homogeneous h_k, k >= 0 (h_k = 0 for k < 0)
    BigInt h(long k) const;
    // (-1)^i p_i: the quadratic twist
    EigenvalueData negated() const;

private:
    BigInt q_;
    std::vector<BigInt> p_;
    std::vector<BigInt> e_;
    mutable std::vector<BigInt> h_;
};

// From point counts N_1..N_g over F_{q^i}; checks the Weil bound.
EigenvalueData eigen_data(std::uint64_t q, const std::vector<BigInt>& counts);

// Character of the irreducible GSp(2g) representation of highest weight
// lambda (lambda_1 >= ... >= lambda_g >= 0) at Frobenius.
BigInt sp_character(const std::vector<int>& lambda, const EigenvalueData& d);

// Weighted class: Frobenius data with its mass (1/|Aut| summed).
struct WeightedClass {
    EigenvalueData data;
    BigRat mass;
};
using ClassStream = std::vector<WeightedClass>;

ClassStream stream_of(const census::Census& c);
BigRat total_mass(const ClassStream& s);
// sum of mass * character; exact rational
BigRat weighted_sum(const std::vector<int>& lambda, const ClassStream& s);
// as above, IntegrityError unless integral
BigInt ec_trace(const std::vector<int>& lambda, const ClassStream& s);

BigInt ec_trace_A1(int a, const census::Census& g1);

// A_2 = M_2 + Sym^2 A_1. Unordered pairs over F_q are counted as a stack:
// half the ordered pairs plus half the curves over F_{q^2} (their Weil
// restrictions, data p_1 = 0, p_2 = 2 a_1').
ClassStream assemble_A2(const census::Census& g2, const census::Census& g1_q, const census::Census& g1_q2);

// A_3 = quartics (with negated twins, half mass each) + hyperelliptic
// + A_1 x M_2 + Sym^3 A_1.
ClassStream assemble_A3(const census::Census& quartic, const census::Census& hyp3, const census::Census& g2,
                        const census::Census& g1_q, const census::Census& g1_q2, const census::Census& g1_q3);

} // namespace hc::localsys
