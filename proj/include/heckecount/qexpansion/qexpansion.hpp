#pragma once

#include "heckecount/exactnum/bigint.hpp"
#include "heckecount/exactnum/quadint.hpp"

#include <string>
#include <vector>

namespace hc::qexp {

// Truncated series sum_{n=0}^{N} a(n) q^n of a level-one form of given weight.
struct QExpansion {
    int weight = 0;
    std::vector<BigRat> coeffs; // a(0..N)

    int precision() const { return static_cast<int>(coeffs.size()) - 1; }
    const BigRat& operator[](std::size_t n) const { return coeffs.at(n); }
    std::string str(int terms = -1) const; // "q - 24*q^2 + ..."
};

QExpansion operator*(const QExpansion& f, const QExpansion& g); // weights add
QExpansion operator+(const QExpansion& f, const QExpansion& g); // same weight
QExpansion operator-(const QExpansion& f, const QExpansion& g);
QExpansion scale(const QExpansion& f, const BigRat& c);
QExpansion truncate(const QExpansion& f, int N);

BigRat bernoulli(unsigned k);
BigInt divisor_sigma(unsigned k, std::uint64_t n);

QExpansion delta_expansion(int N);
QExpansion eisenstein_expansion(int k, int N);

// Echelon basis f_i = q^i + O(q^{d+1}), i = 1..d, of S_k.
std::vector<QExpansion> cusp_basis(int k, int N);

// Matrix of T(p) on the echelon basis (column j = image of f_j).
std::vector<std::vector<BigRat>> hecke_matrix(int k, std::uint64_t p, int N);
BigInt hecke_trace(int k, std::uint64_t p);

// Normalized eigenforms of S_k for dim S_k <= 2, coefficients in Q(sqrt d).
struct Eigenform {
    std::vector<QuadInt> coeffs; // a(0..N)
    const QuadInt& a(std::size_t n) const { return coeffs.at(n); }
};
std::vector<Eigenform> eigenforms(int k, int N);

// Eigenvalues of T(p) on S_k (dim <= 2); throws PrecisionError if N < p*dim.
std::vector<QuadInt> hecke_eigen(int k, std::uint64_t p, int N);

} // namespace hc::qexp
