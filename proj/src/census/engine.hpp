#pragma once

// Internal helpers shared by the census builders.

#include "heckecount/census/builders.hpp"
#include "heckecount/exactnum/field.hpp"
#include "heckecount/exactnum/poly.hpp"
#include "heckecount/kernels/charsum.hpp"

#include <deque>
#include <memory>
#include <span>
#include <thread>
#include <vector>

namespace hc::census::detail {

// F_q together with F_{q^i}, i <= max_ext, and the embeddings.
class Tower {
public:
    Tower(std::uint64_t q, unsigned max_ext);

    const FieldCtx& base() const { return fields_[0]; }
    const FieldCtx& ext(unsigned i) const { return fields_[i - 1]; }
    const SubfieldEmbedding& emb(unsigned i) const { return *embs_[i - 1]; }
    unsigned max_ext() const { return static_cast<unsigned>(fields_.size()); }
    bool prime() const { return fields_[0].n() == 1; }

private:
    std::deque<FieldCtx> fields_;
    std::vector<std::unique_ptr<SubfieldEmbedding>> embs_;
};

enum class CharKind { quadratic, cubic };

// Value distribution of chi_i(f(x)) over x in F_{q^i} for f with F_q
// coefficients. Code 0 is f(x) = 0; for the quadratic kind 1/2 are
// square/non-square; for the cubic kind 1 + e means chi = rho^e.
class CharSums {
public:
    CharSums(const Tower& tower, unsigned max_degree, CharKind kind);

    kernels::CodeCounts counts(std::span<const Elem> coeffs, unsigned i) const;

private:
    const Tower* tower_;
    CharKind kind_;
    std::vector<kernels::PowerTable> tables_;
    std::vector<std::vector<std::int32_t>> codes_;
};

// Reduced set of monic degree-d polynomials for functions invariant under
// g(x) -> a^{-d} g(ax + b). Polynomials are c_0..c_d with c_d = 1.
struct ReducedMonic {
    unsigned degree;
    std::vector<std::vector<Elem>> heads; // fixed top coefficients (index = degree)
    std::vector<std::uint64_t> weights;
    unsigned free_count;                  // low coefficients enumerated fully
    std::uint64_t q;

    std::uint64_t size() const;
    // item -> polynomial and weight
    std::uint64_t get(std::uint64_t item, std::vector<Elem>& poly) const;
};

ReducedMonic reduce_monic(const FieldCtx& F, unsigned d);

// Runs body(begin, end, worker) on `threads` contiguous slices of [0, n).
template <class Body>
void parallel_slices(std::uint64_t n, unsigned threads, Body body)
{
    if (threads <= 1 || n < 2) {
        body(std::uint64_t{0}, n, 0u);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        std::uint64_t lo = n * w / threads, hi = n * (w + 1) / threads;
        pool.emplace_back([=, &body] { body(lo, hi, w); });
    }
    for (auto& t : pool)
        t.join();
}

// Generators of GL_n(F_q) as n x n matrices (row-major).
std::vector<std::vector<Elem>> gl_generators(const FieldCtx& F, unsigned n);

// Coefficients of the form f(A v) for f homogeneous of degree d in k
// variables, monomials in the order of monomials(k, d).
std::vector<std::vector<unsigned>> monomials(unsigned k, unsigned d);
std::vector<Elem> substitute(const FieldCtx& F, unsigned k, unsigned d, std::span<const Elem> f,
                             std::span<const Elem> A);

// F_q-vectors <-> F_p digit vectors (n digits per coordinate).
std::vector<Elem> from_digits(const FieldCtx& F, const std::vector<std::uint32_t>& digits);
std::vector<std::uint32_t> to_digits(const FieldCtx& F, const std::vector<Elem>& v);

} // namespace hc::census::detail
