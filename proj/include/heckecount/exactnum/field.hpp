#pragma once

#include <cstdint>
#include <vector>

namespace hc {

// Field elements are integers 0..q-1 encoding sum d_j p^j, where d_j is the
// coefficient of t^j and t is a primitive root of the defining polynomial.
// Constants of F_p therefore encode as themselves in every extension.
using Elem = std::uint32_t;

class FieldCtx {
public:
    static constexpr std::uint32_t max_size = 1u << 20;

    FieldCtx(std::uint32_t p, std::uint32_t n);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t q() const { return q_; }

    Elem add(Elem x, Elem y) const
    {
        if (p_ == 2)
            return x ^ y;
        if (n_ == 1) {
            Elem s = x + y;
            return s >= p_ ? s - p_ : s;
        }
        if (x == 0)
            return y;
        if (y == 0)
            return x;
        std::int32_t lx = log_[x];
        std::int32_t k = log_[y] - lx;
        if (k < 0)
            k += static_cast<std::int32_t>(q_ - 1);
        std::int32_t z = zech_[k];
        return z < 0 ? 0 : exp_[lx + z];
    }
    Elem neg(Elem x) const
    {
        if (p_ == 2)
            return x;
        if (n_ == 1)
            return x == 0 ? 0 : p_ - x;
        return neg_[x];
    }
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem mul(Elem x, Elem y) const
    {
        if (x == 0 || y == 0)
            return 0;
        if (n_ == 1)
            return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % p_);
        return exp_[log_[x] + log_[y]];
    }
    Elem inv(Elem x) const; // throws on zero
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, std::uint64_t e) const;
    Elem frobenius(Elem x) const { return pow(x, p_); }

    // Discrete log base the fixed generator; x must be nonzero.
    std::int32_t log(Elem x) const { return log_[x]; }
    Elem exp(std::int64_t k) const;
    Elem generator() const { return exp(1); }

    Elem from_int(std::int64_t k) const;
    std::uint32_t digit(Elem x, unsigned j) const;

    // Quadratic character; identically 1 on F_q^* in characteristic 2.
    int chi2(Elem x) const;
    bool has_cubic_character() const { return (q_ - 1) % 3 == 0; }
    // Exponent e with chi3(x) = rho^e, chi3(generator) = rho; -1 for x = 0.
    int chi3_index(Elem x) const;

    // Absolute trace to F_p, as an element of F_p.
    Elem abs_trace(Elem x) const;

    // Defining polynomial, low degree first, monic of degree n.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool operator==(const FieldCtx& o) const { return p_ == o.p_ && n_ == o.n_; }

private:
    std::uint32_t p_, n_, q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;          // length 2(q-1)
    std::vector<std::int32_t> log_;  // log_[0] = -1
    std::vector<std::int32_t> zech_; // log(1 + g^k), -1 when zero
    std::vector<Elem> neg_;
    std::vector<std::uint8_t> trace2_; // characteristic 2 only
};

// make_field: validated constructor for the public surface (n <= 3).
FieldCtx make_field(std::uint32_t p, std::uint32_t n);

// Embedding F_q -> F_Q for q = p^m, Q = p^{mk}.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(const FieldCtx& small, const FieldCtx& big);

    Elem to_big(Elem x) const { return up_[x]; }
    // Throws InvalidArgument if y is not in the image.
    Elem to_small(Elem y) const;
    bool in_subfield(Elem y) const { return down_[y] >= 0; }
    // Norm from the big field down to the small one.
    Elem norm(Elem y) const;

    const FieldCtx& small() const { return *small_; }
    const FieldCtx& big() const { return *big_; }

private:
    const FieldCtx* small_;
    const FieldCtx* big_;
    std::vector<Elem> up_;
    std::vector<std::int32_t> down_;
    std::uint64_t norm_exp_;
};

} // namespace hc
