#pragma once

#include "heckecount/exactnum/bigint.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hc::motives {

// S[n], S[j,k] or S[a,b,c].
struct Symbol {
    std::vector<int> args;
    auto operator<=>(const Symbol&) const = default;
    std::string str() const;
};

// L^l times a sorted product of at most two symbols.
struct Monomial {
    int l = 0;
    std::vector<Symbol> symbols;
    auto operator<=>(const Monomial&) const = default;
    std::string str() const;
};

// Integer combination of monomials in canonical form: zero coefficients are
// dropped, S[2] is rewritten to -L-1 and S[n] with dim S_n = 0 to 0.
class MotiveExpr {
public:
    MotiveExpr() = default;
    MotiveExpr(long n); // NOLINT: integers embed implicitly

    static MotiveExpr L(int m = 1);
    static MotiveExpr S(std::vector<int> args);

    MotiveExpr& operator+=(const MotiveExpr& o);
    MotiveExpr& operator-=(const MotiveExpr& o);
    friend MotiveExpr operator+(MotiveExpr x, const MotiveExpr& y) { return x += y; }
    friend MotiveExpr operator-(MotiveExpr x, const MotiveExpr& y) { return x -= y; }
    friend MotiveExpr operator-(const MotiveExpr& x) { return MotiveExpr(0) - x; }
    friend MotiveExpr operator*(const MotiveExpr& x, const MotiveExpr& y);
    friend bool operator==(const MotiveExpr&, const MotiveExpr&) = default;

    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Stable text form, e.g. "5*L^34 + S[34]".
    std::string str() const;

private:
    void add_term(const Monomial& m, const BigInt& c);
    std::map<Monomial, BigInt> terms_;
};

// dim S_k(SL(2,Z)) for even k >= 2, with s_2 = -1.
long dim_cusp_sl2(int k);

// Correction term of the genus-2 trace identity; requires a >= b >= 0 and a = b (mod 2).
MotiveExpr e2_extra(int a, int b);
// The same display without the parity requirement (odd s_n read as 0).
MotiveExpr e2_extra_unchecked(int a, int b);

// Frobenius traces of the symbols at a fixed q.
struct TraceProvider {
    std::uint64_t q = 0;
    std::function<BigInt(int)> s1;                                          // S[n], n even >= 4
    std::function<std::optional<BigInt>(int, int)> s2;                      // S[j,k], optional
    std::function<std::optional<BigInt>(int, int, int)> s3;                 // S[a,b,c], optional

    BigInt symbol(const Symbol& s) const;
};

BigInt trace(const MotiveExpr& e, const TraceProvider& provider);

// Trace of the genus-3 correction term. ec_A2(a, b) is the trace of
// e_c(A_2, V_{a,b}) at the provider's q (zero is expected for odd a + b).
BigInt e3_extra_trace(int a, int b, int c, const TraceProvider& provider,
                      const std::function<BigInt(int, int)>& ec_A2);

} // namespace hc::motives
