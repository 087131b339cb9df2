#pragma once

#include "heckecount/exactnum/bigint.hpp"

#include <string>
#include <string_view>

namespace hc {

// a + b*sqrt(d). Rational coordinates are allowed so that roots of
// monic quadratics are closed; norm_divisibility insists on integrality.
struct QuadInt {
    BigInt d = 0;
    BigRat a = 0;
    BigRat b = 0;

    QuadInt() = default;
    QuadInt(BigInt d_, BigRat a_, BigRat b_) : d(std::move(d_)), a(std::move(a_)), b(std::move(b_)) {}
    static QuadInt rational(BigRat r) { return {0, std::move(r), 0}; }

    BigRat norm() const { return a * a - d * b * b; }
    BigRat trace() const { return 2 * a; }
    QuadInt conj() const { return {d, a, -b}; }
    bool is_rational() const { return b == 0; }
    bool is_algebraic_integer() const;

    QuadInt& operator+=(const QuadInt& o);
    QuadInt& operator-=(const QuadInt& o);
    QuadInt& operator*=(const QuadInt& o);
    QuadInt& operator*=(const BigRat& k);
    QuadInt inverse() const;

    friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
    friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
    friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
    friend QuadInt operator*(QuadInt x, const BigRat& k) { return x *= k; }
    friend QuadInt operator-(const QuadInt& x) { return {x.d, -x.a, -x.b}; }
    friend bool operator==(const QuadInt& x, const QuadInt& y);

    std::string str() const; // "a+b*sqrt(d)" or "a"
};

// Accepts "a", "a+b*sqrt(d)", "a-b*sqrt(d)", "b*sqrt(d)".
QuadInt parse_quadint(std::string_view text);

// Writes m = s^2 * d with d squarefree; returns (s, d).
std::pair<BigInt, BigInt> squarefree_split(const BigInt& m);

// Roots of x^2 - t x + n, exact.
std::pair<QuadInt, QuadInt> quadratic_roots(const BigRat& t, const BigRat& n);

bool norm_divisibility(const QuadInt& x, const BigInt& ell);

} // namespace hc
