#pragma once

#include "heckecount/exactnum/bigint.hpp"

#include <string>
#include <string_view>

namespace hc {

// a + b*rho with rho^2 + rho + 1 = 0.
struct EisensteinInt {
    BigInt a = 0;
    BigInt b = 0;

    EisensteinInt() = default;
    EisensteinInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
    EisensteinInt(long n) : a(n), b(0) {} // NOLINT: integers embed implicitly

    static EisensteinInt rho() { return {0, 1}; }
    static EisensteinInt rho_pow(long k);

    EisensteinInt conj() const { return {a - b, -b}; }
    BigInt norm() const { return a * a - a * b + b * b; }
    bool is_zero() const { return a == 0 && b == 0; }

    EisensteinInt& operator+=(const EisensteinInt& o);
    EisensteinInt& operator-=(const EisensteinInt& o);
    EisensteinInt& operator*=(const EisensteinInt& o);
    EisensteinInt& operator*=(const BigInt& k);

    friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
    friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
    friend EisensteinInt operator*(EisensteinInt x, const EisensteinInt& y) { return x *= y; }
    friend EisensteinInt operator*(EisensteinInt x, const BigInt& k) { return x *= k; }
    friend EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }
    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const EisensteinInt& x, const EisensteinInt& y)
    {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }

    EisensteinInt pow(unsigned long e) const;
    std::string str() const; // "a+b*rho"
};

EisensteinInt parse_eisenstein(std::string_view text);

// a + b*rho with rational coordinates; only used where a det power is negative.
struct EisensteinRat {
    BigRat a = 0;
    BigRat b = 0;

    EisensteinRat() = default;
    EisensteinRat(BigRat a_, BigRat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit EisensteinRat(const EisensteinInt& x) : a(x.a), b(x.b) {}

    EisensteinRat conj() const { return {a - b, -b}; }
    bool is_integral() const { return a.get_den() == 1 && b.get_den() == 1; }
    EisensteinInt to_int() const; // throws IntegrityError

    EisensteinRat& operator+=(const EisensteinRat& o);
    EisensteinRat& operator*=(const EisensteinRat& o);
    EisensteinRat& operator*=(const BigRat& k);
    friend EisensteinRat operator*(EisensteinRat x, const EisensteinRat& y) { return x *= y; }
    friend bool operator==(const EisensteinRat& x, const EisensteinRat& y) { return x.a == y.a && x.b == y.b; }
    std::string str() const;
};

bool norm_divisibility(const EisensteinInt& x, const BigInt& ell);

} // namespace hc
