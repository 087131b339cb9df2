#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hc {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt ipow(const BigInt& base, unsigned long exp);
BigInt ipow(long base, unsigned long exp);

// Throws IntegrityError unless den divides num.
BigInt exact_div(const BigInt& num, const BigInt& den);

// Throws IntegrityError unless r is an integer.
BigInt to_integer(const BigRat& r);

std::string to_string(const BigInt& x);
std::string to_string(const BigRat& x);

// Decimal integer with optional sign; throws InvalidArgument.
BigInt parse_bigint(std::string_view text);

// Floor of sqrt for nonnegative x.
BigInt isqrt(const BigInt& x);

bool is_prime_small(std::uint64_t n);

// Returns (p, n) with q = p^n, or (0, 0) if q is not a prime power.
struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
};
PrimePower prime_power(std::uint64_t q);

} // namespace hc
