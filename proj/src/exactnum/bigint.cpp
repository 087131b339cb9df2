#include "heckecount/exactnum/bigint.hpp"

#include "heckecount/error.hpp"

namespace hc {

BigInt ipow(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt ipow(long base, unsigned long exp)
{
    return ipow(BigInt(base), exp);
}

BigInt exact_div(const BigInt& num, const BigInt& den)
{
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw IntegrityError("non-integral quotient " + num.get_str() + " / " + den.get_str());
    BigInt r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

BigInt to_integer(const BigRat& r)
{
    if (r.get_den() != 1)
        throw IntegrityError("expected an integer, got " + r.get_str());
    return r.get_num();
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const BigRat& x) { return x.get_str(); }

BigInt parse_bigint(std::string_view text)
{
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        throw InvalidArgument("not an integer: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw InvalidArgument("not an integer: '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return BigInt(s, 10);
}

BigInt isqrt(const BigInt& x)
{
    if (x < 0)
        throw InvalidArgument("isqrt of negative value");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

bool is_prime_small(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimePower prime_power(std::uint64_t q)
{
    if (q < 2)
        return {};
    std::uint64_t p = 2;
    while (q % p != 0)
        ++p;
    std::uint32_t n = 0;
    while (q % p == 0) {
        q /= p;
        ++n;
    }
    if (q != 1)
        return {};
    return {static_cast<std::uint32_t>(p), n};
}

} // namespace hc
