#include "heckecount/exactnum/eisenstein.hpp"

#include "heckecount/error.hpp"

#include <cctype>

namespace hc {

EisensteinInt EisensteinInt::rho_pow(long k)
{
    switch (((k % 3) + 3) % 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};
    }
}

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o)
{
    a += o.a;
    b += o.b;
    return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o)
{
    a -= o.a;
    b -= o.b;
    return *this;
}

// (a + b rho)(c + d rho) = (ac - bd) + (ad + bc - bd) rho
EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o)
{
    BigInt bd = b * o.b;
    BigInt na = a * o.a - bd;
    BigInt nb = a * o.b + b * o.a - bd;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

EisensteinInt& EisensteinInt::operator*=(const BigInt& k)
{
    a *= k;
    b *= k;
    return *this;
}

EisensteinInt EisensteinInt::pow(unsigned long e) const
{
    EisensteinInt r(1), base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

namespace {
std::string rho_str(const std::string& a, const std::string& b)
{
    if (b == "0")
        return a;
    if (b[0] == '-')
        return a + "-" + b.substr(1) + "*rho";
    return a + "+" + b + "*rho";
}
} // namespace

std::string EisensteinInt::str() const { return rho_str(a.get_str(), b.get_str()); }
std::string EisensteinRat::str() const { return rho_str(a.get_str(), b.get_str()); }

EisensteinInt parse_eisenstein(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    auto pos = s.find("*rho");
    if (pos == std::string::npos) {
        if (s.find("rho") != std::string::npos)
            throw InvalidArgument("bad Eisenstein integer '" + std::string(text) + "'");
        return {parse_bigint(s), 0};
    }
    if (pos + 4 != s.size())
        throw InvalidArgument("bad Eisenstein integer '" + std::string(text) + "'");
    std::string head = s.substr(0, pos);
    // split at the last sign that is not leading
    std::size_t cut = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;)
        if (head[i] == '+' || head[i] == '-') {
            cut = i;
            break;
        }
    if (cut == std::string::npos)
        return {0, parse_bigint(head)};
    return {parse_bigint(head.substr(0, cut)), parse_bigint(head.substr(cut))};
}

EisensteinInt EisensteinRat::to_int() const
{
    return {to_integer(a), to_integer(b)};
}

EisensteinRat& EisensteinRat::operator+=(const EisensteinRat& o)
{
    a += o.a;
    b += o.b;
    return *this;
}

EisensteinRat& EisensteinRat::operator*=(const EisensteinRat& o)
{
    BigRat bd = b * o.b;
    BigRat na = a * o.a - bd;
    BigRat nb = a * o.b + b * o.a - bd;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

EisensteinRat& EisensteinRat::operator*=(const BigRat& k)
{
    a *= k;
    b *= k;
    return *this;
}

bool norm_divisibility(const EisensteinInt& x, const BigInt& ell)
{
    if (ell == 0)
        throw InvalidArgument("modulus must be nonzero");
    return mpz_divisible_p(x.norm().get_mpz_t(), ell.get_mpz_t()) != 0;
}

} // namespace hc
