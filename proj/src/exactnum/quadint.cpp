#include "heckecount/exactnum/quadint.hpp"

#include "heckecount/error.hpp"

#include <cctype>

namespace hc {

namespace {

BigInt common_d(const QuadInt& x, const QuadInt& y)
{
    if (x.b == 0)
        return y.d;
    if (y.b == 0)
        return x.d;
    if (x.d != y.d)
        throw InvalidArgument("mixing sqrt(" + x.d.get_str() + ") and sqrt(" + y.d.get_str() + ")");
    return x.d;
}

} // namespace

bool QuadInt::is_algebraic_integer() const
{
    if (a.get_den() == 1 && b.get_den() == 1)
        return true;
    // (u + v sqrt d)/2 with u = v mod 2 is integral when d = 1 mod 4
    BigRat a2 = 2 * a, b2 = 2 * b;
    if (a2.get_den() != 1 || b2.get_den() != 1)
        return false;
    BigInt dm = d % 4;
    if (dm < 0)
        dm += 4;
    if (dm != 1)
        return false;
    BigInt diff = a2.get_num() - b2.get_num();
    return mpz_even_p(diff.get_mpz_t()) != 0;
}

QuadInt& QuadInt::operator+=(const QuadInt& o)
{
    d = common_d(*this, o);
    a += o.a;
    b += o.b;
    return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o)
{
    d = common_d(*this, o);
    a -= o.a;
    b -= o.b;
    return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o)
{
    d = common_d(*this, o);
    BigRat na = a * o.a + d * b * o.b;
    BigRat nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

QuadInt& QuadInt::operator*=(const BigRat& k)
{
    a *= k;
    b *= k;
    return *this;
}

QuadInt QuadInt::inverse() const
{
    BigRat n = norm();
    if (n == 0)
        throw InvalidArgument("inverse of zero");
    return {d, a / n, -b / n};
}

bool operator==(const QuadInt& x, const QuadInt& y)
{
    if (x.a != y.a || x.b != y.b)
        return false;
    return x.b == 0 || x.d == y.d;
}

std::string QuadInt::str() const
{
    if (b == 0)
        return a.get_str();
    std::string bs = b.get_str();
    std::string tail = "*sqrt(" + d.get_str() + ")";
    if (a == 0)
        return bs + tail;
    if (bs[0] == '-')
        return a.get_str() + "-" + bs.substr(1) + tail;
    return a.get_str() + "+" + bs + tail;
}

namespace {

BigRat parse_rat(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return BigRat(parse_bigint(s));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0)
        throw InvalidArgument("zero denominator in '" + s + "'");
    BigRat r(parse_bigint(s.substr(0, slash)), den);
    r.canonicalize();
    return r;
}

} // namespace

QuadInt parse_quadint(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    auto pos = s.find("*sqrt(");
    if (pos == std::string::npos)
        return QuadInt::rational(parse_rat(s));
    if (s.back() != ')')
        throw InvalidArgument("bad quadratic value '" + s + "'");
    BigInt d = parse_bigint(s.substr(pos + 6, s.size() - pos - 7));
    std::string head = s.substr(0, pos);
    std::size_t cut = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;)
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/')
        {
            cut = i;
            break;
        }
    if (cut == std::string::npos)
        return {d, 0, parse_rat(head)};
    return {d, parse_rat(head.substr(0, cut)), parse_rat(head.substr(cut))};
}

std::pair<BigInt, BigInt> squarefree_split(const BigInt& m)
{
    if (m == 0)
        return {0, 0};
    BigInt rest = abs(m), s = 1, d = 1;
    const unsigned long limit = 1000000;
    for (unsigned long p = 2; p <= limit; ++p) {
        BigInt pp(p);
        if (pp * pp > rest)
            break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2)
            s *= p;
        if (e % 2)
            d *= p;
    }
    // leftover is prime, a prime square, or a product of large primes
    if (mpz_perfect_square_p(rest.get_mpz_t()))
        s *= isqrt(rest);
    else
        d *= rest;
    if (m < 0)
        d = -d;
    return {s, d};
}

std::pair<QuadInt, QuadInt> quadratic_roots(const BigRat& t, const BigRat& n)
{
    BigRat disc = t * t - 4 * n;
    // disc = num/den = num*den/den^2
    BigInt num = disc.get_num() * disc.get_den();
    BigRat scale(1, disc.get_den());
    auto [s, d] = squarefree_split(num);
    if (d == 1 || num == 0) {
        BigRat r = BigRat(s) * scale;
        return {QuadInt::rational((t + r) / 2), QuadInt::rational((t - r) / 2)};
    }
    BigRat b = BigRat(s) * scale / 2;
    return {QuadInt(d, t / 2, b), QuadInt(d, t / 2, -b)};
}

bool norm_divisibility(const QuadInt& x, const BigInt& ell)
{
    if (!x.is_algebraic_integer())
        throw InvalidArgument("not an algebraic integer: " + x.str());
    if (ell == 0)
        throw InvalidArgument("modulus must be nonzero");
    BigInt n = to_integer(x.norm());
    return mpz_divisible_p(n.get_mpz_t(), ell.get_mpz_t()) != 0;
}

} // namespace hc
