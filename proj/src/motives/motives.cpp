#include "heckecount/motives/motives.hpp"

#include "heckecount/error.hpp"

#include <algorithm>
#include <sstream>

namespace hc::motives {

std::string Symbol::str() const
{
    std::ostringstream out;
    out << "S[";
    for (std::size_t i = 0; i < args.size(); ++i)
        out << (i ? "," : "") << args[i];
    out << "]";
    return out.str();
}

std::string Monomial::str() const
{
    std::string s;
    if (l == 1)
        s = "L";
    else if (l > 1)
        s = "L^" + std::to_string(l);
    for (const auto& sym : symbols)
        s += (s.empty() ? "" : "*") + sym.str();
    return s;
}

MotiveExpr::MotiveExpr(long n)
{
    if (n != 0)
        terms_[Monomial{}] = n;
}

MotiveExpr MotiveExpr::L(int m)
{
    if (m < 0)
        throw InvalidArgument("negative Lefschetz power");
    MotiveExpr e;
    e.terms_[Monomial{m, {}}] = 1;
    return e;
}

MotiveExpr MotiveExpr::S(std::vector<int> args)
{
    if (args.empty() || args.size() > 3)
        throw InvalidArgument("symbol needs one to three indices");
    if (args.size() == 1 && args[0] == 2)
        return -L() - 1;
    // S[n] vanishes when S_n does
    if (args.size() == 1 && args[0] > 2 && args[0] % 2 == 0 && dim_cusp_sl2(args[0]) == 0)
        return {};
    MotiveExpr e;
    e.terms_[Monomial{0, {Symbol{std::move(args)}}}] = 1;
    return e;
}

void MotiveExpr::add_term(const Monomial& m, const BigInt& c)
{
    if (c == 0)
        return;
    BigInt& slot = terms_[m];
    slot += c;
    if (slot == 0)
        terms_.erase(m);
}

MotiveExpr& MotiveExpr::operator+=(const MotiveExpr& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MotiveExpr& MotiveExpr::operator-=(const MotiveExpr& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MotiveExpr operator*(const MotiveExpr& x, const MotiveExpr& y)
{
    MotiveExpr r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) {
            Monomial m{mx.l + my.l, mx.symbols};
            m.symbols.insert(m.symbols.end(), my.symbols.begin(), my.symbols.end());
            if (m.symbols.size() > 2)
                throw InvalidArgument("at most two-fold symbol products");
            std::sort(m.symbols.begin(), m.symbols.end());
            r.add_term(m, cx * cy);
        }
    return r;
}

std::string MotiveExpr::str() const
{
    if (terms_.empty())
        return "0";
    // higher L-powers first; at equal power, pure powers before symbols
    std::vector<std::pair<Monomial, BigInt>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        if (x.first.l != y.first.l)
            return x.first.l > y.first.l;
        return x.first.symbols.size() < y.first.symbols.size();
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : order) {
        BigInt mag = abs(c);
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        std::string body = m.str();
        if (body.empty())
            out << to_string(mag);
        else if (mag == 1)
            out << body;
        else
            out << to_string(mag) << "*" << body;
        first = false;
    }
    return out.str();
}

long dim_cusp_sl2(int k)
{
    if (k % 2)
        throw InvalidArgument("odd weight has no level-one forms here");
    if (k < 2)
        throw InvalidArgument("weight must be at least 2");
    if (k == 2)
        return -1;
    if (k % 12 == 2)
        return k / 12 - 1;
    return k / 12;
}

namespace {

long s_raw(int n)
{
    return n % 2 ? 0 : dim_cusp_sl2(n);
}

} // namespace

MotiveExpr e2_extra_unchecked(int a, int b)
{
    if (b < 0 || a < b)
        throw InvalidArgument("e2_extra needs a >= b >= 0");
    MotiveExpr e = s_raw(a - b + 2);
    e -= MotiveExpr(s_raw(a + b + 4)) * (MotiveExpr::S({a - b + 2}) + 1) * MotiveExpr::L(b + 1);
    if (a % 2 == 0)
        e += MotiveExpr::S({b + 2}) + 1;
    else
        e -= MotiveExpr::S({a + 3});
    return e;
}

MotiveExpr e2_extra(int a, int b)
{
    if ((a - b) % 2)
        throw InvalidArgument("e2_extra needs a = b (mod 2); e_c vanishes otherwise");
    return e2_extra_unchecked(a, b);
}

BigInt TraceProvider::symbol(const Symbol& s) const
{
    const auto& v = s.args;
    if (v.size() == 1) {
        if (v[0] % 2)
            return 0;
        if (v[0] == 2)
            return -BigInt(static_cast<unsigned long>(q)) - 1;
        if (v[0] < 12)
            return 0;
        if (!s1)
            throw MissingData("no resolver for " + s.str());
        return s1(v[0]);
    }
    std::optional<BigInt> r;
    if (v.size() == 2 && s2)
        r = s2(v[0], v[1]);
    if (v.size() == 3 && s3)
        r = s3(v[0], v[1], v[2]);
    if (!r)
        throw MissingData("no resolver for " + s.str());
    return *r;
}

BigInt trace(const MotiveExpr& e, const TraceProvider& provider)
{
    BigInt total = 0;
    const BigInt q = static_cast<unsigned long>(provider.q);
    for (const auto& [m, c] : e.terms()) {
        BigInt t = c * ipow(q, m.l);
        for (const auto& s : m.symbols)
            t *= provider.symbol(s);
        total += t;
    }
    return total;
}

BigInt e3_extra_trace(int a, int b, int c, const TraceProvider& provider,
                      const std::function<BigInt(int, int)>& ec_A2)
{
    if (c < 0 || b < c || a < b)
        throw InvalidArgument("e3_extra needs a >= b >= c >= 0");
    auto term = [&](int x, int y, int s) -> BigInt {
        BigInt ec = (x - y) % 2 ? BigInt(0) : ec_A2(x, y);
        return ec + trace(e2_extra_unchecked(x, y) * MotiveExpr::S({s}), provider);
    };
    return -term(a + 1, b + 1, c + 2) + term(a + 1, c, b + 3) - term(b, c, a + 4);
}

} // namespace hc::motives
