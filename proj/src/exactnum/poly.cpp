#include "heckecount/exactnum/poly.hpp"

#include "heckecount/error.hpp"

namespace hc::poly {

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int degree(const Poly& f)
{
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0)
            return static_cast<int>(i);
    return -1;
}

Elem eval(const FieldCtx& F, const Poly& f, Elem x)
{
    Elem acc = 0;
    for (std::size_t i = f.size(); i-- > 0;)
        acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

Poly derivative(const FieldCtx& F, const Poly& f)
{
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i)), f[i]));
    trim(d);
    return d;
}

Poly add(const FieldCtx& F, const Poly& f, const Poly& g)
{
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
    trim(r);
    return r;
}

Poly mul(const FieldCtx& F, const Poly& f, const Poly& g)
{
    if (f.empty() || g.empty())
        return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
    }
    trim(r);
    return r;
}

Poly scale(const FieldCtx& F, const Poly& f, Elem c)
{
    Poly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = F.mul(f[i], c);
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const FieldCtx& F, const Poly& f, const Poly& g)
{
    int dg = degree(g);
    if (dg < 0)
        throw InvalidArgument("polynomial division by zero");
    Poly r = f;
    trim(r);
    int dr = degree(r);
    Poly quo(dr >= dg ? dr - dg + 1 : 0, 0);
    Elem lead_inv = F.inv(g[dg]);
    while (dr >= dg) {
        Elem c = F.mul(r[dr], lead_inv);
        quo[dr - dg] = c;
        for (int i = 0; i <= dg; ++i)
            r[i + dr - dg] = F.sub(r[i + dr - dg], F.mul(c, g[i]));
        trim(r);
        dr = degree(r);
    }
    return {quo, r};
}

Poly gcd(const FieldCtx& F, Poly f, Poly g)
{
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = divmod(F, f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.empty())
        f = scale(F, f, F.inv(f.back()));
    return f;
}

bool coprime(const FieldCtx& F, const Poly& f, const Poly& g)
{
    Poly d = gcd(F, f, g);
    return degree(d) == 0;
}

bool squarefree(const FieldCtx& F, const Poly& f)
{
    int d = degree(f);
    if (d < 0)
        return false;
    if (d == 0)
        return true;
    return coprime(F, f, derivative(F, f));
}

} // namespace hc::poly
