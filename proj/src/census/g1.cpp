#include "engine.hpp"
#include "heckecount/census/orbits.hpp"
#include "heckecount/error.hpp"

#include <mutex>
#include <numeric>

namespace hc::census {

using detail::CharKind;
using detail::CharSums;
using detail::Tower;

FieldCtx field_for(std::uint64_t q)
{
    PrimePower pp = prime_power(q);
    if (pp.p == 0)
        throw Unsupported(std::to_string(q) + " is not a prime power");
    if (q > FieldCtx::max_size)
        throw Unsupported("q = " + std::to_string(q) + " exceeds 2^20");
    return FieldCtx(pp.p, pp.n);
}

BigInt gl_order(unsigned n, std::uint64_t q)
{
    BigInt qn = ipow(BigInt(static_cast<unsigned long>(q)), n), r = 1, qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= static_cast<unsigned long>(q);
    }
    return r;
}

namespace {

struct Weierstrass {
    Elem a1, a2, a3, a4, a6;
};

Elem discriminant(const FieldCtx& F, const Weierstrass& w)
{
    auto k = [&](std::int64_t n) { return F.from_int(n); };
    auto m = [&](Elem x, Elem y) { return F.mul(x, y); };
    auto a = [&](Elem x, Elem y) { return F.add(x, y); };
    auto s = [&](Elem x, Elem y) { return F.sub(x, y); };
    Elem b2 = a(m(w.a1, w.a1), m(k(4), w.a2));
    Elem b4 = a(m(k(2), w.a4), m(w.a1, w.a3));
    Elem b6 = a(m(w.a3, w.a3), m(k(4), w.a6));
    Elem b8 = s(a(a(m(m(w.a1, w.a1), w.a6), m(k(4), m(w.a2, w.a6))), m(w.a2, m(w.a3, w.a3))),
                a(m(w.a1, m(w.a3, w.a4)), m(w.a4, w.a4)));
    Elem d = F.neg(m(m(b2, b2), b8));
    d = s(d, m(k(8), m(b4, m(b4, b4))));
    d = s(d, m(k(27), m(b6, b6)));
    d = a(d, m(k(9), m(b2, m(b4, b6))));
    return d;
}

// q + 1 - #E(F_q), by direct count.
std::int64_t weierstrass_trace(const FieldCtx& F, const Weierstrass& w)
{
    std::int64_t n = 1; // point at infinity
    for (Elem x = 0; x < F.q(); ++x) {
        Elem A = F.add(F.mul(w.a1, x), w.a3);
        Elem R = F.add(F.mul(F.add(F.mul(F.add(x, w.a2), x), w.a4), x), w.a6);
        if (F.p() == 2) {
            if (A == 0)
                n += 1;
            else if (F.abs_trace(F.div(R, F.mul(A, A))) == 0)
                n += 2;
        } else {
            Elem D = F.add(F.mul(A, A), F.mul(F.from_int(4), R));
            n += 1 + F.chi2(D);
        }
    }
    return static_cast<std::int64_t>(F.q()) + 1 - n;
}

// (u, r, s, t) acting on (a1, a2, a3, a4, a6)
Weierstrass transform(const FieldCtx& F, const Weierstrass& w, Elem u, Elem r, Elem s, Elem t)
{
    auto k = [&](std::int64_t n) { return F.from_int(n); };
    auto m = [&](Elem x, Elem y) { return F.mul(x, y); };
    auto a = [&](Elem x, Elem y) { return F.add(x, y); };
    auto sb = [&](Elem x, Elem y) { return F.sub(x, y); };
    Elem ui = F.inv(u);
    Elem ui2 = m(ui, ui), ui3 = m(ui2, ui), ui4 = m(ui3, ui), ui6 = m(ui4, ui2);
    Weierstrass o;
    o.a1 = m(ui, a(w.a1, m(k(2), s)));
    o.a2 = m(ui2, sb(a(sb(w.a2, m(s, w.a1)), m(k(3), r)), m(s, s)));
    o.a3 = m(ui3, a(a(w.a3, m(r, w.a1)), m(k(2), t)));
    Elem a4 = sb(w.a4, m(s, w.a3));
    a4 = a(a4, m(k(2), m(r, w.a2)));
    a4 = sb(a4, m(a(t, m(r, s)), w.a1));
    a4 = a(a4, m(k(3), m(r, r)));
    a4 = sb(a4, m(k(2), m(s, t)));
    o.a4 = m(ui4, a4);
    Elem a6 = a(w.a6, m(r, w.a4));
    a6 = a(a6, m(m(r, r), w.a2));
    a6 = a(a6, m(r, m(r, r)));
    a6 = sb(a6, m(t, w.a3));
    a6 = sb(a6, m(t, t));
    a6 = sb(a6, m(r, m(t, w.a1)));
    o.a6 = m(ui6, a6);
    return o;
}

Census short_form_census(std::uint64_t q, const BuildOptions& opt)
{
    Tower tower(q, 1);
    const FieldCtx& F = tower.base();
    CharSums sums(tower, 3, CharKind::quadratic);
    const std::uint64_t g6 = std::gcd<std::uint64_t>(6, q - 1), g4 = std::gcd<std::uint64_t>(4, q - 1);

    struct Rep {
        Elem a, b;
        std::int32_t aut;
    };
    std::vector<Rep> reps;
    for (std::uint64_t k = 0; k < g6; ++k)
        reps.push_back({0, F.exp(static_cast<std::int64_t>(k)), static_cast<std::int32_t>(g6)});
    for (std::uint64_t k = 0; k < g4; ++k)
        reps.push_back({F.exp(static_cast<std::int64_t>(k)), 0, static_cast<std::int32_t>(g4)});
    for (std::uint64_t k = 0; k < g4; ++k) {
        Elem a = F.exp(static_cast<std::int64_t>(k));
        Elem a3 = F.mul(F.from_int(4), F.mul(a, F.mul(a, a)));
        for (Elem b = 1; b < q; ++b) {
            // with four 4th-power classes, u = i identifies b with -b
            if (g4 == 4 && F.neg(b) < b)
                continue;
            if (F.add(a3, F.mul(F.from_int(27), F.mul(b, b))) == 0)
                continue;
            reps.push_back({a, b, 2});
        }
    }

    Census c;
    c.q = q;
    c.family = Family::g1;
    c.normalization = BigInt(static_cast<unsigned long>(q - 1));
    std::mutex mu;
    const Census proto = c;
    detail::parallel_slices(reps.size(), opt.threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        Census part = proto;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const Elem f[4] = {reps[i].b, reps[i].a, 0, 1};
            auto n = sums.counts(f, 1);
            std::int64_t a1 = -(static_cast<std::int64_t>(n[1]) - static_cast<std::int64_t>(n[2]));
            part.add({{a1}, reps[i].aut, false}, 1);
        }
        std::lock_guard lock(mu);
        c.merge(part);
    });
    return c;
}

} // namespace

Census build_census_g1_orbits(std::uint64_t q, unsigned threads)
{
    FieldCtx F = field_for(q);
    const unsigned dim = 5 * F.n();
    if (q > 27)
        throw Unsupported("full Weierstrass orbit classification needs q <= 27");

    auto as_w = [](const std::vector<Elem>& v) { return Weierstrass{v[0], v[1], v[2], v[3], v[4]}; };
    auto as_v = [](const Weierstrass& w) { return std::vector<Elem>{w.a1, w.a2, w.a3, w.a4, w.a6}; };
    auto make = [&](Elem u, Elem r, Elem s, Elem t) {
        return AffineAction(F.p(), dim, [&, u, r, s, t](const std::vector<std::uint32_t>& d) {
            return detail::to_digits(F, as_v(transform(F, as_w(detail::from_digits(F, d)), u, r, s, t)));
        });
    };
    std::vector<AffineAction> gens;
    gens.push_back(make(F.generator(), 0, 0, 0));
    Elem zeta = 1;
    for (unsigned j = 0; j < F.n(); ++j, zeta *= F.p()) {
        gens.push_back(make(1, zeta, 0, 0));
        gens.push_back(make(1, 0, zeta, 0));
        gens.push_back(make(1, 0, 0, zeta));
    }

    Census c;
    c.q = q;
    c.family = Family::g1;
    c.normalization = BigInt(static_cast<unsigned long>(q - 1)) * ipow(static_cast<long>(q), 3);
    for (const Orbit& o : orbits(F.p(), dim, gens, threads)) {
        Weierstrass w = as_w(detail::from_digits(F, unpack_index(o.rep, F.p(), dim)));
        if (discriminant(F, w) == 0)
            continue;
        BigInt aut = exact_div(c.normalization, BigInt(static_cast<unsigned long>(o.size)));
        c.add({{weierstrass_trace(F, w)}, static_cast<std::int32_t>(aut.get_si()), false}, 1);
    }
    return c;
}

Census build_census_g1_normal_forms(std::uint64_t q, const BuildOptions& opt)
{
    FieldCtx F = field_for(q);
    if (F.p() != 2 && F.p() != 3)
        throw InvalidArgument("normal forms are for characteristic 2 and 3");

    struct Form {
        Weierstrass w;
        std::int64_t weight;
    };
    std::vector<Form> forms;
    const std::int64_t Q = static_cast<std::int64_t>(q);
    if (F.p() == 3) {
        Elem nu = F.generator(); // a non-square
        for (Elem a2 : {Elem(1), nu})
            for (Elem a6 = 0; a6 < q; ++a6)
                forms.push_back({{0, a2, 0, 0, a6}, Q * Q * Q * (Q - 1) / 2});
        const std::int64_t g4 = std::gcd<std::int64_t>(4, Q - 1);
        for (std::int64_t k = 0; k < g4; ++k)
            for (Elem a6 = 0; a6 < q; ++a6)
                forms.push_back({{0, 0, 0, F.exp(k), a6}, Q * Q * (Q - 1) / g4});
    } else {
        Elem gamma = 0;
        for (Elem x = 1; x < q; ++x)
            if (F.abs_trace(x) == 1) {
                gamma = x;
                break;
            }
        for (Elem a2 : {Elem(0), gamma})
            for (Elem a6 = 0; a6 < q; ++a6)
                forms.push_back({{1, a2, 0, 0, a6}, (Q - 1) * Q * Q * (Q / 2)});
        const std::int64_t g3 = std::gcd<std::int64_t>(3, Q - 1);
        for (std::int64_t k = 0; k < g3; ++k) {
            Elem a3 = F.exp(k);
            // orbits of a4 under a4 -> (a4 + s a3 + s^4)/u, u^3 = 1
            std::vector<Elem> parent(q);
            std::iota(parent.begin(), parent.end(), Elem(0));
            auto find = [&](Elem x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            auto unite = [&](Elem x, Elem y) {
                x = find(x), y = find(y);
                if (x != y)
                    parent[std::max(x, y)] = std::min(x, y);
            };
            Elem s = 1;
            for (unsigned j = 0; j < F.n(); ++j, s *= 2) {
                Elem shift = F.add(F.mul(s, a3), F.pow(s, 4));
                for (Elem x = 0; x < q; ++x)
                    unite(x, F.add(x, shift));
            }
            if (g3 == 3) {
                Elem u = F.exp((Q - 1) / 3);
                for (Elem x = 0; x < q; ++x)
                    unite(x, F.div(x, u));
            }
            std::vector<std::int64_t> size(q, 0);
            for (Elem x = 0; x < q; ++x)
                ++size[find(x)];
            for (Elem a4 = 0; a4 < q; ++a4) {
                if (find(a4) != a4)
                    continue;
                for (Elem a6 = 0; a6 < q; ++a6)
                    forms.push_back({{0, 0, a3, a4, a6}, (Q - 1) / g3 * Q * size[a4]});
            }
        }
    }

    Census c;
    c.q = q;
    c.family = Family::g1;
    c.normalization = BigInt(static_cast<unsigned long>(q - 1)) * ipow(static_cast<long>(q), 3);
    std::mutex mu;
    const Census proto = c;
    detail::parallel_slices(forms.size(), opt.threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        Census part = proto;
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (discriminant(F, forms[i].w) == 0)
                continue;
            part.add({{weierstrass_trace(F, forms[i].w)}, 0, false}, forms[i].weight);
        }
        std::lock_guard lock(mu);
        c.merge(part);
    });
    return c;
}

Census build_census_g1(std::uint64_t q, const BuildOptions& opt)
{
    FieldCtx F = field_for(q);
    if (q > (1u << 16))
        throw Unsupported("genus-1 census limited to q <= 2^16");
    if (F.p() > 3)
        return short_form_census(q, opt);
    if (q <= 27)
        return build_census_g1_orbits(q, opt.threads);
    return build_census_g1_normal_forms(q, opt);
}

BigInt g1_full_family_smooth_count(std::uint64_t q)
{
    FieldCtx F = field_for(q);
    BigInt singular = 0;
    if (F.p() <= 3) {
        // In characteristic 2 and 3 the discriminant is linear in a6 with
        // slope -b2^3, b2 = a1^2 + 4 a2; it only needs evaluating when b2 = 0.
        for (Elem a1 = 0; a1 < q; ++a1)
            for (Elem a2 = 0; a2 < q; ++a2) {
                Elem b2 = F.add(F.mul(a1, a1), F.mul(F.from_int(4), a2));
                if (b2 != 0) {
                    singular += static_cast<unsigned long>(q * q);
                    continue;
                }
                for (Elem a3 = 0; a3 < q; ++a3)
                    for (Elem a4 = 0; a4 < q; ++a4)
                        if (discriminant(F, {a1, a2, a3, a4, 0}) == 0)
                            singular += static_cast<unsigned long>(q);
            }
        return ipow(static_cast<long>(q), 5) - singular;
    }
    // p > 3: Delta is quadratic in a6; interpolate from a6 = 0, 1, -1
    const Elem half = F.inv(2);
    for (Elem a1 = 0; a1 < q; ++a1)
        for (Elem a2 = 0; a2 < q; ++a2)
            for (Elem a3 = 0; a3 < q; ++a3)
                for (Elem a4 = 0; a4 < q; ++a4) {
                    Elem d0 = discriminant(F, {a1, a2, a3, a4, 0});
                    Elem d1 = discriminant(F, {a1, a2, a3, a4, 1});
                    Elem dm = discriminant(F, {a1, a2, a3, a4, F.neg(1)});
                    Elem c2 = F.sub(F.mul(F.add(d1, dm), half), d0);
                    Elem c1 = F.mul(F.sub(d1, dm), half);
                    std::uint64_t roots;
                    if (c2 == 0) {
                        roots = c1 != 0 ? 1 : (d0 == 0 ? q : 0);
                    } else {
                        Elem disc = F.sub(F.mul(c1, c1), F.mul(F.from_int(4), F.mul(c2, d0)));
                        roots = static_cast<std::uint64_t>(1 + F.chi2(disc));
                    }
                    singular += static_cast<unsigned long>(roots);
                }
    return ipow(static_cast<long>(q), 5) - singular;
}

} // namespace hc::census

namespace hc::census {

BigInt default_normalization(Family f, std::uint64_t q)
{
    FieldCtx F = field_for(q);
    const BigInt Q = static_cast<unsigned long>(q);
    switch (f) {
    case Family::g1:
        return F.p() > 3 ? Q - 1 : BigInt((Q - 1) * Q * Q * Q);
    case Family::g2:
        return F.p() == 2 ? BigInt(gl_order(2, q) * ipow(Q, 4)) : gl_order(2, q);
    case Family::g3_quartic:
        return gl_order(3, q);
    case Family::g3_hyp:
        return F.p() == 2 ? BigInt(gl_order(2, q) * ipow(Q, 5)) : gl_order(2, q);
    case Family::picard:
        return Q * (Q - 1) * (Q - 1);
    }
    throw InvalidArgument("unknown family");
}

} // namespace hc::census
