#include "hyperelliptic.hpp"

#include "engine.hpp"
#include "heckecount/census/orbits.hpp"
#include "heckecount/error.hpp"

#include <mutex>

namespace hc::census::detail {

namespace {

Census empty_census(std::uint64_t q, unsigned g, const BigInt& norm)
{
    Census c;
    c.q = q;
    c.family = g == 2 ? Family::g2 : Family::g3_hyp;
    c.normalization = norm;
    return c;
}

std::int64_t qpow(std::uint64_t q, unsigned i)
{
    std::int64_t r = 1;
    for (unsigned k = 0; k < i; ++k)
        r *= static_cast<std::int64_t>(q);
    return r;
}

// chi_i(c) for c in F_q: the quadratic character of F_{q^i} restricted.
int chi_ext(const FieldCtx& F, Elem c, unsigned i)
{
    int s = F.chi2(c);
    return (i % 2 == 0 && s != 0) ? 1 : s;
}

// Power sums of y^2 = f(x, z), f a binary form of degree 2g+2 given by its
// affine coefficients; f must be smooth.
std::vector<std::int64_t> odd_powersums(const CharSums& sums, const FieldCtx& F, const std::vector<Elem>& f,
                                        unsigned g)
{
    std::vector<std::int64_t> a(g);
    const Elem lead = f[2 * g + 2];
    for (unsigned i = 1; i <= g; ++i) {
        auto n = sums.counts(f, i);
        std::int64_t S = static_cast<std::int64_t>(n[1]) - static_cast<std::int64_t>(n[2]);
        std::int64_t inf = lead == 0 ? 1 : 1 + chi_ext(F, lead, i);
        std::int64_t N = qpow(F.q(), i) + S + inf;
        a[i - 1] = qpow(F.q(), i) + 1 - N;
    }
    return a;
}

bool odd_smooth(const FieldCtx& F, const std::vector<Elem>& f, unsigned g)
{
    poly::Poly pf(f.begin(), f.end());
    return poly::degree(pf) >= static_cast<int>(2 * g + 1) && poly::squarefree(F, pf);
}

std::vector<std::int64_t> negate_odd(std::vector<std::int64_t> a)
{
    for (std::size_t i = 0; i < a.size(); i += 2)
        a[i] = -a[i];
    return a;
}

} // namespace

Census hyperelliptic_odd_reduced(std::uint64_t q, unsigned g, const BuildOptions& opt)
{
    Tower tower(q, g);
    const FieldCtx& F = tower.base();
    if (F.p() == 2)
        throw InvalidArgument("odd characteristic only");
    CharSums sums(tower, 2 * g + 2, CharKind::quadratic);
    Census c = empty_census(q, g, gl_order(2, q));
    const Census proto = c;
    const std::int64_t half = static_cast<std::int64_t>(q - 1) / 2;

    for (unsigned d : {2 * g + 1, 2 * g + 2}) {
        ReducedMonic R = reduce_monic(F, d);
        std::mutex mu;
        Census acc = proto;
        parallel_slices(R.size(), opt.threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
            Census part = proto;
            std::vector<Elem> f;
            for (std::uint64_t it = lo; it < hi; ++it) {
                std::uint64_t w = R.get(it, f);
                if (!poly::squarefree(F, f))
                    continue;
                f.resize(2 * g + 3, 0);
                auto a = odd_powersums(sums, F, f, g);
                std::int64_t n = static_cast<std::int64_t>(w) * half;
                part.add({a, 0, false}, n);
                part.add({negate_odd(a), 0, false}, n);
            }
            std::lock_guard lock(mu);
            acc.merge(part);
        });
        c.merge(acc);
        if (opt.progress)
            opt.progress("degree " + std::to_string(d) + " done");
    }
    return c;
}

Census hyperelliptic_odd_orbits(std::uint64_t q, unsigned g)
{
    Tower tower(q, g);
    const FieldCtx& F = tower.base();
    CharSums sums(tower, 2 * g + 2, CharKind::quadratic);
    const unsigned deg = 2 * g + 2, dim = (deg + 1) * F.n();
    std::vector<AffineAction> gens;
    for (const auto& A : gl_generators(F, 2))
        gens.emplace_back(F.p(), dim, [&, A](const std::vector<std::uint32_t>& d) {
            return to_digits(F, substitute(F, 2, deg, from_digits(F, d), A));
        });
    const Elem sq = F.mul(F.generator(), F.generator());
    gens.emplace_back(F.p(), dim, [&, sq](const std::vector<std::uint32_t>& d) {
        auto v = from_digits(F, d);
        for (auto& x : v)
            x = F.mul(x, sq);
        return to_digits(F, v);
    });

    Census c = empty_census(q, g, gl_order(2, q));
    for (const Orbit& o : orbits(F.p(), dim, gens)) {
        auto f = from_digits(F, unpack_index(o.rep, F.p(), dim));
        if (!odd_smooth(F, f, g))
            continue;
        BigInt aut = exact_div(c.normalization, BigInt(static_cast<unsigned long>(o.size)));
        c.add({odd_powersums(sums, F, f, g), static_cast<std::int32_t>(aut.get_si()), false}, 1);
    }
    return c;
}

namespace {

struct AsCurve {
    std::vector<Elem> h; // g+2 coefficients
    std::vector<Elem> f; // 2g+3 coefficients
};

bool as_smooth(const FieldCtx& F, const AsCurve& C, unsigned g)
{
    poly::Poly h(C.h.begin(), C.h.end()), f(C.f.begin(), C.f.end());
    poly::trim(h);
    poly::trim(f);
    if (h.empty())
        return false;
    poly::Poly dh = poly::derivative(F, h), df = poly::derivative(F, f);
    poly::Poly test = poly::add(F, poly::mul(F, poly::mul(F, dh, dh), f), poly::mul(F, df, df));
    if (!poly::coprime(F, h, test))
        return false;
    if (C.h[g + 1] == 0) {
        Elem v = F.add(F.mul(F.mul(C.h[g], C.h[g]), C.f[2 * g + 2]), F.mul(C.f[2 * g + 1], C.f[2 * g + 1]));
        if (v == 0)
            return false;
    }
    return true;
}

std::vector<std::int64_t> as_powersums(const Tower& tower, const AsCurve& C, unsigned g)
{
    std::vector<std::int64_t> a(g);
    for (unsigned i = 1; i <= g; ++i) {
        const FieldCtx& E = tower.ext(i);
        const SubfieldEmbedding& emb = tower.emb(i);
        std::vector<Elem> h(C.h.size()), f(C.f.size());
        for (std::size_t k = 0; k < h.size(); ++k)
            h[k] = emb.to_big(C.h[k]);
        for (std::size_t k = 0; k < f.size(); ++k)
            f[k] = emb.to_big(C.f[k]);
        std::int64_t N = 0;
        for (Elem x = 0; x < E.q(); ++x) {
            Elem hx = poly::eval(E, h, x);
            if (hx == 0) {
                N += 1;
                continue;
            }
            Elem fx = poly::eval(E, f, x);
            if (E.abs_trace(E.div(fx, E.mul(hx, hx))) == 0)
                N += 2;
        }
        Elem H = h[g + 1];
        if (H == 0)
            N += 1;
        else if (E.abs_trace(E.div(f[2 * g + 2], E.mul(H, H))) == 0)
            N += 2;
        a[i - 1] = qpow(tower.base().q(), i) + 1 - N;
    }
    return a;
}

// B^2 + h B for binary forms of degree g+1.
std::vector<Elem> as_shift(const FieldCtx& F, const std::vector<Elem>& h, const std::vector<Elem>& B)
{
    std::vector<Elem> out(2 * h.size() - 1, 0);
    for (std::size_t i = 0; i < B.size(); ++i) {
        out[2 * i] = F.add(out[2 * i], F.mul(B[i], B[i]));
        for (std::size_t j = 0; j < h.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(h[j], B[i]));
    }
    return out;
}

BigInt as_normalization(std::uint64_t q, unsigned g)
{
    return gl_order(2, q) * ipow(static_cast<long>(q), g + 2);
}

} // namespace

Census artin_schreier_reduced(std::uint64_t q, unsigned g, const BuildOptions& opt)
{
    Tower tower(q, g);
    const FieldCtx& F = tower.base();
    if (F.p() != 2)
        throw InvalidArgument("Artin-Schreier model is for characteristic 2");
    const unsigned n = F.n(), hd = g + 1, hdim = (hd + 1) * n, fcoef = 2 * g + 3, fbits = fcoef * n;
    if (fbits > 63)
        throw Unsupported("field too large for the Artin-Schreier reduction");

    // orbits of h under h -> e^{-1} h o A
    std::vector<AffineAction> gens;
    for (const auto& A : gl_generators(F, 2))
        gens.emplace_back(2, hdim, [&, A](const std::vector<std::uint32_t>& d) {
            return to_digits(F, substitute(F, 2, hd, from_digits(F, d), A));
        });
    gens.emplace_back(2, hdim, [&](const std::vector<std::uint32_t>& d) {
        auto v = from_digits(F, d);
        for (auto& x : v)
            x = F.mul(x, F.generator());
        return to_digits(F, v);
    });
    std::vector<Orbit> horbits = orbits(2, hdim, gens);

    auto pack_f = [&](const std::vector<Elem>& f) {
        std::uint64_t m = 0;
        for (unsigned i = 0; i < fcoef; ++i)
            m |= static_cast<std::uint64_t>(f[i]) << (i * n);
        return m;
    };
    auto unpack_f = [&](std::uint64_t m) {
        std::vector<Elem> f(fcoef);
        for (unsigned i = 0; i < fcoef; ++i)
            f[i] = static_cast<Elem>((m >> (i * n)) & ((1u << n) - 1));
        return f;
    };

    Census c = empty_census(q, g, as_normalization(q, g));
    std::mutex mu;
    const Census proto = c;
    for (const Orbit& ho : horbits) {
        std::vector<Elem> h = from_digits(F, unpack_index(ho.rep, 2, hdim));
        bool zero = true;
        for (Elem x : h)
            zero = zero && x == 0;
        if (zero)
            continue;
        // row space of B -> B^2 + hB over F_2, reduced echelon form
        std::vector<std::uint64_t> rows;
        std::vector<int> pivots;
        for (unsigned i = 0; i <= hd; ++i)
            for (unsigned j = 0; j < n; ++j) {
                std::vector<Elem> B(hd + 1, 0);
                B[i] = Elem(1) << j;
                std::uint64_t v = pack_f(as_shift(F, h, B));
                for (std::size_t r = 0; r < rows.size(); ++r)
                    if ((v >> pivots[r]) & 1)
                        v ^= rows[r];
                if (!v)
                    continue;
                int piv = 63 - __builtin_clzll(v);
                for (auto& r : rows)
                    if ((r >> piv) & 1)
                        r ^= v;
                rows.push_back(v);
                pivots.push_back(piv);
            }
        std::uint64_t pivmask = 0;
        for (int pv : pivots)
            pivmask |= 1ull << pv;
        std::vector<int> free_bits;
        for (unsigned b = 0; b < fbits; ++b)
            if (!((pivmask >> b) & 1))
                free_bits.push_back(static_cast<int>(b));
        const std::int64_t weight = static_cast<std::int64_t>(ho.size) << rows.size();
        const std::uint64_t count = 1ull << free_bits.size();

        Census acc = proto;
        parallel_slices(count, opt.threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
            Census part = proto;
            for (std::uint64_t k = lo; k < hi; ++k) {
                std::uint64_t m = 0;
                for (std::size_t b = 0; b < free_bits.size(); ++b)
                    if ((k >> b) & 1)
                        m |= 1ull << free_bits[b];
                AsCurve C{h, unpack_f(m)};
                if (!as_smooth(F, C, g))
                    continue;
                part.add({as_powersums(tower, C, g), 0, false}, weight);
            }
            std::lock_guard lock(mu);
            acc.merge(part);
        });
        c.merge(acc);
    }
    return c;
}

Census artin_schreier_orbits(std::uint64_t q, unsigned g)
{
    Tower tower(q, g);
    const FieldCtx& F = tower.base();
    const unsigned n = F.n(), hd = g + 1, hc = hd + 1, fc = 2 * g + 3, dim = (hc + fc) * n;
    auto split = [&](const std::vector<std::uint32_t>& d) {
        auto v = from_digits(F, d);
        return AsCurve{std::vector<Elem>(v.begin(), v.begin() + hc), std::vector<Elem>(v.begin() + hc, v.end())};
    };
    auto join = [&](const AsCurve& C) {
        std::vector<Elem> v = C.h;
        v.insert(v.end(), C.f.begin(), C.f.end());
        return to_digits(F, v);
    };
    std::vector<AffineAction> gens;
    for (const auto& A : gl_generators(F, 2))
        gens.emplace_back(2, dim, [&, A](const std::vector<std::uint32_t>& d) {
            AsCurve C = split(d);
            return join({substitute(F, 2, hd, C.h, A), substitute(F, 2, 2 * hd, C.f, A)});
        });
    gens.emplace_back(2, dim, [&](const std::vector<std::uint32_t>& d) {
        AsCurve C = split(d);
        Elem e = F.inv(F.generator()), e2 = F.mul(e, e);
        for (auto& x : C.h)
            x = F.mul(x, e);
        for (auto& x : C.f)
            x = F.mul(x, e2);
        return join(C);
    });
    for (unsigned i = 0; i <= hd; ++i)
        for (unsigned j = 0; j < n; ++j)
            gens.emplace_back(2, dim, [&, i, j](const std::vector<std::uint32_t>& d) {
                AsCurve C = split(d);
                std::vector<Elem> B(hc, 0);
                B[i] = Elem(1) << j;
                auto s = as_shift(F, C.h, B);
                for (unsigned k = 0; k < fc; ++k)
                    C.f[k] = F.add(C.f[k], s[k]);
                return join(C);
            });

    Census c = empty_census(q, g, as_normalization(q, g));
    for (const Orbit& o : orbits(2, dim, gens)) {
        AsCurve C = split(unpack_index(o.rep, 2, dim));
        if (!as_smooth(F, C, g))
            continue;
        BigInt aut = exact_div(c.normalization, BigInt(static_cast<unsigned long>(o.size)));
        c.add({as_powersums(tower, C, g), static_cast<std::int32_t>(aut.get_si()), false}, 1);
    }
    return c;
}

} // namespace hc::census::detail
