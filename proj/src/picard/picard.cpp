#include "heckecount/picard/picard.hpp"

#include "heckecount/census/builders.hpp"
#include "heckecount/error.hpp"
#include "heckecount/exactnum/poly.hpp"

#include <deque>
#include <memory>
#include <mutex>

namespace hc::picard {

namespace {

EisensteinInt div_exact(const EisensteinInt& x, long n)
{
    if (!mpz_divisible_ui_p(x.a.get_mpz_t(), n) || !mpz_divisible_ui_p(x.b.get_mpz_t(), n))
        throw IntegrityError("Newton identity left Z[rho]: " + x.str());
    return {x.a / n, x.b / n};
}

EisensteinRat times(const EisensteinInt& x, const BigRat& r)
{
    EisensteinRat out(x);
    out *= r;
    return out;
}

// F_q and F_{q^i}, i = 1..3, with embeddings
struct Tower3 {
    std::deque<FieldCtx> fields;
    std::deque<SubfieldEmbedding> embs;
    explicit Tower3(std::uint64_t q)
    {
        FieldCtx F = census::field_for(q);
        for (unsigned i = 1; i <= 3; ++i)
            fields.emplace_back(F.p(), F.n() * i);
        for (unsigned i = 0; i < 3; ++i)
            embs.emplace_back(fields[0], fields[i]);
    }
};

const Tower3& tower(std::uint64_t q)
{
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<Tower3>> cache;
    std::lock_guard lock(mu);
    auto& t = cache[q];
    if (!t)
        t = std::make_unique<Tower3>(q);
    return *t;
}

std::vector<Elem> lift(const SubfieldEmbedding& e, const std::vector<Elem>& f)
{
    std::vector<Elem> out;
    for (Elem c : f)
        out.push_back(e.to_big(c));
    return out;
}

} // namespace

PicardClassData PicardClassData::conj() const
{
    PicardClassData d = *this;
    for (auto& x : d.p)
        x = x.conj();
    for (auto& x : d.e)
        x = x.conj();
    return d;
}

EisensteinInt PicardClassData::h(int k) const
{
    if (k < 0)
        return 0;
    std::vector<EisensteinInt> hs{EisensteinInt(1)};
    for (int n = 1; n <= k; ++n) {
        EisensteinInt s = e[1] * hs[n - 1];
        if (n >= 2)
            s -= e[2] * hs[n - 2];
        if (n >= 3)
            s += e[3] * hs[n - 3];
        hs.push_back(s);
    }
    return hs[k];
}

std::array<BigInt, 3> PicardClassData::frobenius_traces() const
{
    std::array<BigInt, 3> out;
    for (int i = 0; i < 3; ++i) {
        EisensteinInt s = p[i] + p[i].conj();
        if (s.b != 0)
            throw IntegrityError("W + W' trace is not rational");
        out[i] = s.a;
    }
    return out;
}

PicardClassData picard_class_data(const census::FrobeniusClass& cls, std::int64_t count, const census::Census& c)
{
    if (c.family != census::Family::picard)
        throw InvalidArgument("Picard census required");
    if (c.q % 3 != 1)
        throw InvalidArgument("Picard data needs q = 1 mod 3");
    if (cls.powersums.size() != 6)
        throw CorruptFile("Picard record needs six integers");
    PicardClassData d;
    d.q = c.q;
    for (int i = 0; i < 3; ++i)
        d.p[i] = EisensteinInt(BigInt(static_cast<long>(cls.powersums[2 * i])),
                               BigInt(static_cast<long>(cls.powersums[2 * i + 1])));
    d.e[0] = 1;
    d.e[1] = d.p[0];
    d.e[2] = div_exact(d.e[1] * d.p[0] - d.p[1], 2);
    d.e[3] = div_exact(d.e[2] * d.p[0] - d.e[1] * d.p[1] + d.p[2], 3);
    BigInt q3 = ipow(BigInt(static_cast<unsigned long>(c.q)), 3);
    EisensteinInt n = d.e[3] * d.e[3].conj();
    if (n != EisensteinInt(q3, 0))
        throw IntegrityError("det W det W' = " + n.str() + ", expected q^3");
    d.mass = c.mass(cls, count);
    return d;
}

std::vector<PicardClassData> picard_classes(const census::Census& c)
{
    std::vector<PicardClassData> out;
    for (const auto& [cls, count] : c.entries)
        out.push_back(picard_class_data(cls, count, c));
    return out;
}

EisensteinRat picard_ec_trace_exact(const PicardWeight& w, const census::Census& c)
{
    if (w.a < 0 || w.b < 0)
        throw InvalidArgument("Picard weight needs a, b >= 0");
    const BigRat q3(ipow(BigInt(static_cast<unsigned long>(c.q)), 3));
    EisensteinRat total(BigRat(0), BigRat(0));
    for (const auto& d : picard_classes(c)) {
        EisensteinInt core = d.h(w.a) * d.conj().h(w.b);
        BigRat scale = d.mass;
        if (w.i >= 0) {
            core *= d.det().pow(w.i);
        } else {
            core *= d.det().conj().pow(-w.i);
            scale /= ipow(q3.get_num(), -w.i);
        }
        total += times(core, scale);
    }
    total.a.canonicalize();
    total.b.canonicalize();
    return total;
}

EisensteinInt picard_ec_trace(const PicardWeight& w, const census::Census& c)
{
    EisensteinRat t = picard_ec_trace_exact(w, c);
    if (!t.is_integral())
        throw IntegrityError("Picard trace not in Z[rho]: " + t.str());
    return t.to_int();
}

SixthPowerReport picard_sixth_power_probe(const census::Census& c)
{
    SixthPowerReport r;
    r.q = c.q;
    for (const auto& d : picard_classes(c))
        r.values[d.det().pow(6)] += d.mass;
    return r;
}

ComparisonReport picard_comparison(const census::Census& c, int k,
                                   const std::map<std::uint64_t, EisensteinInt>& reference)
{
    ComparisonReport r;
    r.q = c.q;
    r.k = k;
    r.ec_trace = picard_ec_trace({6 * k, 0, 0}, c);
    if (auto it = reference.find(c.q); it != reference.end())
        r.reference = it->second;
    return r;
}

std::array<EisensteinInt, 3> picard_powersums_direct(std::uint64_t q, const std::vector<Elem>& f)
{
    if (q % 3 != 1)
        throw InvalidArgument("cubic character needs q = 1 mod 3");
    const Tower3& T = tower(q);
    const FieldCtx& F = T.fields[0];
    std::array<EisensteinInt, 3> out;
    for (unsigned i = 1; i <= 3; ++i) {
        const FieldCtx& E = T.fields[i - 1];
        const SubfieldEmbedding& emb = T.embs[i - 1];
        auto g = lift(emb, f);
        std::array<long, 3> n{0, 0, 0};
        for (Elem x = 0; x < E.q(); ++x) {
            Elem v = poly::eval(E, g, x);
            if (v == 0)
                continue;
            Elem nv = emb.to_small(emb.norm(v));
            ++n[((F.log(nv) % 3) + 3) % 3];
        }
        // s = n0 + n1 rho + n2 rho^2, p_i(W) = -s
        EisensteinInt s(BigInt(n[0] - n[2]), BigInt(n[1] - n[2]));
        out[i - 1] = -s;
    }
    return out;
}

std::array<std::int64_t, 3> picard_point_counts(std::uint64_t q, const std::vector<Elem>& f)
{
    const Tower3& T = tower(q);
    std::array<std::int64_t, 3> out{};
    for (unsigned i = 1; i <= 3; ++i) {
        const FieldCtx& E = T.fields[i - 1];
        std::vector<std::int64_t> cubes(E.q(), 0);
        for (Elem y = 0; y < E.q(); ++y)
            ++cubes[E.mul(y, E.mul(y, y))];
        auto g = lift(T.embs[i - 1], f);
        std::int64_t n = 1; // the point at infinity
        for (Elem x = 0; x < E.q(); ++x)
            n += cubes[poly::eval(E, g, x)];
        out[i - 1] = n;
    }
    return out;
}

} // namespace hc::picard
