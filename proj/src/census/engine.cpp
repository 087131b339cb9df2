#include "engine.hpp"

#include "heckecount/error.hpp"

#include <map>

namespace hc::census::detail {

Tower::Tower(std::uint64_t q, unsigned max_ext)
{
    FieldCtx base = field_for(q);
    const std::uint32_t p = base.p(), n = base.n();
    fields_.push_back(std::move(base));
    for (unsigned i = 2; i <= max_ext; ++i)
        fields_.emplace_back(p, n * i);
    for (unsigned i = 1; i <= max_ext; ++i)
        embs_.push_back(std::make_unique<SubfieldEmbedding>(fields_[0], fields_[i - 1]));
}

CharSums::CharSums(const Tower& tower, unsigned max_degree, CharKind kind) : tower_(&tower), kind_(kind)
{
    const FieldCtx& F = tower.base();
    if (kind == CharKind::quadratic && F.p() == 2)
        throw InvalidArgument("no quadratic character sums in characteristic 2");
    if (kind == CharKind::cubic && !F.has_cubic_character())
        throw InvalidArgument("no cubic character on F_" + std::to_string(F.q()));
    for (unsigned i = 1; i <= tower.max_ext(); ++i) {
        const FieldCtx& E = tower.ext(i);
        std::vector<std::int32_t> code(E.q(), 0);
        for (Elem y = 1; y < E.q(); ++y) {
            if (kind == CharKind::quadratic)
                code[y] = 1 + (E.log(y) & 1);
            else
                code[y] = 1 + F.log(tower.emb(i).norm(y)) % 3;
        }
        codes_.push_back(std::move(code));
        if (tower.prime())
            tables_.push_back(kernels::make_power_table(E, max_degree));
    }
}

kernels::CodeCounts CharSums::counts(std::span<const Elem> coeffs, unsigned i) const
{
    kernels::CodeCounts c{0, 0, 0, 0};
    const auto& code = codes_[i - 1];
    if (tower_->prime()) {
        std::int32_t buf[32];
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            buf[k] = static_cast<std::int32_t>(coeffs[k]);
        kernels::charsum_counts(tables_[i - 1], std::span<const std::int32_t>(buf, coeffs.size()), code, c);
        return c;
    }
    const FieldCtx& E = tower_->ext(i);
    const SubfieldEmbedding& emb = tower_->emb(i);
    std::vector<Elem> up(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        up[k] = emb.to_big(coeffs[k]);
    for (Elem x = 0; x < E.q(); ++x) {
        Elem acc = 0;
        for (std::size_t k = up.size(); k-- > 0;)
            acc = E.add(E.mul(acc, x), up[k]);
        ++c[code[acc]];
    }
    return c;
}

std::uint64_t ReducedMonic::size() const
{
    std::uint64_t s = heads.size();
    for (unsigned i = 0; i < free_count; ++i)
        s *= q;
    return s;
}

std::uint64_t ReducedMonic::get(std::uint64_t item, std::vector<Elem>& poly) const
{
    std::uint64_t tail_size = 1;
    for (unsigned i = 0; i < free_count; ++i)
        tail_size *= q;
    std::uint64_t h = item / tail_size, t = item % tail_size;
    poly = heads[h];
    for (unsigned i = 0; i < free_count; ++i) {
        poly[i] = static_cast<Elem>(t % q);
        t /= q;
    }
    return weights[h];
}

ReducedMonic reduce_monic(const FieldCtx& F, unsigned d)
{
    if (d < 3)
        throw InvalidArgument("reduction needs degree >= 3");
    const std::uint64_t q = F.q();
    const bool translate = d % F.p() != 0;
    // pair of coefficients scaled by a^{-e1}, a^{-e2}
    unsigned i1, i2, e1, e2;
    if (translate) {
        i1 = d - 2, i2 = d - 3, e1 = 2, e2 = 3;
    } else {
        i1 = d - 1, i2 = d - 2, e1 = 1, e2 = 2;
    }
    ReducedMonic r;
    r.degree = d;
    r.q = q;
    r.free_count = i2;
    std::vector<char> seen(q * q, 0);
    for (Elem u = 0; u < q; ++u)
        for (Elem v = 0; v < q; ++v) {
            if (seen[u * q + v])
                continue;
            std::uint64_t size = 0;
            for (std::int64_t k = 0; k + 1 < static_cast<std::int64_t>(q); ++k) {
                Elem ai = F.exp(-k); // a^{-1} for a = g^k
                Elem uu = F.mul(u, F.pow(ai, e1));
                Elem vv = F.mul(v, F.pow(ai, e2));
                if (!seen[uu * q + vv]) {
                    seen[uu * q + vv] = 1;
                    ++size;
                }
            }
            std::vector<Elem> head(d + 1, 0);
            head[d] = 1;
            head[i1] = u;
            head[i2] = v;
            r.heads.push_back(std::move(head));
            r.weights.push_back(size * (translate ? q : 1));
        }
    return r;
}

std::vector<std::vector<Elem>> gl_generators(const FieldCtx& F, unsigned n)
{
    std::vector<std::vector<Elem>> gens;
    auto identity = [n] {
        std::vector<Elem> m(n * n, 0);
        for (unsigned i = 0; i < n; ++i)
            m[i * n + i] = 1;
        return m;
    };
    // transposition of the first two coordinates
    {
        std::vector<Elem> m(n * n, 0);
        m[0 * n + 1] = 1;
        m[1 * n + 0] = 1;
        for (unsigned i = 2; i < n; ++i)
            m[i * n + i] = 1;
        gens.push_back(m);
    }
    if (n > 2) { // n-cycle
        std::vector<Elem> m(n * n, 0);
        for (unsigned i = 0; i < n; ++i)
            m[i * n + (i + 1) % n] = 1;
        gens.push_back(m);
    }
    Elem zeta = 1;
    for (unsigned j = 0; j < F.n(); ++j) {
        std::vector<Elem> m = identity();
        m[0 * n + 1] = zeta;
        gens.push_back(m);
        zeta *= F.p();
    }
    {
        std::vector<Elem> m = identity();
        m[0] = F.generator();
        gens.push_back(m);
    }
    return gens;
}

std::vector<std::vector<unsigned>> monomials(unsigned k, unsigned d)
{
    std::vector<std::vector<unsigned>> out;
    if (k == 2) {
        for (unsigned i = 0; i <= d; ++i)
            out.push_back({i, d - i});
    } else if (k == 3) {
        for (unsigned i = 0; i <= d; ++i)
            for (unsigned j = 0; i + j <= d; ++j)
                out.push_back({i, j, d - i - j});
    } else {
        throw InvalidArgument("only binary and ternary forms");
    }
    return out;
}

std::vector<Elem> substitute(const FieldCtx& F, unsigned k, unsigned d, std::span<const Elem> f,
                             std::span<const Elem> A)
{
    using Mono = std::vector<unsigned>;
    using Pol = std::map<Mono, Elem>;
    auto mono = monomials(k, d);
    Pol total;
    for (std::size_t m = 0; m < mono.size(); ++m) {
        if (f[m] == 0)
            continue;
        Pol acc;
        acc[Mono(k, 0)] = f[m];
        for (unsigned v = 0; v < k; ++v)
            for (unsigned e = 0; e < mono[m][v]; ++e) {
                Pol next;
                for (const auto& [ex, c] : acc)
                    for (unsigned w = 0; w < k; ++w) {
                        Elem a = A[v * k + w];
                        if (a == 0)
                            continue;
                        Mono ex2 = ex;
                        ++ex2[w];
                        Elem& slot = next[ex2];
                        slot = F.add(slot, F.mul(c, a));
                    }
                acc = std::move(next);
            }
        for (const auto& [ex, c] : acc) {
            Elem& slot = total[ex];
            slot = F.add(slot, c);
        }
    }
    std::vector<Elem> out(mono.size(), 0);
    for (std::size_t m = 0; m < mono.size(); ++m) {
        auto it = total.find(mono[m]);
        if (it != total.end())
            out[m] = it->second;
    }
    return out;
}

std::vector<Elem> from_digits(const FieldCtx& F, const std::vector<std::uint32_t>& digits)
{
    const unsigned n = F.n();
    std::vector<Elem> v(digits.size() / n, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Elem e = 0;
        for (unsigned j = n; j-- > 0;)
            e = e * F.p() + digits[i * n + j];
        v[i] = e;
    }
    return v;
}

std::vector<std::uint32_t> to_digits(const FieldCtx& F, const std::vector<Elem>& v)
{
    const unsigned n = F.n();
    std::vector<std::uint32_t> d(v.size() * n);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Elem e = v[i];
        for (unsigned j = 0; j < n; ++j) {
            d[i * n + j] = e % F.p();
            e /= F.p();
        }
    }
    return d;
}

} // namespace hc::census::detail
