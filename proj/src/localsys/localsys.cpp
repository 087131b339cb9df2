#include "heckecount/localsys/localsys.hpp"

#include "heckecount/error.hpp"

namespace hc::localsys {

EigenvalueData::EigenvalueData(std::uint64_t q, std::vector<BigInt> powersums)
    : EigenvalueData(BigInt(static_cast<unsigned long>(q)), std::move(powersums))
{
}

EigenvalueData::EigenvalueData(BigInt q, std::vector<BigInt> powersums) : q_(std::move(q)), p_(std::move(powersums))
{
    const unsigned g = genus();
    if (g == 0 || g > 3)
        throw InvalidArgument("genus must be 1, 2 or 3");
    // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    e_.assign(2 * g + 1, 0);
    e_[0] = 1;
    for (unsigned k = 1; k <= g; ++k) {
        BigInt s = 0;
        for (unsigned i = 1; i <= k; ++i)
            s += ((i % 2) ? 1 : -1) * e_[k - i] * p_[i - 1];
        e_[k] = exact_div(s, k);
    }
    // functional equation e_{2g-k} = q^{g-k} e_k
    for (unsigned k = 0; k < g; ++k)
        e_[2 * g - k] = ipow(q_, g - k) * e_[k];
}

BigInt EigenvalueData::h(long k) const
{
    if (k < 0)
        return 0;
    // 1/P(T): h_k = sum_{i=1}^{min(k,2g)} (-1)^{i+1} e_i h_{k-i}
    while (h_.size() <= static_cast<std::size_t>(k)) {
        std::size_t n = h_.size();
        if (n == 0) {
            h_.push_back(1);
            continue;
        }
        BigInt s = 0;
        for (std::size_t i = 1; i <= std::min(n, e_.size() - 1); ++i)
            s += ((i % 2) ? 1 : -1) * e_[i] * h_[n - i];
        h_.push_back(s);
    }
    return h_[k];
}

EigenvalueData EigenvalueData::negated() const
{
    std::vector<BigInt> p = p_;
    for (std::size_t i = 0; i < p.size(); i += 2)
        p[i] = -p[i];
    return EigenvalueData(q_, p);
}

EigenvalueData eigen_data(std::uint64_t q, const std::vector<BigInt>& counts)
{
    const unsigned g = static_cast<unsigned>(counts.size());
    std::vector<BigInt> p;
    BigInt qi = 1;
    for (unsigned i = 1; i <= g; ++i) {
        qi *= static_cast<unsigned long>(q);
        BigInt a = qi + 1 - counts[i - 1];
        // |a| <= 2g q^{i/2}  <=>  a^2 <= 4 g^2 q^i
        if (a * a > 4 * g * g * qi)
            throw IntegrityError("point count violates the Weil bound");
        p.push_back(a);
    }
    return EigenvalueData(q, p);
}

BigInt sp_character(const std::vector<int>& lambda, const EigenvalueData& d)
{
    const unsigned g = d.genus();
    if (lambda.size() != g)
        throw InvalidArgument("weight length differs from genus");
    for (unsigned i = 0; i < g; ++i)
        if (lambda[i] < 0 || (i + 1 < g && lambda[i] < lambda[i + 1]))
            throw InvalidArgument("weight must be non-increasing and non-negative");
    // symplectic Jacobi-Trudi with multiplier: first column h_{l_i-i+1},
    // column j >= 2: h_{l_i-i+j} + q^{j-1} h_{l_i-i-j+2}
    std::vector<std::vector<BigInt>> M(g, std::vector<BigInt>(g));
    for (unsigned i = 1; i <= g; ++i) {
        long base = lambda[i - 1] - static_cast<long>(i);
        M[i - 1][0] = d.h(base + 1);
        for (unsigned j = 2; j <= g; ++j)
            M[i - 1][j - 1] = d.h(base + j) + ipow(d.q(), j - 1) * d.h(base - j + 2);
    }
    if (g == 1)
        return M[0][0];
    if (g == 2)
        return M[0][0] * M[1][1] - M[0][1] * M[1][0];
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

namespace {

std::vector<BigInt> big(const std::vector<std::int64_t>& v)
{
    std::vector<BigInt> out;
    for (auto x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

// power sums of a product of ppavs: p_i adds, the length grows to g1 + g2
std::vector<BigInt> product_powersums(const std::vector<BigInt>& x, const std::vector<BigInt>& y, std::uint64_t q)
{
    // p_i for i > g of a factor follows from its own Newton/functional data
    const unsigned g = static_cast<unsigned>(x.size() + y.size());
    auto extend = [&](const std::vector<BigInt>& p) {
        EigenvalueData d(q, p);
        const auto& e = d.elementary();
        const unsigned n = static_cast<unsigned>(e.size() - 1); // 2 * genus
        std::vector<BigInt> all(g + 1, 0);
        for (unsigned k = 1; k <= g; ++k) {
            if (k <= p.size()) {
                all[k] = p[k - 1];
                continue;
            }
            // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
            BigInt s = 0;
            for (unsigned i = 1; i < k && i <= n; ++i)
                s += ((i % 2) ? 1 : -1) * e[i] * all[k - i];
            if (k <= n)
                s += ((k % 2) ? 1 : -1) * BigInt(k) * e[k];
            all[k] = s;
        }
        return all;
    };
    auto a = extend(x), b = extend(y);
    std::vector<BigInt> out;
    for (unsigned k = 1; k <= g; ++k)
        out.push_back(a[k] + b[k]);
    return out;
}

} // namespace

ClassStream stream_of(const census::Census& c)
{
    ClassStream s;
    for (const auto& [cls, count] : c.entries)
        s.push_back({EigenvalueData(c.q, big(cls.powersums)), c.mass(cls, count)});
    return s;
}

BigRat total_mass(const ClassStream& s)
{
    BigRat m = 0;
    for (const auto& w : s)
        m += w.mass;
    return m;
}

BigRat weighted_sum(const std::vector<int>& lambda, const ClassStream& s)
{
    BigRat total = 0;
    for (const auto& w : s)
        total += w.mass * BigRat(sp_character(lambda, w.data));
    total.canonicalize();
    return total;
}

BigInt ec_trace(const std::vector<int>& lambda, const ClassStream& s)
{
    BigRat t = weighted_sum(lambda, s);
    if (t.get_den() != 1)
        throw IntegrityError("non-integral trace " + to_string(t));
    return t.get_num();
}

BigInt ec_trace_A1(int a, const census::Census& g1)
{
    if (g1.family != census::Family::g1)
        throw InvalidArgument("genus-1 census required");
    return ec_trace({a}, stream_of(g1));
}

ClassStream assemble_A2(const census::Census& g2, const census::Census& g1_q, const census::Census& g1_q2)
{
    const std::uint64_t q = g2.q;
    if (g1_q.q != q || g1_q2.q != q * q)
        throw InvalidArgument("censuses at mismatched q");
    ClassStream out = stream_of(g2);
    ClassStream e1 = stream_of(g1_q);
    const BigRat half(1, 2);
    for (const auto& x : e1)
        for (const auto& y : e1)
            out.push_back({EigenvalueData(q, product_powersums(x.data.powersums(), y.data.powersums(), q)),
                           half * x.mass * y.mass});
    for (const auto& [cls, count] : g1_q2.entries)
        out.push_back({EigenvalueData(q, {BigInt(0), BigInt(2 * cls.powersums[0])}),
                       half * g1_q2.mass(cls, count)});
    return out;
}

ClassStream assemble_A3(const census::Census& quartic, const census::Census& hyp3, const census::Census& g2,
                        const census::Census& g1_q, const census::Census& g1_q2, const census::Census& g1_q3)
{
    const std::uint64_t q = quartic.q;
    if (hyp3.q != q || g2.q != q || g1_q.q != q || g1_q2.q != q * q || g1_q3.q != q * q * q)
        throw InvalidArgument("censuses at mismatched q");
    ClassStream out;
    const BigRat half(1, 2), sixth(1, 6);
    for (const auto& w : stream_of(quartic)) {
        out.push_back({w.data, half * w.mass});
        out.push_back({w.data.negated(), half * w.mass});
    }
    for (auto& w : stream_of(hyp3))
        out.push_back(std::move(w));
    ClassStream e1 = stream_of(g1_q), c2 = stream_of(g2);
    for (const auto& x : e1)
        for (const auto& y : c2)
            out.push_back({EigenvalueData(q, product_powersums(x.data.powersums(), y.data.powersums(), q)),
                           x.mass * y.mass});
    // Sym^3: identity, transpositions (E x Res E'), 3-cycles (Res E'')
    for (const auto& x : e1)
        for (const auto& y : e1) {
            auto xy = product_powersums(x.data.powersums(), y.data.powersums(), q);
            for (const auto& z : e1)
                out.push_back({EigenvalueData(q, product_powersums(xy, z.data.powersums(), q)),
                               sixth * x.mass * y.mass * z.mass});
        }
    for (const auto& x : e1)
        for (const auto& [cls, count] : g1_q2.entries) {
            std::vector<BigInt> res{BigInt(0), BigInt(2 * cls.powersums[0])};
            out.push_back({EigenvalueData(q, product_powersums(x.data.powersums(), res, q)),
                           half * x.mass * g1_q2.mass(cls, count)});
        }
    for (const auto& [cls, count] : g1_q3.entries)
        out.push_back({EigenvalueData(q, {BigInt(0), BigInt(0), BigInt(3 * cls.powersums[0])}),
                       BigRat(1, 3) * g1_q3.mass(cls, count)});
    return out;
}

} // namespace hc::localsys
