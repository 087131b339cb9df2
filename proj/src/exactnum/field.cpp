#include "heckecount/exactnum/field.hpp"

#include "heckecount/error.hpp"
#include "heckecount/exactnum/bigint.hpp"

#include <numeric>
#include <string>

namespace hc {

namespace {

// Tries successive monic polynomials until t has order q-1 modulo one of them.
void build_tables(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t>& modulus,
                  std::vector<Elem>& exp_tab, std::vector<std::int32_t>& log_tab)
{
    const std::uint32_t q = static_cast<std::uint32_t>(ipow(p, n).get_ui());
    std::vector<std::uint32_t> pw(n + 1, 1);
    for (unsigned j = 1; j <= n; ++j)
        pw[j] = pw[j - 1] * p;

    std::uint64_t total = pw[n]; // candidates for the low coefficients
    for (std::uint64_t cand = 1; cand < total; ++cand) {
        std::vector<std::uint32_t> f(n + 1);
        for (unsigned j = 0; j < n; ++j)
            f[j] = static_cast<std::uint32_t>(cand / pw[j] % p);
        f[n] = 1;
        if (f[0] == 0)
            continue;
        if (q == 2) { // F_2: the generator is 1 itself
            modulus = {1, 1};
            exp_tab = {1, 1};
            log_tab = {-1, 0};
            return;
        }
        exp_tab.assign(2 * (q - 1), 0);
        log_tab.assign(q, -1);
        std::vector<std::uint32_t> d(n, 0);
        d[0] = 1;
        bool ok = true;
        for (std::uint32_t k = 0; k < q - 1; ++k) {
            Elem e = 0;
            for (unsigned j = 0; j < n; ++j)
                e += d[j] * pw[j];
            if (log_tab[e] >= 0) {
                ok = false;
                break;
            }
            log_tab[e] = static_cast<std::int32_t>(k);
            exp_tab[k] = e;
            // multiply by t; t^n = -sum f_j t^j
            std::uint32_t top = d[n - 1];
            for (unsigned j = n - 1; j > 0; --j)
                d[j] = static_cast<std::uint32_t>((d[j - 1] + std::uint64_t(p - f[j]) * top) % p);
            d[0] = static_cast<std::uint32_t>(std::uint64_t(p - f[0]) * top % p);
        }
        if (!ok)
            continue;
        for (std::uint32_t k = 0; k < q - 1; ++k)
            exp_tab[k + q - 1] = exp_tab[k];
        modulus = f;
        return;
    }
    throw IntegrityError("no primitive polynomial found");
}

} // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t n) : p_(p), n_(n)
{
    if (!is_prime_small(p))
        throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    if (n < 1)
        throw InvalidArgument("extension degree must be positive");
    BigInt qq = ipow(p, n);
    if (qq > max_size)
        throw Unsupported("field of size " + qq.get_str() + " exceeds 2^20");
    q_ = static_cast<std::uint32_t>(qq.get_ui());

    build_tables(p, n, modulus_, exp_, log_);

    if (p != 2 && n > 1) {
        neg_.assign(q_, 0);
        std::vector<std::uint32_t> pw(n, 1);
        for (unsigned j = 1; j < n; ++j)
            pw[j] = pw[j - 1] * p;
        for (Elem x = 0; x < q_; ++x) {
            Elem y = 0;
            for (unsigned j = 0; j < n; ++j) {
                std::uint32_t dj = x / pw[j] % p;
                y += ((p - dj) % p) * pw[j];
            }
            neg_[x] = y;
        }
        zech_.assign(q_ - 1, -1);
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
            Elem e = exp_[k];
            Elem low = e % p;
            Elem s = e - low + (low + 1) % p;
            zech_[k] = s == 0 ? -1 : log_[s];
        }
    }
    if (p == 2) {
        trace2_.assign(q_, 0);
        for (Elem x = 1; x < q_; ++x) {
            Elem acc = 0, y = x;
            for (unsigned i = 0; i < n_; ++i) {
                acc ^= y;
                y = mul(y, y);
            }
            if (acc > 1)
                throw IntegrityError("trace left the prime field");
            trace2_[x] = static_cast<std::uint8_t>(acc);
        }
    }
}

Elem FieldCtx::inv(Elem x) const
{
    if (x == 0)
        throw InvalidArgument("inverse of zero");
    std::int32_t l = log_[x];
    return exp_[l == 0 ? 0 : static_cast<std::int32_t>(q_ - 1) - l];
}

Elem FieldCtx::pow(Elem x, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    if (x == 0)
        return 0;
    std::uint64_t k = static_cast<std::uint64_t>(log_[x]) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[k];
}

Elem FieldCtx::exp(std::int64_t k) const
{
    std::int64_t m = static_cast<std::int64_t>(q_ - 1);
    k %= m;
    if (k < 0)
        k += m;
    return exp_[k];
}

Elem FieldCtx::from_int(std::int64_t k) const
{
    std::int64_t r = k % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Elem>(r);
}

std::uint32_t FieldCtx::digit(Elem x, unsigned j) const
{
    for (unsigned i = 0; i < j; ++i)
        x /= p_;
    return x % p_;
}

int FieldCtx::chi2(Elem x) const
{
    if (x == 0)
        return 0;
    if (p_ == 2)
        return 1;
    return (log_[x] & 1) ? -1 : 1;
}

int FieldCtx::chi3_index(Elem x) const
{
    if (!has_cubic_character())
        throw InvalidArgument("no cubic character on F_" + std::to_string(q_));
    if (x == 0)
        return -1;
    return log_[x] % 3;
}

Elem FieldCtx::abs_trace(Elem x) const
{
    if (p_ == 2)
        return trace2_[x];
    Elem acc = 0, y = x;
    for (unsigned i = 0; i < n_; ++i) {
        acc = add(acc, y);
        y = frobenius(y);
    }
    return acc;
}

FieldCtx make_field(std::uint32_t p, std::uint32_t n)
{
    if (n < 1 || n > 3)
        throw InvalidArgument("extension degree must be 1, 2 or 3");
    return FieldCtx(p, n);
}

SubfieldEmbedding::SubfieldEmbedding(const FieldCtx& small, const FieldCtx& big)
    : small_(&small), big_(&big)
{
    if (small.p() != big.p() || big.n() % small.n() != 0)
        throw InvalidArgument("not a subfield");
    const std::uint64_t q = small.q(), Q = big.q();
    const std::uint64_t m = (Q - 1) / (q - 1);
    norm_exp_ = m;
    // locate a root of the small field's defining polynomial among the
    // generators of the order-(q-1) subgroup of the big field
    const auto& f = small.modulus();
    Elem root = 0;
    bool found = false;
    for (std::uint64_t k = 1; k < q && !found; ++k) {
        if (std::gcd(k, q - 1) != 1 && q > 2)
            continue;
        Elem r = big.exp(static_cast<std::int64_t>(m * k));
        Elem acc = 0;
        for (std::size_t j = f.size(); j-- > 0;)
            acc = big.add(big.mul(acc, r), static_cast<Elem>(f[j]));
        if (acc == 0) {
            root = r;
            found = true;
        }
    }
    if (!found)
        throw IntegrityError("subfield generator not found");
    up_.assign(q, 0);
    down_.assign(Q, -1);
    down_[0] = 0;
    for (std::uint64_t j = 0; j + 1 < q; ++j) {
        Elem s = small.exp(static_cast<std::int64_t>(j));
        Elem b = big.pow(root, j);
        up_[s] = b;
        down_[b] = static_cast<std::int32_t>(s);
    }
}

Elem SubfieldEmbedding::to_small(Elem y) const
{
    if (down_[y] < 0)
        throw InvalidArgument("element not in subfield");
    return static_cast<Elem>(down_[y]);
}

Elem SubfieldEmbedding::norm(Elem y) const
{
    return static_cast<Elem>(down_[big_->pow(y, norm_exp_)]);
}

} // namespace hc
