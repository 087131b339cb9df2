#include "heckecount/qexpansion/qexpansion.hpp"

#include "heckecount/error.hpp"
#include "heckecount/motives/motives.hpp"

#include <algorithm>
#include <sstream>

namespace hc::qexp {

std::string QExpansion::str(int terms) const
{
    std::ostringstream out;
    bool first = true;
    int last = terms < 0 ? precision() : std::min(precision(), terms);
    for (int n = 0; n <= last; ++n) {
        const BigRat& c = coeffs[n];
        if (c == 0)
            continue;
        BigRat mag = abs(c);
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = mag == 1 && n > 0;
        if (!unit)
            out << to_string(mag) << (n > 0 ? "*" : "");
        if (n == 1)
            out << "q";
        else if (n > 1)
            out << "q^" << n;
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

QExpansion operator*(const QExpansion& f, const QExpansion& g)
{
    int N = std::min(f.precision(), g.precision());
    QExpansion h{f.weight + g.weight, std::vector<BigRat>(N + 1, 0)};
    for (int i = 0; i <= N; ++i) {
        if (f.coeffs[i] == 0)
            continue;
        for (int j = 0; i + j <= N; ++j)
            h.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
    return h;
}

QExpansion operator+(const QExpansion& f, const QExpansion& g)
{
    if (f.weight != g.weight)
        throw InvalidArgument("adding forms of different weight");
    int N = std::min(f.precision(), g.precision());
    QExpansion h{f.weight, std::vector<BigRat>(N + 1)};
    for (int i = 0; i <= N; ++i)
        h.coeffs[i] = f.coeffs[i] + g.coeffs[i];
    return h;
}

QExpansion operator-(const QExpansion& f, const QExpansion& g)
{
    return f + scale(g, -1);
}

QExpansion scale(const QExpansion& f, const BigRat& c)
{
    QExpansion h = f;
    for (auto& x : h.coeffs)
        x *= c;
    return h;
}

QExpansion truncate(const QExpansion& f, int N)
{
    if (N > f.precision())
        throw PrecisionError("cannot extend a truncated series");
    return {f.weight, std::vector<BigRat>(f.coeffs.begin(), f.coeffs.begin() + N + 1)};
}

BigRat bernoulli(unsigned k)
{
    // Akiyama-Tanigawa
    std::vector<BigRat> a(k + 1);
    BigRat result;
    for (unsigned m = 0; m <= k; ++m) {
        a[m] = BigRat(1, m + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = BigRat(j) * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
    }
    result = a[0];
    // this recurrence gives B_1 = +1/2
    if (k == 1)
        result = BigRat(-1, 2);
    return result;
}

BigInt divisor_sigma(unsigned k, std::uint64_t n)
{
    BigInt s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        s += ipow(BigInt(static_cast<unsigned long>(d)), k);
        if (d * d != n)
            s += ipow(BigInt(static_cast<unsigned long>(n / d)), k);
    }
    return s;
}

QExpansion delta_expansion(int N)
{
    if (N < 1)
        throw InvalidArgument("precision must be at least 1");
    // prod (1 - q^n)^24 up to q^{N-1}, then shift by q
    std::vector<BigInt> P(N, 0);
    P[0] = 1;
    for (int n = 1; n < N; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (int i = N - 1; i >= n; --i)
                P[i] -= P[i - n];
    QExpansion d{12, std::vector<BigRat>(N + 1, 0)};
    for (int i = 0; i < N; ++i)
        d.coeffs[i + 1] = P[i];
    return d;
}

QExpansion eisenstein_expansion(int k, int N)
{
    if (k < 4 || k % 2)
        throw InvalidArgument("Eisenstein series needs even weight k >= 4");
    BigRat c = BigRat(-2 * k) / bernoulli(k);
    c.canonicalize();
    QExpansion e{k, std::vector<BigRat>(N + 1, 0)};
    e.coeffs[0] = 1;
    for (int n = 1; n <= N; ++n)
        e.coeffs[n] = c * BigRat(divisor_sigma(k - 1, n));
    return e;
}

namespace {

QExpansion one(int N)
{
    QExpansion u{0, std::vector<BigRat>(N + 1, 0)};
    u.coeffs[0] = 1;
    return u;
}

QExpansion power(const QExpansion& f, int e, int N)
{
    QExpansion r = one(N);
    for (int i = 0; i < e; ++i)
        r = r * f;
    return r;
}

} // namespace

std::vector<QExpansion> cusp_basis(int k, int N)
{
    if (k < 12 || k % 2)
        throw InvalidArgument("cusp forms need even weight k >= 12");
    const int d = static_cast<int>(motives::dim_cusp_sl2(k));
    if (N < d + 1)
        throw PrecisionError("precision below dim S_k + 1");
    QExpansion D = delta_expansion(N), E4 = eisenstein_expansion(4, N), E6 = eisenstein_expansion(6, N);
    std::vector<QExpansion> rows;
    for (int b = 0; 6 * b <= k - 12; ++b) {
        int rest = k - 12 - 6 * b;
        if (rest % 4)
            continue;
        rows.push_back(D * power(E4, rest / 4, N) * power(E6, b, N));
    }
    if (static_cast<int>(rows.size()) != d)
        throw IntegrityError("monomial count differs from dim S_k");
    // reduced echelon form on the coefficients q^1..q^d
    for (int col = 1; col <= d; ++col) {
        int r = col - 1;
        int piv = r;
        while (piv < d && rows[piv].coeffs[col] == 0)
            ++piv;
        if (piv == d)
            throw IntegrityError("cusp basis is not echelonizable");
        std::swap(rows[r], rows[piv]);
        rows[r] = scale(rows[r], 1 / rows[r].coeffs[col]);
        for (int i = 0; i < d; ++i)
            if (i != r && rows[i].coeffs[col] != 0)
                rows[i] = rows[i] - scale(rows[r], rows[i].coeffs[col]);
    }
    return rows;
}

std::vector<std::vector<BigRat>> hecke_matrix(int k, std::uint64_t p, int N)
{
    const int d = static_cast<int>(motives::dim_cusp_sl2(k));
    if (static_cast<std::uint64_t>(N) < p * d)
        throw PrecisionError("precision " + std::to_string(N) + " below p*dim = " + std::to_string(p * d));
    auto basis = cusp_basis(k, N);
    BigInt pk = ipow(BigInt(static_cast<unsigned long>(p)), k - 1);
    std::vector<std::vector<BigRat>> M(d, std::vector<BigRat>(d));
    for (int j = 0; j < d; ++j)
        for (int n = 1; n <= d; ++n) {
            BigRat v = basis[j].coeffs[p * n];
            if (n % p == 0)
                v += BigRat(pk) * basis[j].coeffs[n / p];
            M[n - 1][j] = v;
        }
    return M;
}

BigInt hecke_trace(int k, std::uint64_t p)
{
    const int d = static_cast<int>(motives::dim_cusp_sl2(k));
    if (d <= 0)
        return 0;
    auto M = hecke_matrix(k, p, static_cast<int>(p) * d);
    BigRat t = 0;
    for (int i = 0; i < d; ++i)
        t += M[i][i];
    return to_integer(t);
}

std::vector<Eigenform> eigenforms(int k, int N)
{
    const int d = static_cast<int>(motives::dim_cusp_sl2(k));
    if (d <= 0)
        return {};
    if (d > 2)
        throw Unsupported("eigenforms only for dim S_k <= 2");
    if (N < 2 * d)
        throw PrecisionError("precision too small for T(2)");
    auto basis = cusp_basis(k, N);
    auto lift = [](const BigRat& x) { return QuadInt::rational(x); };
    std::vector<Eigenform> out;
    if (d == 1) {
        Eigenform f;
        for (const auto& c : basis[0].coeffs)
            f.coeffs.push_back(lift(c));
        out.push_back(std::move(f));
        return out;
    }
    // f = f1 + lambda f2 with lambda an eigenvalue of T(2) (a(2) of f1 is 0)
    auto M = hecke_matrix(k, 2, N);
    BigRat tr = M[0][0] + M[1][1], det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    auto [l1, l2] = quadratic_roots(tr, det);
    for (const QuadInt& lam : {l1, l2}) {
        Eigenform f;
        for (int n = 0; n <= N; ++n)
            f.coeffs.push_back(QuadInt(lam.d, basis[0].coeffs[n], 0) + lam * basis[1].coeffs[n]);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<QuadInt> hecke_eigen(int k, std::uint64_t p, int N)
{
    const int d = static_cast<int>(motives::dim_cusp_sl2(k));
    if (d <= 0)
        return {};
    if (static_cast<std::uint64_t>(N) < p * d)
        throw PrecisionError("precision " + std::to_string(N) + " below p*dim = " + std::to_string(p * d));
    std::vector<QuadInt> vals;
    for (const auto& f : eigenforms(k, N))
        vals.push_back(f.a(p));
    return vals;
}

} // namespace hc::qexp
