#pragma once

// Test-only oracles for symplectic characters: the Weyl alternant on explicit
// integer eigenvalues and the Weyl dimension formula.

#include "heckecount/exactnum/bigint.hpp"
#include "heckecount/localsys/localsys.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace hc::testing {

inline BigRat det(std::vector<std::vector<BigRat>> m)
{
    const std::size_t n = m.size();
    BigRat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            BigRat f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

// Eigenvalues alpha_1..alpha_g together with q/alpha_j.
struct ExplicitFrobenius {
    BigInt q;
    std::vector<BigInt> alpha;

    std::vector<BigInt> powersums() const
    {
        std::vector<BigInt> p;
        for (std::size_t i = 1; i <= alpha.size(); ++i) {
            BigInt s = 0;
            for (const auto& a : alpha) {
                BigInt b = q / a;
                s += ipow(a, i) + ipow(b, i);
            }
            p.push_back(s);
        }
        return p;
    }
};

// det(a_j^{l_i} - (q/a_j)^{l_i}) / det(a_j^{d_i} - (q/a_j)^{d_i})
inline BigRat weyl_character(const std::vector<int>& lambda, const ExplicitFrobenius& f)
{
    const std::size_t g = lambda.size();
    auto alternant = [&](const std::vector<long>& ex) -> BigRat {
        std::vector<std::vector<BigRat>> m(g, std::vector<BigRat>(g));
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) {
                BigRat a(f.alpha[j]);
                BigRat b = BigRat(f.q) / a;
                BigInt an = ipow(a.get_num(), ex[i]), bn = ipow(b.get_num(), ex[i]);
                BigInt bd = ipow(b.get_den(), ex[i]);
                m[i][j] = BigRat(an) - BigRat(bn, bd);
            }
        return det(m);
    };
    std::vector<long> l, d;
    for (std::size_t i = 0; i < g; ++i) {
        l.push_back(lambda[i] + static_cast<long>(g - i));
        d.push_back(static_cast<long>(g - i));
    }
    return alternant(l) / alternant(d);
}

inline BigInt weyl_dimension(const std::vector<int>& lambda)
{
    const std::size_t g = lambda.size();
    BigRat num = 1, den = 1;
    std::vector<long> l, d;
    for (std::size_t i = 0; i < g; ++i) {
        l.push_back(lambda[i] + static_cast<long>(g - i));
        d.push_back(static_cast<long>(g - i));
    }
    for (std::size_t i = 0; i < g; ++i) {
        num *= l[i];
        den *= d[i];
        for (std::size_t j = i + 1; j < g; ++j) {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (d[i] - d[j]) * (d[i] + d[j]);
        }
    }
    BigRat r = num / den;
    return r.get_num();
}

inline std::vector<int> random_lambda(std::mt19937_64& rng, unsigned g, int max_part)
{
    std::vector<int> lam(g);
    for (auto& x : lam)
        x = static_cast<int>(rng() % (max_part + 1));
    std::sort(lam.rbegin(), lam.rend());
    return lam;
}

// q = 720720 has many divisors; pick g distinct divisors a with the 2g
// values {a, q/a} pairwise distinct.
inline ExplicitFrobenius random_frobenius(std::mt19937_64& rng, unsigned g)
{
    static const std::vector<long> divisors = [] {
        std::vector<long> d;
        for (long k = 1; k <= 720720; ++k)
            if (720720 % k == 0)
                d.push_back(k);
        return d;
    }();
    for (;;) {
        ExplicitFrobenius f{720720, {}};
        std::vector<long> used;
        bool ok = true;
        for (unsigned i = 0; i < g && ok; ++i) {
            long a = divisors[rng() % divisors.size()];
            long b = 720720 / a;
            for (long u : used)
                if (u == a || u == b)
                    ok = false;
            if (a == b)
                ok = false;
            used.push_back(a);
            used.push_back(b);
            f.alpha.push_back(a);
        }
        if (ok)
            return f;
    }
}

} // namespace hc::testing
