#include "heckecount/census/builders.hpp"

#include "engine.hpp"
#include "heckecount/error.hpp"

#include <array>
#include <mutex>

namespace hc::census {

namespace {

// (re, im) coordinates of x * rho^k for x = a + b rho
std::pair<std::int64_t, std::int64_t> rotate(std::int64_t a, std::int64_t b, unsigned k)
{
    for (unsigned j = 0; j < k % 3; ++j) {
        // (a + b rho) rho = a rho + b rho^2 = -b + (a - b) rho
        std::int64_t na = -b, nb = a - b;
        a = na;
        b = nb;
    }
    return {a, b};
}

} // namespace

Census build_census_picard(std::uint64_t q, const BuildOptions& opt)
{
    if (q % 3 != 1)
        throw InvalidArgument("Picard census needs q = 1 mod 3");
    if (q > 200)
        throw Unsupported("Picard census needs q <= 200");
    detail::Tower tower(q, 3);
    const FieldCtx& F = tower.base();
    detail::CharSums sums(tower, 4, detail::CharKind::cubic);
    detail::ReducedMonic R = detail::reduce_monic(F, 4);

    Census c;
    c.q = q;
    c.family = Family::picard;
    c.normalization = BigInt(static_cast<unsigned long>(q)) * BigInt(static_cast<unsigned long>(q - 1)) *
                      BigInt(static_cast<unsigned long>(q - 1));
    const std::int64_t third = static_cast<std::int64_t>(q - 1) / 3;
    std::mutex mu;
    const Census proto = c;
    detail::parallel_slices(R.size(), opt.threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        Census part = proto;
        std::vector<Elem> f;
        for (std::uint64_t it = lo; it < hi; ++it) {
            std::uint64_t w = R.get(it, f);
            if (!poly::squarefree(F, f))
                continue;
            // p_i(W) = -s_i(chi), s_i = n1 + n2 rho + n3 rho^2
            std::array<std::pair<std::int64_t, std::int64_t>, 3> pw;
            for (unsigned i = 1; i <= 3; ++i) {
                auto n = sums.counts(f, i);
                std::int64_t n1 = n[1], n2 = n[2], n3 = n[3];
                pw[i - 1] = {-(n1 - n3), -(n2 - n3)};
            }
            // leading coefficient with chi = rho^t multiplies p_i by rho^{t i}
            for (unsigned t = 0; t < 3; ++t) {
                std::vector<std::int64_t> key;
                for (unsigned i = 1; i <= 3; ++i) {
                    auto [a, b] = rotate(pw[i - 1].first, pw[i - 1].second, t * i);
                    key.push_back(a);
                    key.push_back(b);
                }
                part.add({key, 0, false}, static_cast<std::int64_t>(w) * third);
            }
        }
        std::lock_guard lock(mu);
        c.merge(part);
    });
    return c;
}

} // namespace hc::census
