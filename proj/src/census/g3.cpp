#include "heckecount/census/builders.hpp"

#include "engine.hpp"
#include "heckecount/census/orbits.hpp"
#include "heckecount/error.hpp"
#include "hyperelliptic.hpp"

#include <array>

namespace hc::census {

namespace {

using detail::Tower;
using Point = std::array<Elem, 3>;

std::vector<Point> plane_points(const FieldCtx& E)
{
    std::vector<Point> pts;
    for (Elem y = 0; y < E.q(); ++y)
        for (Elem z = 0; z < E.q(); ++z)
            pts.push_back({1, y, z});
    for (Elem z = 0; z < E.q(); ++z)
        pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});
    return pts;
}

// A ternary quartic over F_q evaluated on P^2 of its extensions.
class QuarticEvaluator {
public:
    explicit QuarticEvaluator(const Tower& tower) : tower_(&tower), mono_(detail::monomials(3, 4))
    {
        for (unsigned i = 1; i <= tower.max_ext(); ++i)
            points_.push_back(plane_points(tower.ext(i)));
    }

    void load(const std::vector<Elem>& f)
    {
        coeffs_.assign(tower_->max_ext(), {});
        for (unsigned i = 1; i <= tower_->max_ext(); ++i)
            for (Elem c : f)
                coeffs_[i - 1].push_back(tower_->emb(i).to_big(c));
    }

    // f(P) and, if grad, the three partial derivatives.
    std::array<Elem, 4> eval(unsigned i, const Point& P, bool grad) const
    {
        const FieldCtx& E = tower_->ext(i);
        const auto& c = coeffs_[i - 1];
        std::array<std::array<Elem, 5>, 3> pw;
        for (unsigned v = 0; v < 3; ++v) {
            pw[v][0] = 1;
            for (unsigned e = 1; e <= 4; ++e)
                pw[v][e] = E.mul(pw[v][e - 1], P[v]);
        }
        std::array<Elem, 4> out{0, 0, 0, 0};
        for (std::size_t m = 0; m < mono_.size(); ++m) {
            if (c[m] == 0)
                continue;
            const auto& ex = mono_[m];
            out[0] = E.add(out[0], E.mul(c[m], E.mul(pw[0][ex[0]], E.mul(pw[1][ex[1]], pw[2][ex[2]]))));
            if (!grad)
                continue;
            for (unsigned v = 0; v < 3; ++v) {
                if (ex[v] == 0 || ex[v] % E.p() == 0)
                    continue;
                Elem t = E.mul(c[m], E.from_int(ex[v]));
                for (unsigned w = 0; w < 3; ++w)
                    t = E.mul(t, pw[w][ex[w] - (w == v ? 1 : 0)]);
                out[v + 1] = E.add(out[v + 1], t);
            }
        }
        return out;
    }

    bool smooth() const
    {
        for (unsigned i = 1; i <= tower_->max_ext(); ++i)
            for (const Point& P : points_[i - 1]) {
                auto v = eval(i, P, true);
                if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0)
                    return false;
            }
        return true;
    }

    std::int64_t count(unsigned i) const
    {
        std::int64_t n = 0;
        for (const Point& P : points_[i - 1])
            n += eval(i, P, false)[0] == 0;
        return n;
    }

private:
    const Tower* tower_;
    std::vector<std::vector<unsigned>> mono_;
    std::vector<std::vector<Point>> points_;
    std::vector<std::vector<Elem>> coeffs_;
};

Census quartic_census(std::uint64_t q, unsigned threads)
{
    Tower tower(q, 4);
    const FieldCtx& F = tower.base();
    const unsigned dim = 15 * F.n();
    std::vector<AffineAction> gens;
    for (const auto& A : detail::gl_generators(F, 3))
        gens.emplace_back(F.p(), dim, [&, A](const std::vector<std::uint32_t>& d) {
            return detail::to_digits(F, detail::substitute(F, 3, 4, detail::from_digits(F, d), A));
        });
    gens.emplace_back(F.p(), dim, [&](const std::vector<std::uint32_t>& d) {
        auto v = detail::from_digits(F, d);
        for (auto& x : v)
            x = F.mul(x, F.generator());
        return detail::to_digits(F, v);
    });

    Census c;
    c.q = q;
    c.family = Family::g3_quartic;
    c.normalization = gl_order(3, q);
    QuarticEvaluator ev(tower);
    const std::int64_t qq = static_cast<std::int64_t>(q);
    for (const Orbit& o : orbits(F.p(), dim, gens, threads)) {
        ev.load(detail::from_digits(F, unpack_index(o.rep, F.p(), dim)));
        if (!ev.smooth())
            continue;
        std::vector<std::int64_t> a(3);
        std::int64_t qi = 1;
        for (unsigned i = 1; i <= 3; ++i) {
            qi *= qq;
            a[i - 1] = qi + 1 - ev.count(i);
        }
        BigInt aut = exact_div(c.normalization, BigInt(static_cast<unsigned long>(o.size)));
        c.add({a, static_cast<std::int32_t>(aut.get_si()), true}, 1);
    }
    return c;
}

} // namespace

Genus3Census build_census_g3(std::uint64_t q, bool with_aut, const BuildOptions& opt)
{
    FieldCtx F = field_for(q);
    if (q > 3)
        throw Unsupported("genus-3 census needs q <= 3");
    Genus3Census out;
    out.quartic = quartic_census(q, opt.threads);
    if (F.p() == 2)
        out.hyperelliptic = with_aut ? detail::artin_schreier_orbits(q, 3) : detail::artin_schreier_reduced(q, 3, opt);
    else
        out.hyperelliptic = with_aut ? detail::hyperelliptic_odd_orbits(q, 3) : detail::hyperelliptic_odd_reduced(q, 3, opt);
    return out;
}

} // namespace hc::census
