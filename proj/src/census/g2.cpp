#include "heckecount/census/builders.hpp"

#include "heckecount/error.hpp"
#include "hyperelliptic.hpp"

namespace hc::census {

Census build_census_g2(std::uint64_t q, bool with_aut, const BuildOptions& opt)
{
    FieldCtx F = field_for(q);
    if (F.p() == 2) {
        if (with_aut) {
            if (q > 4)
                throw Unsupported("genus-2 orbit classification in characteristic 2 needs q <= 4");
            return detail::artin_schreier_orbits(q, 2);
        }
        if (q > 16)
            throw Unsupported("genus-2 census in characteristic 2 needs q <= 16");
        return detail::artin_schreier_reduced(q, 2, opt);
    }
    if (with_aut) {
        if (q > 7)
            throw Unsupported("genus-2 orbit classification needs q <= 7");
        return detail::hyperelliptic_odd_orbits(q, 2);
    }
    if (q > 31)
        throw Unsupported("genus-2 census needs q <= 31");
    return detail::hyperelliptic_odd_reduced(q, 2, opt);
}

} // namespace hc::census
