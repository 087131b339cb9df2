#pragma once

#include "heckecount/census/builders.hpp"

namespace hc::census::detail {

Census hyperelliptic_odd_reduced(std::uint64_t q, unsigned g, const BuildOptions& opt);
Census hyperelliptic_odd_orbits(std::uint64_t q, unsigned g);
Census artin_schreier_reduced(std::uint64_t q, unsigned g, const BuildOptions& opt);
Census artin_schreier_orbits(std::uint64_t q, unsigned g);

} // namespace hc::census::detail
