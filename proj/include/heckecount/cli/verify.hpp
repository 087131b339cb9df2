#pragma once

#include "heckecount/hecke/store.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace hc::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // one-line summary
    std::string report;  // full deterministic listing of computed values
    double seconds = 0;
};

// Genus-1 trace distribution at q = 17 against the w(t) table.
Check g1_weight_table(hecke::CensusStore& store);
// Census traces of T(p) on S_k against q-expansions; tau(p) against the eta product.
Check sl2_oracle(hecke::CensusStore& store, int k_max, std::uint64_t p_max, std::uint64_t tau_p_max);
// Eigenvalues on S_{0,35}, S_{0,43}, S_{14,7}, S_{4,17} at the listed primes.
Check siegel2_goldens(hecke::CensusStore& store, const std::vector<std::uint64_t>& primes);
// Parity vanishing, the dimension-zero list and integrality.
Check siegel2_properties(hecke::CensusStore& store, std::uint64_t max_q, unsigned random_weights = 10,
                         std::uint64_t dim0_max_q = 7);
// S_{6,3,6}, S_{4,2,8}, S_{2,1,14} at q in qs (subset of {2,3}).
Check siegel3_goldens(hecke::CensusStore& store, const std::vector<std::uint64_t>& qs);
// e_c(A_3, V_{11,5,2}) at q = 2 against S[6,3,6] - S[12]L^3 + L^7 - L^3 + 1.
Check motive_identity_11_5_2(hecke::CensusStore& store);
Check saito_kurokawa(hecke::CensusStore& store, std::uint64_t p_max);
Check harder_mod41(hecke::CensusStore& store, std::uint64_t p_max);
// Computed lambda_F at p <= 3, tabulated lambda_F for 5 <= p <= 17.
Check harder_mod199(hecke::CensusStore& store, const std::filesystem::path& table);
// g1 mass q for every prime power q <= max_q; g2 mass q^3 by orbits at each of g2_qs.
Check masses(std::uint64_t max_q, const std::vector<std::uint64_t>& g2_qs);
// Eigenspace oracle, Z[rho]-integrality, Galois symmetry at each q; probe and
// comparison listings are appended to the report without assertion.
Check picard_properties(hecke::CensusStore& store, const std::vector<std::uint64_t>& qs,
                        const std::filesystem::path& reference_table);

// Directory holding the shipped reference tables.
std::filesystem::path default_data_dir();

} // namespace hc::verify
