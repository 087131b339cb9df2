#pragma once

#include "heckecount/census/census.hpp"
#include "heckecount/exactnum/eisenstein.hpp"
#include "heckecount/exactnum/quadint.hpp"
#include "heckecount/hecke/store.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hc::hecke {

struct TraceReport {
    int degree = 1;
    std::vector<int> weight;    // (k), (j,k) or (j1,j2,k)
    std::vector<int> local_system; // (a), (a,b) or (a,b,c)
    std::uint64_t q = 0;
    BigInt trace;
    std::optional<long> dim_hint;
    bool raw_frobenius = false; // q is a proper prime power
    std::string formula;
    std::vector<std::string> censuses;

    std::string label() const; // "S_{0,35}"
};

// Tr(T(q), S_k) = -e_c(A_1, V_{k-2}) - 1.
BigInt trace_T_sl2(int k, std::uint64_t q, const census::Census& g1);
TraceReport trace_report_sl2(int k, std::uint64_t q, CensusStore& store);

// Trace of Frobenius on e_c(A_2, V_{a,b}) and e_c(A_3, V_{a,b,c}).
BigInt ec_A2(int a, int b, std::uint64_t q, CensusStore& store);
BigInt ec_A3(int a, int b, int c, std::uint64_t q, CensusStore& store);

TraceReport trace_T_siegel2(int j, int k, std::uint64_t q, CensusStore& store);
TraceReport trace_T_siegel3(int a, int b, int c, std::uint64_t q, CensusStore& store);

// Small curated table of known cusp-form dimensions.
std::optional<long> dim_hint_siegel2(int j, int k);
std::optional<long> dim_hint_siegel3(int j1, int j2, int k);
// Weights (j,k) with S_{j,k} = 0, used for the vanishing checks.
const std::vector<std::pair<int, int>>& dim0_list_siegel2();

struct LiftCheck {
    bool holds = false;
    BigInt lambda;   // computed eigenvalue on S_{0,k}
    BigInt expected; // p^{k-2} + a(p) + p^{k-1}
};
LiftCheck sk_lift_check(int k, std::uint64_t p, CensusStore& store);

struct CongruenceRow {
    std::uint64_t p = 0;
    std::string lambda;     // left side
    std::string predicted;  // right side (may be quadratic)
    BigInt norm;            // norm of the difference
    bool pass = false;
};
struct CongruenceReport {
    std::string description;
    BigInt ell;
    std::vector<CongruenceRow> rows;
    bool all_pass() const;
};

// lambda = p^{k-2} + a(p) + p^{j+k-1} (mod ell), a(p) of an eigenform of weight f_weight
CongruenceRow congruence_deg2_row(std::uint64_t p, const BigInt& lambda, const QuadInt& a_p, int j, int k,
                                  const BigInt& ell);
CongruenceReport harder_check_deg2(int j, int k, const BigInt& ell, int f_weight, std::uint64_t p_max,
                                   CensusStore& store);

// lambda_F = lambda_f (p^{b+2} + lambda_g + p^{a+3}) (mod ell)
CongruenceRow congruence_deg3_row(std::uint64_t p, const BigInt& lambda_F, const QuadInt& lambda_f,
                                  const QuadInt& lambda_g, int a, int b, const BigInt& ell);
// lambda_F from `table` where present, else computed (q <= 3).
CongruenceReport harder_check_deg3(int a, int b, int c, const BigInt& ell, int f_weight, int g_weight,
                                   const std::map<std::uint64_t, BigInt>& table, std::uint64_t p_max,
                                   CensusStore* store);

// "# header" line, then "q value" lines; values are integers, a+b*sqrt(d)
// or a+b*rho.
struct EigenvalueTable {
    std::string header;
    std::map<std::uint64_t, std::string> values;

    BigInt integer(std::uint64_t q) const;
    QuadInt quadratic(std::uint64_t q) const;
    EisensteinInt eisenstein(std::uint64_t q) const;
    std::map<std::uint64_t, BigInt> integers() const;
};
EigenvalueTable parse_eigenvalue_table(std::string_view text);
EigenvalueTable load_eigenvalue_table(const std::filesystem::path& path);

} // namespace hc::hecke
