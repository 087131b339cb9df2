#include "heckecount/hecke/hecke.hpp"

#include "heckecount/error.hpp"
#include "heckecount/qexpansion/qexpansion.hpp"

#include <fstream>
#include <sstream>

namespace hc::hecke {

namespace {

bool proper_power(std::uint64_t q)
{
    PrimePower pp = prime_power(q);
    if (pp.p == 0)
        throw Unsupported(std::to_string(q) + " is not a prime power");
    return pp.n > 1;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (is_prime_small(p))
            out.push_back(p);
    return out;
}

BigInt qpow(std::uint64_t p, int e)
{
    return ipow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(e));
}

} // namespace

std::string TraceReport::label() const
{
    std::string s = "S_{";
    for (std::size_t i = 0; i < weight.size(); ++i)
        s += (i ? "," : "") + std::to_string(weight[i]);
    return s + "}";
}

BigInt trace_T_sl2(int k, std::uint64_t q, const census::Census& g1)
{
    if (k < 4 || k % 2)
        throw InvalidArgument("elliptic weight must be even and at least 4");
    if (g1.q != q)
        throw InvalidArgument("census is for another q");
    return -1 - localsys::ec_trace_A1(k - 2, g1);
}

TraceReport trace_report_sl2(int k, std::uint64_t q, CensusStore& store)
{
    TraceReport r;
    r.degree = 1;
    r.weight = {k};
    r.local_system = {k - 2};
    r.q = q;
    r.raw_frobenius = proper_power(q);
    r.trace = trace_T_sl2(k, q, store.g1(q));
    if (k >= 4)
        r.dim_hint = motives::dim_cusp_sl2(k);
    r.formula = "-e_c(A1,V_a) - 1";
    r.censuses = store.provenance(q);
    return r;
}

BigInt ec_A2(int a, int b, std::uint64_t q, CensusStore& store)
{
    if ((a + b) % 2)
        return 0;
    return localsys::ec_trace({a, b}, store.a2(q));
}

BigInt ec_A3(int a, int b, int c, std::uint64_t q, CensusStore& store)
{
    if ((a + b + c) % 2)
        return 0;
    return localsys::ec_trace({a, b, c}, store.a3(q));
}

TraceReport trace_T_siegel2(int j, int k, std::uint64_t q, CensusStore& store)
{
    if (j < 0 || j % 2)
        throw InvalidArgument("j must be even and non-negative (e_c vanishes otherwise)");
    if (k < 3)
        throw InvalidArgument("k must be at least 3");
    const int a = j + k - 3, b = k - 3;
    TraceReport r;
    r.degree = 2;
    r.weight = {j, k};
    r.local_system = {a, b};
    r.q = q;
    r.raw_frobenius = proper_power(q);
    r.trace = -ec_A2(a, b, q, store) + motives::trace(motives::e2_extra(a, b), store.provider(q));
    r.dim_hint = dim_hint_siegel2(j, k);
    r.formula = "-e_c(A2,V_{a,b}) + e2_extra(a,b) = " + motives::e2_extra(a, b).str();
    r.censuses = store.provenance(q);
    return r;
}

TraceReport trace_T_siegel3(int a, int b, int c, std::uint64_t q, CensusStore& store)
{
    if (c < 0 || b < c || a < b)
        throw InvalidArgument("weight needs a >= b >= c >= 0");
    TraceReport r;
    r.degree = 3;
    r.weight = {a - b, b - c, c + 4};
    r.local_system = {a, b, c};
    r.q = q;
    r.raw_frobenius = proper_power(q);
    auto ec2 = [&](int x, int y) -> BigInt { return ec_A2(x, y, q, store); };
    r.trace = ec_A3(a, b, c, q, store) - motives::e3_extra_trace(a, b, c, store.provider(q), ec2);
    r.dim_hint = dim_hint_siegel3(a - b, b - c, c + 4);
    r.formula = "e_c(A3,V_{a,b,c}) - e3_extra(a,b,c)";
    r.censuses = store.provenance(q);
    return r;
}

const std::vector<std::pair<int, int>>& dim0_list_siegel2()
{
    static const std::vector<std::pair<int, int>> list = {{0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {2, 4}};
    return list;
}

std::optional<long> dim_hint_siegel2(int j, int k)
{
    for (const auto& w : dim0_list_siegel2())
        if (w == std::make_pair(j, k))
            return 0;
    static const std::vector<std::pair<int, int>> ones = {{0, 10}, {0, 12}, {0, 35}, {0, 43},
                                                          {14, 7}, {4, 17}, {4, 10}};
    for (const auto& w : ones)
        if (w == std::make_pair(j, k))
            return 1;
    return std::nullopt;
}

std::optional<long> dim_hint_siegel3(int j1, int j2, int k)
{
    static const std::vector<std::array<int, 3>> ones = {{6, 3, 6}, {4, 2, 8}, {2, 1, 14}};
    for (const auto& w : ones)
        if (w == std::array<int, 3>{j1, j2, k})
            return 1;
    return std::nullopt;
}

LiftCheck sk_lift_check(int k, std::uint64_t p, CensusStore& store)
{
    if (k != 10 && k != 12)
        throw Unsupported("Saito-Kurokawa check only for k = 10, 12");
    if (!is_prime_small(p))
        throw InvalidArgument("p must be prime");
    auto forms = qexp::eigenforms(2 * k - 2, static_cast<int>(p));
    LiftCheck r;
    r.lambda = trace_T_siegel2(0, k, p, store).trace;
    r.expected = qpow(p, k - 2) + to_integer(forms.at(0).a(p).a) + qpow(p, k - 1);
    r.holds = r.lambda == r.expected;
    return r;
}

bool CongruenceReport::all_pass() const
{
    for (const auto& r : rows)
        if (!r.pass)
            return false;
    return true;
}

namespace {

CongruenceRow finish_row(std::uint64_t p, const BigInt& lambda, const QuadInt& predicted, const BigInt& ell)
{
    CongruenceRow row;
    row.p = p;
    row.lambda = to_string(lambda);
    row.predicted = predicted.str();
    QuadInt diff = QuadInt::rational(BigRat(lambda)) - predicted;
    if (!diff.is_algebraic_integer())
        throw IntegrityError("congruence difference is not integral: " + diff.str());
    row.norm = diff.b == 0 ? to_integer(diff.a) : to_integer(diff.norm());
    row.pass = mpz_divisible_p(row.norm.get_mpz_t(), ell.get_mpz_t()) != 0;
    return row;
}

} // namespace

CongruenceRow congruence_deg2_row(std::uint64_t p, const BigInt& lambda, const QuadInt& a_p, int j, int k,
                                  const BigInt& ell)
{
    QuadInt pred = a_p + QuadInt::rational(BigRat(qpow(p, k - 2) + qpow(p, j + k - 1)));
    return finish_row(p, lambda, pred, ell);
}

CongruenceReport harder_check_deg2(int j, int k, const BigInt& ell, int f_weight, std::uint64_t p_max,
                                   CensusStore& store)
{
    CongruenceReport rep;
    rep.ell = ell;
    rep.description = "lambda(p) on S_{" + std::to_string(j) + "," + std::to_string(k) + "} = p^" +
                      std::to_string(k - 2) + " + a(p) + p^" + std::to_string(j + k - 1) + " mod " + to_string(ell) +
                      ", a(p) from S_" + std::to_string(f_weight);
    auto forms = qexp::eigenforms(f_weight, static_cast<int>(std::max<std::uint64_t>(p_max, 4)));
    if (forms.empty())
        throw InvalidArgument("S_" + std::to_string(f_weight) + " is zero");
    for (std::uint64_t p : primes_upto(p_max)) {
        BigInt lambda = trace_T_siegel2(j, k, p, store).trace;
        rep.rows.push_back(congruence_deg2_row(p, lambda, forms[0].a(p), j, k, ell));
    }
    return rep;
}

CongruenceRow congruence_deg3_row(std::uint64_t p, const BigInt& lambda_F, const QuadInt& lambda_f,
                                  const QuadInt& lambda_g, int a, int b, const BigInt& ell)
{
    QuadInt inner = lambda_g + QuadInt::rational(BigRat(qpow(p, b + 2) + qpow(p, a + 3)));
    return finish_row(p, lambda_F, lambda_f * inner, ell);
}

CongruenceReport harder_check_deg3(int a, int b, int c, const BigInt& ell, int f_weight, int g_weight,
                                   const std::map<std::uint64_t, BigInt>& table, std::uint64_t p_max,
                                   CensusStore* store)
{
    CongruenceReport rep;
    rep.ell = ell;
    rep.description = "lambda_F(p) on S_{" + std::to_string(a - b) + "," + std::to_string(b - c) + "," +
                      std::to_string(c + 4) + "} = lambda_f(p) (p^" + std::to_string(b + 2) + " + lambda_g(p) + p^" +
                      std::to_string(a + 3) + ") mod " + to_string(ell) + ", f in S_" + std::to_string(f_weight) +
                      ", g in S_" + std::to_string(g_weight);
    const int N = static_cast<int>(std::max<std::uint64_t>(p_max, 4));
    auto fs = qexp::eigenforms(f_weight, N), gs = qexp::eigenforms(g_weight, N);
    if (fs.empty() || gs.empty())
        throw InvalidArgument("empty elliptic cusp space");
    for (std::uint64_t p : primes_upto(p_max)) {
        BigInt lambda_F;
        if (auto it = table.find(p); it != table.end())
            lambda_F = it->second;
        else if (store && p <= 3)
            lambda_F = trace_T_siegel3(a, b, c, p, *store).trace;
        else
            throw MissingData("no eigenvalue for p = " + std::to_string(p));
        rep.rows.push_back(congruence_deg3_row(p, lambda_F, fs[0].a(p), gs[0].a(p), a, b, ell));
    }
    return rep;
}

BigInt EigenvalueTable::integer(std::uint64_t q) const
{
    auto it = values.find(q);
    if (it == values.end())
        throw MissingData("table has no entry for q = " + std::to_string(q));
    return parse_bigint(it->second);
}

QuadInt EigenvalueTable::quadratic(std::uint64_t q) const
{
    auto it = values.find(q);
    if (it == values.end())
        throw MissingData("table has no entry for q = " + std::to_string(q));
    return parse_quadint(it->second);
}

EisensteinInt EigenvalueTable::eisenstein(std::uint64_t q) const
{
    auto it = values.find(q);
    if (it == values.end())
        throw MissingData("table has no entry for q = " + std::to_string(q));
    return parse_eisenstein(it->second);
}

std::map<std::uint64_t, BigInt> EigenvalueTable::integers() const
{
    std::map<std::uint64_t, BigInt> out;
    for (const auto& [q, v] : values)
        out[q] = parse_bigint(v);
    return out;
}

EigenvalueTable parse_eigenvalue_table(std::string_view text)
{
    EigenvalueTable t;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (line[0] == '#') {
            if (!header) {
                auto start = line.find_first_not_of(" \t", 1);
                auto end = line.find_last_not_of(" \t\r");
                t.header = start == std::string::npos ? "" : line.substr(start, end + 1 - start);
                header = true;
            }
            continue;
        }
        if (!header)
            throw CorruptFile("eigenvalue table needs a '#' header line");
        std::istringstream fields(line);
        std::string qs, value, extra;
        if (!(fields >> qs >> value) || (fields >> extra))
            throw CorruptFile("line " + std::to_string(lineno) + ": expected 'q value'");
        std::uint64_t q = 0;
        try {
            std::size_t used = 0;
            q = std::stoull(qs, &used);
            if (used != qs.size())
                throw std::invalid_argument(qs);
        } catch (const std::exception&) {
            throw CorruptFile("line " + std::to_string(lineno) + ": bad q '" + qs + "'");
        }
        if (t.values.count(q))
            throw CorruptFile("line " + std::to_string(lineno) + ": duplicate q");
        t.values[q] = value;
    }
    if (!header)
        throw CorruptFile("eigenvalue table needs a '#' header line");
    return t;
}

EigenvalueTable load_eigenvalue_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_eigenvalue_table(buf.str());
}

} // namespace hc::hecke
