#include "heckecount/cli/report.hpp"
#include "heckecount/cli/verify.hpp"
#include "heckecount/error.hpp"
#include "heckecount/hecke/hecke.hpp"
#include "heckecount/picard/picard.hpp"
#include "heckecount/qexpansion/qexpansion.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

using namespace hc;
using cli::ExitCode;
using cli::Table;

namespace {

struct Global {
    std::string format = "text";
    unsigned threads = 0;
    std::string cache;
    std::string data;

    cli::Format fmt() const { return cli::parse_format(format); }
    unsigned thread_count() const { return threads ? threads : std::max(1u, std::thread::hardware_concurrency()); }
    std::optional<std::filesystem::path> cache_dir() const
    {
        if (!cache.empty())
            return std::filesystem::path(cache);
        if (const char* env = std::getenv("HECKECOUNT_CACHE"); env && *env)
            return std::filesystem::path(env);
        return std::nullopt;
    }
    std::filesystem::path data_dir() const { return data.empty() ? verify::default_data_dir() : std::filesystem::path(data); }
};

void emit(const Table& t, const Global& g) { std::cout << cli::render(t, g.fmt()) << std::flush; }

std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }

// ---- census ----

struct CensusArgs {
    std::string family;
    std::uint64_t q = 0;
    bool with_aut = false;
    std::string out;
};

int cmd_census(const CensusArgs& a, const Global& g)
{
    using census::Family;
    census::BuildOptions opt;
    opt.threads = g.thread_count();
    opt.progress = [](std::string_view msg) { std::cerr << msg << '\n'; };

    std::vector<std::pair<Family, census::Census>> built;
    if (a.family == "g1") {
        built.emplace_back(Family::g1, census::build_census_g1(a.q, opt));
    } else if (a.family == "g2") {
        built.emplace_back(Family::g2, census::build_census_g2(a.q, a.with_aut, opt));
    } else if (a.family == "g3") {
        auto c = census::build_census_g3(a.q, a.with_aut, opt);
        built.emplace_back(Family::g3_quartic, std::move(c.quartic));
        built.emplace_back(Family::g3_hyp, std::move(c.hyperelliptic));
    } else {
        built.emplace_back(Family::picard, census::build_census_picard(a.q, opt));
    }

    std::filesystem::path dir = a.out.empty() ? g.cache_dir().value_or(".") : std::filesystem::path(a.out);
    std::filesystem::create_directories(dir);
    Table t{{"family", "q", "normalization", "classes", "total_mass", "file", "status"}, {}};
    bool mismatch = false;
    for (const auto& [f, c] : built) {
        auto path = dir / census::cache_name(f, a.q, c.normalization, a.with_aut);
        std::string status;
        if (std::filesystem::exists(path)) {
            if (census::load_census(path) == c) {
                status = "verified";
            } else {
                status = "mismatch";
                mismatch = true;
            }
        } else {
            census::save_census(c, path);
            status = "written";
        }
        t.add({census::family_tag(f), std::to_string(a.q), to_string(c.normalization),
               std::to_string(c.entries.size()), to_string(c.total_mass()), path.string(), status});
    }
    emit(t, g);
    return mismatch ? ExitCode::verification_failed : ExitCode::ok;
}

// ---- trace ----

struct TraceArgs {
    int degree = 1;
    int k = -1, j = 0;
    int a = -1, b = -1, c = -1;
    std::vector<std::uint64_t> qs;
};

int cmd_trace(const TraceArgs& a, const Global& g)
{
    hecke::CensusStore store(g.cache_dir(), g.thread_count());
    Table t{{"degree", "weight", "local_system", "q", "kind", "value", "dim", "convention", "formula", "censuses"}, {}};
    for (std::uint64_t q : a.qs) {
        hecke::TraceReport r;
        switch (a.degree) {
        case 1:
            if (a.k < 0)
                throw InvalidArgument("--k is required for degree 1");
            r = hecke::trace_report_sl2(a.k, q, store);
            break;
        case 2:
            if (a.k < 0)
                throw InvalidArgument("--j and --k are required for degree 2");
            r = hecke::trace_T_siegel2(a.j, a.k, q, store);
            break;
        case 3:
            if (a.a < 0 || a.b < 0 || a.c < 0)
                throw InvalidArgument("--a, --b and --c are required for degree 3");
            r = hecke::trace_T_siegel3(a.a, a.b, a.c, q, store);
            break;
        default:
            throw InvalidArgument("degree must be 1, 2 or 3");
        }
        std::string ls;
        for (std::size_t i = 0; i < r.local_system.size(); ++i)
            ls += (i ? "," : "") + std::to_string(r.local_system[i]);
        std::string cens;
        for (std::size_t i = 0; i < r.censuses.size(); ++i)
            cens += (i ? " " : "") + r.censuses[i];
        t.add({std::to_string(r.degree), r.label(), ls, std::to_string(q),
               r.dim_hint == 1 ? "eigenvalue" : "trace", to_string(r.trace), opt_str(r.dim_hint),
               r.raw_frobenius ? "raw-frobenius" : "hecke", r.formula, cens});
    }
    emit(t, g);
    return ExitCode::ok;
}

// ---- qexp ----

struct QexpArgs {
    std::string form = "delta";
    int k = 12;
    int n = 10;
    std::uint64_t p = 2;
};

int cmd_qexp(const QexpArgs& a, const Global& g)
{
    if (a.form == "delta" || a.form == "eisenstein") {
        auto f = a.form == "delta" ? qexp::delta_expansion(a.n) : qexp::eisenstein_expansion(a.k, a.n);
        Table t{{"n", "a(n)"}, {}};
        for (int i = 0; i <= f.precision(); ++i)
            t.add({std::to_string(i), to_string(f[i])});
        emit(t, g);
    } else if (a.form == "basis") {
        auto basis = qexp::cusp_basis(a.k, a.n);
        Table t{{"index", "expansion"}, {}};
        for (std::size_t i = 0; i < basis.size(); ++i)
            t.add({std::to_string(i + 1), basis[i].str()});
        emit(t, g);
    } else if (a.form == "eigen") {
        int N = std::max<int>(a.n, static_cast<int>(a.p) * std::max(1L, motives::dim_cusp_sl2(a.k)) + 1);
        auto ev = qexp::hecke_eigen(a.k, a.p, N);
        Table t{{"k", "p", "eigenvalue"}, {}};
        for (const auto& e : ev)
            t.add({std::to_string(a.k), std::to_string(a.p), e.str()});
        emit(t, g);
    } else {
        throw InvalidArgument("unknown form '" + a.form + "'");
    }
    return ExitCode::ok;
}

// ---- congruence ----

struct CongruenceArgs {
    int degree = 2;
    int j = 4, k = 10;
    int a = 13, b = 11, c = 10;
    std::string ell;
    int f_weight = 0, g_weight = 30;
    std::uint64_t p_max = 13;
    std::string table;
};

int cmd_congruence(const CongruenceArgs& a, const Global& g)
{
    hecke::CensusStore store(g.cache_dir(), g.thread_count());
    hecke::CongruenceReport rep;
    if (a.degree == 2) {
        rep = hecke::harder_check_deg2(a.j, a.k, parse_bigint(a.ell.empty() ? "41" : a.ell), a.f_weight ? a.f_weight : 22,
                                       a.p_max, store);
    } else if (a.degree == 3) {
        std::map<std::uint64_t, BigInt> values;
        if (!a.table.empty())
            values = hecke::load_eigenvalue_table(a.table).integers();
        rep = hecke::harder_check_deg3(a.a, a.b, a.c, parse_bigint(a.ell.empty() ? "199" : a.ell),
                                       a.f_weight ? a.f_weight : 12, a.g_weight, values, a.p_max, &store);
    } else {
        throw InvalidArgument("degree must be 2 or 3");
    }
    Table t{{"p", "lambda", "predicted", "norm_of_difference", "ell", "verdict"}, {}};
    for (const auto& r : rep.rows)
        t.add({std::to_string(r.p), r.lambda, r.predicted, to_string(r.norm), to_string(rep.ell), r.pass ? "pass" : "fail"});
    if (g.fmt() == cli::Format::text)
        std::cout << rep.description << '\n';
    emit(t, g);
    return rep.all_pass() ? ExitCode::ok : ExitCode::verification_failed;
}

// ---- picard ----

struct PicardArgs {
    std::vector<std::uint64_t> qs;
    int a = 0, b = 0, i = 0;
    std::string mode = "trace";
};

int cmd_picard(const PicardArgs& a, const Global& g)
{
    hecke::CensusStore store(g.cache_dir(), g.thread_count());
    if (a.mode == "trace") {
        Table t{{"q", "a", "b", "i", "trace"}, {}};
        for (std::uint64_t q : a.qs) {
            auto v = picard::picard_ec_trace({a.a, a.b, a.i}, store.picard(q));
            t.add({std::to_string(q), std::to_string(a.a), std::to_string(a.b), std::to_string(a.i), v.str()});
        }
        emit(t, g);
    } else if (a.mode == "probe") {
        Table t{{"q", "det6", "mass", "constant"}, {}};
        for (std::uint64_t q : a.qs) {
            auto r = picard::picard_sixth_power_probe(store.picard(q));
            for (const auto& [v, m] : r.values)
                t.add({std::to_string(q), v.str(), to_string(m), r.constant() ? "yes" : "no"});
        }
        emit(t, g);
    } else if (a.mode == "compare") {
        std::map<std::uint64_t, EisensteinInt> ref;
        auto path = g.data_dir() / "picard_phi.txt";
        auto table = hecke::load_eigenvalue_table(path);
        for (const auto& [q, v] : table.values)
            ref[q] = parse_eisenstein(v);
        Table t{{"q", "weight", "ec_trace", "reference"}, {}};
        for (std::uint64_t q : a.qs) {
            auto r = picard::picard_comparison(store.picard(q), 1, ref);
            t.add({std::to_string(q), "(6,0,0)", r.ec_trace.str(), r.reference ? r.reference->str() : ""});
        }
        emit(t, g);
    } else {
        throw InvalidArgument("mode must be trace, probe or compare");
    }
    return ExitCode::ok;
}

// ---- verify ----

struct VerifyArgs {
    std::string suite;
    std::uint64_t max_q = 13;
};

int cmd_verify(const VerifyArgs& a, const Global& g)
{
    hecke::CensusStore store(g.cache_dir(), g.thread_count());
    const auto data = g.data_dir();
    std::vector<verify::Check> checks;
    auto primes = [&](std::uint64_t cap) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t p = 2; p <= std::min(a.max_q, cap); ++p)
            if (is_prime_small(p))
                out.push_back(p);
        return out;
    };
    const bool all = a.suite == "all";
    if (all || a.suite == "goldens") {
        if (a.max_q >= 17)
            checks.push_back(verify::g1_weight_table(store));
        checks.push_back(verify::siegel2_goldens(store, primes(13)));
        checks.push_back(verify::siegel3_goldens(store, primes(3)));
        if (a.max_q >= 2)
            checks.push_back(verify::motive_identity_11_5_2(store));
    }
    if (all || a.suite == "properties") {
        checks.push_back(verify::sl2_oracle(store, 40, std::min<std::uint64_t>(a.max_q, 31), std::min<std::uint64_t>(a.max_q, 199)));
        checks.push_back(verify::siegel2_properties(store, a.max_q, 10, std::min<std::uint64_t>(a.max_q, 7)));
        checks.push_back(verify::masses(a.max_q, a.max_q >= 5 ? std::vector<std::uint64_t>{3, 5} : primes(3)));
        std::vector<std::uint64_t> pq;
        for (std::uint64_t q : {7, 13, 19})
            if (q <= a.max_q)
                pq.push_back(q);
        if (!pq.empty())
            checks.push_back(verify::picard_properties(store, pq, data / "picard_phi.txt"));
    }
    if (all || a.suite == "congruences") {
        checks.push_back(verify::saito_kurokawa(store, 13));
        checks.push_back(verify::harder_mod41(store, 13));
        checks.push_back(verify::harder_mod199(store, data / "S_2_1_14.txt"));
    }
    Table t{{"check", "result", "detail"}, {}};
    bool ok = true;
    for (const auto& c : checks) {
        ok = ok && c.pass;
        t.add({c.name, c.pass ? "pass" : "fail", c.detail});
    }
    emit(t, g);
    for (const auto& c : checks)
        if (!c.pass)
            std::cerr << c.name << ":\n" << c.report;
    return ok ? ExitCode::ok : ExitCode::verification_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Hecke traces from curve counts over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
    app.add_option("--cache", g.cache, "Census cache directory (default: $HECKECOUNT_CACHE)");
    app.add_option("--data", g.data, "Directory with reference tables");

    CensusArgs ca;
    auto* census = app.add_subcommand("census", "Build a census and write or verify its file");
    census->add_option("--family", ca.family)->required()->check(CLI::IsMember({"g1", "g2", "g3", "picard"}));
    census->add_option("--q", ca.q)->required();
    census->add_flag("--with-aut", ca.with_aut, "Classify isomorphism classes (small q)");
    census->add_option("--out", ca.out, "Output directory (default: cache directory or .)");

    TraceArgs ta;
    auto* trace = app.add_subcommand("trace", "Hecke trace or eigenvalue");
    trace->add_option("--degree", ta.degree)->required()->check(CLI::Range(1, 3));
    trace->add_option("--k", ta.k);
    trace->add_option("--j", ta.j);
    trace->add_option("--a", ta.a);
    trace->add_option("--b", ta.b);
    trace->add_option("--c", ta.c);
    trace->add_option("--q", ta.qs)->required();

    QexpArgs qa;
    auto* qx = app.add_subcommand("qexp", "q-expansions and eigenvalues of level-one forms");
    qx->add_option("--form", qa.form)->check(CLI::IsMember({"delta", "eisenstein", "basis", "eigen"}));
    qx->add_option("--k", qa.k);
    qx->add_option("--n", qa.n, "Precision")->check(CLI::Range(1, 100000));
    qx->add_option("--p", qa.p);

    CongruenceArgs cga;
    auto* cong = app.add_subcommand("congruence", "Check a congruence prime by prime");
    cong->add_option("--degree", cga.degree)->check(CLI::IsMember({2, 3}));
    cong->add_option("--j", cga.j);
    cong->add_option("--k", cga.k);
    cong->add_option("--a", cga.a);
    cong->add_option("--b", cga.b);
    cong->add_option("--c", cga.c);
    cong->add_option("--ell", cga.ell);
    cong->add_option("--f-weight", cga.f_weight);
    cong->add_option("--g-weight", cga.g_weight);
    cong->add_option("--p-max", cga.p_max);
    cong->add_option("--table", cga.table, "Eigenvalue table for degree 3");

    PicardArgs pa;
    auto* pic = app.add_subcommand("picard", "Traces on the Picard family y^3 = f(x)");
    pic->add_option("--q", pa.qs)->required();
    pic->add_option("--a", pa.a);
    pic->add_option("--b", pa.b);
    pic->add_option("--i", pa.i);
    pic->add_option("--mode", pa.mode)->check(CLI::IsMember({"trace", "probe", "compare"}));

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", va.suite)->required()->check(CLI::IsMember({"goldens", "properties", "congruences", "all"}));
    ver->add_option("--max-q", va.max_q);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ExitCode::ok : ExitCode::usage;
    }

    try {
        if (*census)
            return cmd_census(ca, g);
        if (*trace)
            return cmd_trace(ta, g);
        if (*qx)
            return cmd_qexp(qa, g);
        if (*cong)
            return cmd_congruence(cga, g);
        if (*pic)
            return cmd_picard(pa, g);
        if (*ver)
            return cmd_verify(va, g);
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return ExitCode::unsupported;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return ExitCode::io;
    } catch (const MissingData& e) {
        std::cerr << "missing data: " << e.what() << '\n';
        return ExitCode::io;
    } catch (const IntegrityError& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return ExitCode::verification_failed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return ExitCode::io;
    }
    return ExitCode::usage;
}
