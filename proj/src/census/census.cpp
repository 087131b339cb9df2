#include "heckecount/census/census.hpp"

#include "heckecount/error.hpp"

#include <fstream>
#include <sstream>

namespace hc::census {

const char* family_tag(Family f)
{
    switch (f) {
    case Family::g1: return "g1";
    case Family::g2: return "g2";
    case Family::g3_quartic: return "g3_quartic";
    case Family::g3_hyp: return "g3_hyp";
    case Family::picard: return "picard";
    }
    return "?";
}

Family parse_family(std::string_view tag)
{
    for (Family f : {Family::g1, Family::g2, Family::g3_quartic, Family::g3_hyp, Family::picard})
        if (tag == family_tag(f))
            return f;
    throw InvalidArgument("unknown family '" + std::string(tag) + "'");
}

unsigned genus(Family f)
{
    switch (f) {
    case Family::g1: return 1;
    case Family::g2: return 2;
    default: return 3;
    }
}

unsigned powersum_arity(Family f) { return f == Family::picard ? 6 : genus(f); }

bool Census::has_aut() const
{
    if (entries.empty())
        return false;
    for (const auto& [c, n] : entries)
        if (c.aut <= 0)
            return false;
    return true;
}

BigRat Census::mass(const FrobeniusClass& c, std::int64_t count) const
{
    BigRat m(BigInt(count), c.aut > 0 ? BigInt(c.aut) : normalization);
    m.canonicalize();
    return m;
}

BigRat Census::total_mass() const
{
    BigRat s = 0;
    for (const auto& [c, n] : entries)
        s += mass(c, n);
    return s;
}

void Census::add(const FrobeniusClass& c, std::int64_t count)
{
    if (count == 0)
        return;
    entries[c] += count;
}

void Census::merge(const Census& other)
{
    if (other.q != q || other.family != family || other.normalization != normalization)
        throw InvalidArgument("merging incompatible censuses");
    for (const auto& [c, n] : other.entries)
        add(c, n);
}

std::string serialize(const Census& c)
{
    std::ostringstream out;
    out << "#version " << c.version << "\n";
    out << "#q " << c.q << "\n";
    out << "#family " << family_tag(c.family) << "\n";
    out << "#normalization " << c.normalization.get_str() << "\n";
    out << "#entries " << c.entries.size() << "\n";
    for (const auto& [cls, n] : c.entries) {
        for (auto v : cls.powersums)
            out << v << ' ';
        if (cls.aut > 0)
            out << cls.aut;
        else
            out << '-';
        out << ' ' << (cls.twistable ? 1 : 0) << ' ' << n << "\n";
    }
    out << "#end\n";
    return out.str();
}

namespace {

std::int64_t parse_i64(const std::string& tok, int line)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw CorruptFile("census line " + std::to_string(line) + ": bad integer '" + tok + "'");
    }
}

} // namespace

Census parse_census(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto header = [&](const std::string& key) -> std::string {
        if (!std::getline(in, line))
            throw CorruptFile("census truncated before #" + key);
        ++lineno;
        std::string prefix = "#" + key + " ";
        if (line.rfind(prefix, 0) != 0)
            throw CorruptFile("census line " + std::to_string(lineno) + ": expected #" + key);
        return line.substr(prefix.size());
    };

    Census c;
    std::string ver = header("version");
    c.version = static_cast<int>(parse_i64(ver, lineno));
    if (c.version != format_version)
        throw VersionMismatch("census format version " + ver + ", reader supports " +
                              std::to_string(format_version));
    c.q = static_cast<std::uint64_t>(parse_i64(header("q"), lineno));
    try {
        c.family = parse_family(header("family"));
    } catch (const InvalidArgument& e) {
        throw CorruptFile(e.what());
    }
    try {
        c.normalization = parse_bigint(header("normalization"));
    } catch (const InvalidArgument& e) {
        throw CorruptFile(e.what());
    }
    std::int64_t expected = parse_i64(header("entries"), lineno);
    const unsigned arity = powersum_arity(c.family);

    bool ended = false;
    std::int64_t seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line == "#end") {
            ended = true;
            break;
        }
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;)
            toks.push_back(t);
        if (toks.size() != arity + 3)
            throw CorruptFile("census line " + std::to_string(lineno) + ": wrong field count");
        FrobeniusClass cls;
        for (unsigned i = 0; i < arity; ++i)
            cls.powersums.push_back(parse_i64(toks[i], lineno));
        cls.aut = toks[arity] == "-" ? 0 : static_cast<std::int32_t>(parse_i64(toks[arity], lineno));
        const std::string& tw = toks[arity + 1];
        if (tw != "0" && tw != "1")
            throw CorruptFile("census line " + std::to_string(lineno) + ": bad twist flag");
        cls.twistable = tw == "1";
        std::int64_t n = parse_i64(toks[arity + 2], lineno);
        if (n < 0 || cls.aut < 0)
            throw CorruptFile("census line " + std::to_string(lineno) + ": negative value");
        if (c.entries.count(cls))
            throw CorruptFile("census line " + std::to_string(lineno) + ": duplicate record");
        c.entries.emplace(std::move(cls), n);
        ++seen;
    }
    if (!ended || seen != expected)
        throw CorruptFile("census truncated: " + std::to_string(seen) + " of " +
                          std::to_string(expected) + " records");
    if (std::getline(in, line) && !line.empty())
        throw CorruptFile("trailing data after #end");
    return c;
}

void save_census(const Census& c, const std::filesystem::path& path)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw IoError("cannot write " + tmp.string());
        out << serialize(c);
        if (!out)
            throw IoError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Census load_census(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_census(buf.str());
}

std::string cache_name(Family f, std::uint64_t q, const BigInt& normalization, bool with_aut)
{
    return std::string(family_tag(f)) + "_q" + std::to_string(q) + "_v" + std::to_string(format_version) +
           "_n" + normalization.get_str() + (with_aut ? "_aut" : "") + ".census";
}

} // namespace hc::census
