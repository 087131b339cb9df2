#include "heckecount/cli/report.hpp"

#include "heckecount/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace hc::cli {

Format parse_format(std::string_view s)
{
    if (s == "text")
        return Format::text;
    if (s == "csv")
        return Format::csv;
    if (s == "json")
        return Format::json;
    throw InvalidArgument("unknown format '" + std::string(s) + "'");
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string render(const Table& t, Format f)
{
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < t.columns.size(); ++i)
                obj[t.columns[i]] = i < row.size() ? row[i] : "";
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? "," : "") << csv_field(t.columns[i]);
        out << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << '\n';
        }
        break;
    case Format::text: {
        std::vector<std::size_t> w(t.columns.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] = t.columns[i].size();
        for (const auto& row : t.rows)
            for (std::size_t i = 0; i < row.size() && i < w.size(); ++i)
                w[i] = std::max(w[i], row[i].size());
        auto line = [&](const std::vector<std::string>& r) {
            std::string s;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i)
                    s += "  ";
                s += r[i];
                if (i + 1 < r.size())
                    s.append(w[i] - r[i].size(), ' ');
            }
            out << s << '\n';
        };
        line(t.columns);
        for (const auto& row : t.rows)
            line(row);
        break;
    }
    }
    return out.str();
}

} // namespace hc::cli
