#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hc::cli {

enum class Format { text, csv, json };
Format parse_format(std::string_view s);

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2, io = 3, unsupported = 4 };

// Rows of strings; exact values are always decimal strings, never floats.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

// text: aligned columns; csv: RFC 4180 quoting; json: array of objects.
std::string render(const Table& t, Format f);

} // namespace hc::cli
