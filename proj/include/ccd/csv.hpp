#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ccd::csv {

struct Row {
    std::size_t line = 0;  // 1-based physical line where the record starts
    std::vector<std::string> fields;
};

struct Table {
    std::string source;  // file name used in error locations
    std::vector<std::string> header;
    std::vector<Row> rows;

    std::string where(const Row& row) const { return source + ":" + std::to_string(row.line); }
};

/// Parses RFC 4180 style CSV (quoted fields, doubled quotes, CRLF or LF).
/// A leading UTF-8 BOM is skipped and blank lines are ignored.
Table parse(std::string_view text, std::string source);

/// Reads and parses a file; throws Error{IoError} when it cannot be opened.
Table read_file(const std::filesystem::path& path);

/// Throws Error{BadHeader} unless the header matches `expected` exactly.
void require_header(const Table& table, const std::vector<std::string_view>& expected);

std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_int(std::string_view text);

/// Shortest representation that round-trips to the same double.
std::string format_double(double value);

std::string escape(std::string_view field);

/// Writes one record, escaping as needed, terminated by '\n'.
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace ccd::csv
