#include "ccd/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ccd/error.hpp"

namespace ccd::csv {

Table parse(std::string_view text, std::string source) {
    Table table;
    table.source = std::move(source);
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<Row> records;
    Row current;
    std::string field;
    std::size_t line = 1;
    current.line = line;
    bool in_quotes = false;
    bool field_started = false;  // distinguishes an empty record from a record with one empty field

    auto end_record = [&] {
        if (field_started || !current.fields.empty()) {
            current.fields.push_back(std::move(field));
            records.push_back(std::move(current));
        }
        current = Row{};
        field.clear();
        field_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                field_started = true;
                break;
            case ',':
                current.fields.push_back(std::move(field));
                field.clear();
                field_started = true;
                break;
            case '\r':
                break;
            case '\n':
                end_record();
                ++line;
                current.line = line;
                break;
            default:
                field.push_back(c);
                field_started = true;
        }
    }
    if (in_quotes) throw Error(ErrorCode::BadField, "unterminated quoted field", table.source + ":" + std::to_string(line));
    end_record();

    if (records.empty()) throw Error(ErrorCode::BadHeader, "file is empty", table.source);
    table.header = std::move(records.front().fields);
    records.erase(records.begin());
    for (auto& row : records) {
        if (row.fields.size() != table.header.size()) {
            throw Error(ErrorCode::BadField,
                        "expected " + std::to_string(table.header.size()) + " fields, found " +
                            std::to_string(row.fields.size()),
                        table.where(row));
        }
    }
    table.rows = std::move(records);
    return table;
}

Table read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open file", path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path.string());
}

void require_header(const Table& table, const std::vector<std::string_view>& expected) {
    bool ok = table.header.size() == expected.size();
    for (std::size_t i = 0; ok && i < expected.size(); ++i) ok = table.header[i] == expected[i];
    if (!ok) {
        std::string want;
        for (auto name : expected) {
            if (!want.empty()) want += ',';
            want += name;
        }
        throw Error(ErrorCode::BadHeader, "expected header '" + want + "'", table.source + ":1");
    }
}

std::optional<double> parse_double(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::optional<long long> parse_int(std::string_view text) {
    long long value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::string format_double(double value) {
    if (value == 0.0) return "0";  // folds -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << escape(fields[i]);
    }
    out << '\n';
}

}  // namespace ccd::csv
