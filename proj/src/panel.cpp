#include "ccd/panel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "ccd/csv.hpp"
#include "ccd/error.hpp"

namespace ccd {

std::string_view to_string(Subsystem s) noexcept { return s == Subsystem::X ? "X" : "Y"; }

std::string_view to_string(Direction d) noexcept { return d == Direction::Positive ? "+" : "-"; }

std::string_view to_string(MacroRegion r) noexcept {
    switch (r) {
        case MacroRegion::East: return "east";
        case MacroRegion::Central: return "central";
        case MacroRegion::West: return "west";
        case MacroRegion::Northeast: return "northeast";
    }
    return "";
}

std::optional<MacroRegion> parse_macro_region(std::string_view text) noexcept {
    for (auto r : {MacroRegion::East, MacroRegion::Central, MacroRegion::West, MacroRegion::Northeast}) {
        if (text == to_string(r)) return r;
    }
    return std::nullopt;
}

PanelDataset::PanelDataset(std::vector<int> years, std::vector<RegionSpec> regions,
                           std::vector<IndicatorSpec> indicators, std::vector<double> values)
    : years_(std::move(years)), regions_(std::move(regions)), indicators_(std::move(indicators)),
      values_(std::move(values)) {
    if (values_.size() != years_.size() * regions_.size() * indicators_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "value array does not match years x regions x indicators");
    }
    if (!std::is_sorted(years_.begin(), years_.end()) ||
        std::adjacent_find(years_.begin(), years_.end()) != years_.end()) {
        throw Error(ErrorCode::BadField, "years must be strictly increasing");
    }
}

namespace {

template <class Range>
std::optional<std::size_t> find_id(const Range& items, std::string_view id) {
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].id == id) return i;
    }
    return std::nullopt;
}

std::vector<std::string> split_neighbors(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(start, end - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (!token.empty()) out.emplace_back(token);
        start = end + 1;
    }
    return out;
}

}  // namespace

std::optional<std::size_t> PanelDataset::region_index(std::string_view id) const { return find_id(regions_, id); }

std::optional<std::size_t> PanelDataset::indicator_index(std::string_view id) const {
    return find_id(indicators_, id);
}

std::optional<std::size_t> PanelDataset::year_index(int year) const {
    auto it = std::lower_bound(years_.begin(), years_.end(), year);
    if (it == years_.end() || *it != year) return std::nullopt;
    return static_cast<std::size_t>(it - years_.begin());
}

std::vector<std::size_t> PanelDataset::subsystem_indicators(Subsystem s) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < indicators_.size(); ++j) {
        if (indicators_[j].subsystem == s) out.push_back(j);
    }
    return out;
}

std::vector<IndicatorSpec> load_indicators(const std::filesystem::path& path) {
    const auto table = csv::read_file(path);
    csv::require_header(table, {"id", "name", "subsystem", "direction", "unit"});

    std::vector<IndicatorSpec> out;
    std::unordered_set<std::string> seen;
    for (const auto& row : table.rows) {
        IndicatorSpec spec;
        spec.id = row.fields[0];
        spec.name = row.fields[1];
        spec.unit = row.fields[4];
        if (spec.id.empty()) throw Error(ErrorCode::BadField, "empty indicator id", table.where(row));
        if (!seen.insert(spec.id).second) {
            throw Error(ErrorCode::DuplicateId, "duplicate indicator id '" + spec.id + "'", table.where(row));
        }
        const auto& sub = row.fields[2];
        if (sub == "X") {
            spec.subsystem = Subsystem::X;
        } else if (sub == "Y") {
            spec.subsystem = Subsystem::Y;
        } else {
            throw Error(ErrorCode::BadField, "subsystem must be X or Y, got '" + sub + "'", table.where(row));
        }
        const auto& dir = row.fields[3];
        if (dir == "+") {
            spec.direction = Direction::Positive;
        } else if (dir == "-") {
            spec.direction = Direction::Negative;
        } else {
            throw Error(ErrorCode::BadField, "direction must be + or -, got '" + dir + "'", table.where(row));
        }
        out.push_back(std::move(spec));
    }
    return out;
}

std::vector<RegionSpec> load_regions(const std::filesystem::path& path) {
    const auto table = csv::read_file(path);
    csv::require_header(table, {"id", "name", "macro_region", "lon", "lat", "neighbors"});

    std::vector<RegionSpec> out;
    std::unordered_set<std::string> seen;
    for (const auto& row : table.rows) {
        RegionSpec spec;
        spec.id = row.fields[0];
        spec.name = row.fields[1];
        if (spec.id.empty()) throw Error(ErrorCode::BadField, "empty region id", table.where(row));
        if (!seen.insert(spec.id).second) {
            throw Error(ErrorCode::DuplicateId, "duplicate region id '" + spec.id + "'", table.where(row));
        }
        auto macro = parse_macro_region(row.fields[2]);
        if (!macro) {
            throw Error(ErrorCode::BadField, "unknown macro_region '" + row.fields[2] + "'", table.where(row));
        }
        spec.macro_region = *macro;
        auto lon = csv::parse_double(row.fields[3]);
        auto lat = csv::parse_double(row.fields[4]);
        if (!lon || !lat || !std::isfinite(*lon) || !std::isfinite(*lat)) {
            throw Error(ErrorCode::BadField, "lon/lat must be finite numbers", table.where(row));
        }
        spec.centroid_lon = *lon;
        spec.centroid_lat = *lat;
        spec.neighbors = split_neighbors(row.fields[5]);
        out.push_back(std::move(spec));
    }
    return out;
}

PanelDataset load_panel(const std::filesystem::path& indicators_path, const std::filesystem::path& regions_path,
                        const std::filesystem::path& values_path) {
    auto indicators = load_indicators(indicators_path);
    auto regions = load_regions(regions_path);
    const auto table = csv::read_file(values_path);
    csv::require_header(table, {"year", "region", "indicator", "value"});

    std::unordered_map<std::string, std::size_t> region_pos, indicator_pos;
    for (std::size_t i = 0; i < regions.size(); ++i) region_pos.emplace(regions[i].id, i);
    for (std::size_t j = 0; j < indicators.size(); ++j) indicator_pos.emplace(indicators[j].id, j);

    struct Cell {
        int year;
        std::size_t region, indicator;
        double value;
    };
    std::vector<Cell> cells;
    cells.reserve(table.rows.size());
    std::map<int, std::size_t> year_pos;
    for (const auto& row : table.rows) {
        auto year = csv::parse_int(row.fields[0]);
        if (!year) throw Error(ErrorCode::BadField, "year is not an integer: '" + row.fields[0] + "'", table.where(row));
        auto r = region_pos.find(row.fields[1]);
        if (r == region_pos.end()) {
            throw Error(ErrorCode::UnknownRegionId, "unknown region '" + row.fields[1] + "'", table.where(row));
        }
        auto k = indicator_pos.find(row.fields[2]);
        if (k == indicator_pos.end()) {
            throw Error(ErrorCode::UnknownIndicatorId, "unknown indicator '" + row.fields[2] + "'", table.where(row));
        }
        const auto& raw = row.fields[3];
        auto value = csv::parse_double(raw);
        if (!value) {
            // from_chars accepts nan/inf spellings, so anything left is malformed
            throw Error(ErrorCode::BadField, "value is not a number: '" + raw + "'", table.where(row));
        }
        if (!std::isfinite(*value)) {
            throw Error(ErrorCode::NonFiniteValue, "non-finite value '" + raw + "'", table.where(row));
        }
        year_pos.emplace(static_cast<int>(*year), 0);
        cells.push_back({static_cast<int>(*year), r->second, k->second, *value});
    }

    std::vector<int> years;
    for (auto& [year, pos] : year_pos) {
        pos = years.size();
        years.push_back(year);
    }

    const std::size_t m = regions.size();
    const std::size_t n = indicators.size();
    std::vector<double> values(years.size() * m * n, 0.0);
    std::vector<std::size_t> source_line(values.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& cell = cells[c];
        const std::size_t idx = (year_pos[cell.year] * m + cell.region) * n + cell.indicator;
        const auto& row = table.rows[c];
        if (source_line[idx] != 0) {
            throw Error(ErrorCode::DuplicateRow,
                        "duplicate cell (" + std::to_string(cell.year) + ", " + regions[cell.region].id + ", " +
                            indicators[cell.indicator].id + "), first seen on line " +
                            std::to_string(source_line[idx]),
                        table.where(row));
        }
        source_line[idx] = row.line;
        values[idx] = cell.value;
    }
    for (std::size_t t = 0; t < years.size(); ++t) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (source_line[(t * m + i) * n + j] == 0) {
                    throw Error(ErrorCode::MissingCell,
                                "no value for (" + std::to_string(years[t]) + ", " + regions[i].id + ", " +
                                    indicators[j].id + ")",
                                table.source);
                }
            }
        }
    }
    return PanelDataset(std::move(years), std::move(regions), std::move(indicators), std::move(values));
}

ValidationReport validate(const PanelDataset& ds) {
    ValidationReport report;
    const auto& regions = ds.regions();

    for (const auto& region : regions) {
        const std::string where = "region " + region.id;
        if (region.centroid_lat < -90.0 || region.centroid_lat > 90.0 || region.centroid_lon < -180.0 ||
            region.centroid_lon > 180.0) {
            report.errors.push_back({"CoordinateOutOfRange", where, "centroid outside [-180,180] x [-90,90]"});
        }
        for (const auto& nb : region.neighbors) {
            if (nb == region.id) {
                report.errors.push_back({"SelfNeighbor", where, "region lists itself as a neighbor"});
                continue;
            }
            auto other = ds.region_index(nb);
            if (!other) {
                report.errors.push_back({"UnknownNeighbor", where, "neighbor '" + nb + "' is not a region"});
                continue;
            }
            const auto& back = regions[*other].neighbors;
            if (std::find(back.begin(), back.end(), region.id) == back.end()) {
                report.errors.push_back(
                    {"AsymmetricAdjacency", where, "lists '" + nb + "' but '" + nb + "' does not list it back"});
            }
        }
    }

    for (auto s : {Subsystem::X, Subsystem::Y}) {
        if (ds.subsystem_indicators(s).empty()) {
            report.errors.push_back(
                {"EmptySubsystem", "subsystem " + std::string(to_string(s)), "subsystem has no indicators"});
        }
    }

    for (std::size_t j = 0; j < ds.indicator_count(); ++j) {
        if (ds.year_count() == 0 || ds.region_count() == 0) break;
        const double first = ds.value(0, 0, j);
        bool constant = true;
        for (std::size_t t = 0; constant && t < ds.year_count(); ++t) {
            for (std::size_t i = 0; constant && i < ds.region_count(); ++i) constant = ds.value(t, i, j) == first;
        }
        if (constant) {
            report.warnings.push_back({"ConstantColumn", "indicator " + ds.indicators()[j].id,
                                       "indicator is constant over all years and regions; its weight will be 0"});
        }
    }
    return report;
}

void write_panel(const PanelDataset& ds, const std::filesystem::path& dir) {
    auto open = [&](const char* name) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw Error(ErrorCode::IoError, "cannot write file", (dir / name).string());
        return out;
    };
    {
        auto out = open("indicators.csv");
        csv::write_row(out, {"id", "name", "subsystem", "direction", "unit"});
        for (const auto& ind : ds.indicators()) {
            csv::write_row(out, {ind.id, ind.name, std::string(to_string(ind.subsystem)),
                                 std::string(to_string(ind.direction)), ind.unit});
        }
    }
    {
        auto out = open("regions.csv");
        csv::write_row(out, {"id", "name", "macro_region", "lon", "lat", "neighbors"});
        for (const auto& r : ds.regions()) {
            std::string nbs;
            for (const auto& nb : r.neighbors) {
                if (!nbs.empty()) nbs += ';';
                nbs += nb;
            }
            csv::write_row(out, {r.id, r.name, std::string(to_string(r.macro_region)),
                                 csv::format_double(r.centroid_lon), csv::format_double(r.centroid_lat), nbs});
        }
    }
    {
        auto out = open("values.csv");
        csv::write_row(out, {"year", "region", "indicator", "value"});
        for (std::size_t t = 0; t < ds.year_count(); ++t) {
            for (std::size_t i = 0; i < ds.region_count(); ++i) {
                for (std::size_t j = 0; j < ds.indicator_count(); ++j) {
                    csv::write_row(out, {std::to_string(ds.years()[t]), ds.regions()[i].id, ds.indicators()[j].id,
                                         csv::format_double(ds.value(t, i, j))});
                }
            }
        }
    }
}

}  // namespace ccd
