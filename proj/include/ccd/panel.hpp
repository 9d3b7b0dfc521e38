#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccd {

enum class Subsystem { X, Y };
enum class Direction { Positive, Negative };
enum class MacroRegion { East, Central, West, Northeast };

std::string_view to_string(Subsystem s) noexcept;
std::string_view to_string(Direction d) noexcept;
std::string_view to_string(MacroRegion r) noexcept;
std::optional<MacroRegion> parse_macro_region(std::string_view text) noexcept;

struct IndicatorSpec {
    std::string id;
    std::string name;
    Subsystem subsystem = Subsystem::X;
    Direction direction = Direction::Positive;
    std::string unit;

    bool operator==(const IndicatorSpec&) const = default;
};

struct RegionSpec {
    std::string id;
    std::string name;
    MacroRegion macro_region = MacroRegion::East;
    double centroid_lon = 0.0;
    double centroid_lat = 0.0;
    std::vector<std::string> neighbors;  // file order

    bool operator==(const RegionSpec&) const = default;
};

/// Dense year x region x indicator panel. Orderings follow the input files;
/// years are strictly increasing.
class PanelDataset {
public:
    PanelDataset() = default;
    PanelDataset(std::vector<int> years, std::vector<RegionSpec> regions, std::vector<IndicatorSpec> indicators,
                 std::vector<double> values);

    const std::vector<int>& years() const noexcept { return years_; }
    const std::vector<RegionSpec>& regions() const noexcept { return regions_; }
    const std::vector<IndicatorSpec>& indicators() const noexcept { return indicators_; }

    std::size_t year_count() const noexcept { return years_.size(); }
    std::size_t region_count() const noexcept { return regions_.size(); }
    std::size_t indicator_count() const noexcept { return indicators_.size(); }

    double value(std::size_t year, std::size_t region, std::size_t indicator) const {
        return values_[(year * regions_.size() + region) * indicators_.size() + indicator];
    }

    std::optional<std::size_t> region_index(std::string_view id) const;
    std::optional<std::size_t> indicator_index(std::string_view id) const;
    std::optional<std::size_t> year_index(int year) const;

    /// Indices of the indicators belonging to `s`, in file order.
    std::vector<std::size_t> subsystem_indicators(Subsystem s) const;

    bool operator==(const PanelDataset&) const = default;

private:
    std::vector<int> years_;
    std::vector<RegionSpec> regions_;
    std::vector<IndicatorSpec> indicators_;
    std::vector<double> values_;
};

struct Finding {
    std::string code;
    std::string location;
    std::string message;

    bool operator==(const Finding&) const = default;
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;

    bool accepted() const noexcept { return errors.empty(); }
    bool operator==(const ValidationReport&) const = default;
};

std::vector<IndicatorSpec> load_indicators(const std::filesystem::path& path);
std::vector<RegionSpec> load_regions(const std::filesystem::path& path);

/// Loads the three panel files. Throws Error on MissingCell, DuplicateRow,
/// UnknownRegionId, UnknownIndicatorId, NonFiniteValue and malformed input.
PanelDataset load_panel(const std::filesystem::path& indicators_path, const std::filesystem::path& regions_path,
                        const std::filesystem::path& values_path);

/// Structural checks that do not prevent loading: adjacency symmetry,
/// self-neighbors, coordinate ranges, empty subsystems, constant columns.
ValidationReport validate(const PanelDataset& ds);

/// Writes indicators.csv, regions.csv and values.csv into `dir`.
void write_panel(const PanelDataset& ds, const std::filesystem::path& dir);

}  // namespace ccd
