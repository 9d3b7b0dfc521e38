// Shared fixtures and independent reference implementations for the test binaries.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ccd/coupling.hpp"
#include "ccd/panel.hpp"
#include "ccd/sde.hpp"

namespace ccd::testing {

std::filesystem::path source_dir();
std::filesystem::path china31_dir();

/// Reference coordination degrees, one row per region id, one column per year.
struct CouplingTable {
    std::vector<int> years;
    std::vector<std::string> regions;
    std::vector<std::vector<double>> d;  // [region][year]

    /// Column for `year` reordered to follow `order`.
    std::vector<double> column(int year, const std::vector<RegionSpec>& order) const;
};
CouplingTable load_coupling_table();

struct EllipseRow {
    std::string scope;
    int year = 0;
    double center_lon = 0.0;
    double center_lat = 0.0;
    double long_axis_km = 0.0;
    double short_axis_km = 0.0;
    double azimuth_deg = 0.0;
    double area = 0.0;
};
std::vector<EllipseRow> load_ellipse_table();

std::vector<RegionSpec> china31_regions();

/// Reference 2021 stage memberships.
std::vector<std::pair<std::string, Stage>> reference_stages_2021();

/// Reference macro-region rows: yearly means 2014..2021, then the cross-year mean.
struct RegionRow {
    MacroRegion region;
    std::vector<double> yearly;
    double overall;
};
std::vector<RegionRow> reference_region_rows();

/// Reference yearly statistics of the coupling table.
struct FooterRow {
    int year;
    double mean;
    double std;
    std::optional<double> cv;
};
std::vector<FooterRow> reference_footer();

/// Random panel with `nx` X and `ny` Y indicators; roughly a quarter of the
/// indicators are negative-direction.
PanelDataset random_panel(std::mt19937_64& rng, std::size_t years, std::size_t regions, std::size_t nx,
                          std::size_t ny);

/// Two mutually adjacent regions, two years, two indicators per subsystem.
PanelDataset tiny_panel();

/// Entropy method evaluated term by term in the textbook order.
struct OracleIndex {
    std::vector<double> weights_x, weights_y;
    std::vector<double> f, g;  // [year * m + region]
};
OracleIndex oracle_index(const PanelDataset& ds);

/// Ellipse from the eigen-decomposition of the weighted covariance matrix.
struct OracleEllipse {
    double var_major = 0.0;
    double var_minor = 0.0;
    double azimuth_deg = 0.0;  // [0, 180)
};
OracleEllipse oracle_ellipse(const std::vector<geo::PlanarPoint>& points);

/// Smallest difference between two axis directions, modulo 180 degrees.
double axis_angle_diff(double a_deg, double b_deg);

std::string read_bytes(const std::filesystem::path& path);

/// Fresh empty directory below the system temp dir; removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag);
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace ccd::testing
