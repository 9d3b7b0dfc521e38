#include "support.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ccd/csv.hpp"

namespace ccd::testing {

namespace fs = std::filesystem;

fs::path source_dir() { return fs::path(CCD_SOURCE_DIR); }
fs::path china31_dir() { return source_dir() / "data" / "china31"; }

namespace {

double number(const std::string& text) {
    auto v = csv::parse_double(text);
    if (!v) throw std::runtime_error("bad number in fixture: " + text);
    return *v;
}

}  // namespace

std::vector<double> CouplingTable::column(int year, const std::vector<RegionSpec>& order) const {
    const auto t = static_cast<std::size_t>(std::find(years.begin(), years.end(), year) - years.begin());
    if (t == years.size()) throw std::runtime_error("year not in coupling table");
    std::vector<double> out;
    for (const auto& r : order) {
        auto it = std::find(regions.begin(), regions.end(), r.id);
        if (it == regions.end()) throw std::runtime_error("region missing from coupling table: " + r.id);
        out.push_back(d[static_cast<std::size_t>(it - regions.begin())][t]);
    }
    return out;
}

CouplingTable load_coupling_table() {
    const auto table = csv::read_file(source_dir() / "tests" / "fixtures" / "coupling_reference.csv");
    CouplingTable out;
    for (std::size_t k = 1; k < table.header.size(); ++k) out.years.push_back(static_cast<int>(number(table.header[k])));
    for (const auto& row : table.rows) {
        out.regions.push_back(row.fields.at(0));
        std::vector<double> d;
        for (std::size_t k = 1; k < row.fields.size(); ++k) d.push_back(number(row.fields[k]));
        out.d.push_back(std::move(d));
    }
    return out;
}

std::vector<EllipseRow> load_ellipse_table() {
    const auto table = csv::read_file(source_dir() / "tests" / "fixtures" / "ellipse_reference.csv");
    std::vector<EllipseRow> out;
    for (const auto& row : table.rows) {
        const auto& f = row.fields;
        out.push_back({f.at(0), static_cast<int>(number(f.at(1))), number(f.at(2)), number(f.at(3)), number(f.at(4)),
                       number(f.at(5)), number(f.at(6)), number(f.at(7))});
    }
    return out;
}

std::vector<RegionSpec> china31_regions() { return load_regions(china31_dir() / "regions.csv"); }

std::vector<std::pair<std::string, Stage>> reference_stages_2021() {
    std::vector<std::pair<std::string, Stage>> out;
    auto add = [&](Stage s, std::initializer_list<const char*> ids) {
        for (const char* id : ids) out.emplace_back(id, s);
    };
    add(Stage::HighCoordination, {"guangdong"});
    add(Stage::ModerateCoordination,
        {"jiangsu", "zhejiang", "shandong", "sichuan", "beijing", "hubei", "hunan", "shanghai", "anhui"});
    // Henan (0.462) is the basic-level member alongside Fujian
    add(Stage::BasicCoordination, {"fujian", "henan"});
    add(Stage::ModerateDisorder, {"hebei", "jiangxi", "liaoning", "yunnan", "shaanxi", "guizhou", "chongqing",
                                  "xinjiang", "guangxi", "heilongjiang", "shanxi", "jilin", "inner_mongolia",
                                  "gansu", "tibet", "tianjin"});
    add(Stage::SeriousMaladjustment, {"hainan", "qinghai", "ningxia"});
    return out;
}

std::vector<RegionRow> reference_region_rows() {
    return {
        {MacroRegion::Northeast, {0.217, 0.249, 0.267, 0.279, 0.282, 0.290, 0.305, 0.323}, 0.277},
        {MacroRegion::East, {0.302, 0.346, 0.378, 0.413, 0.435, 0.462, 0.498, 0.536}, 0.421},
        {MacroRegion::Central, {0.286, 0.326, 0.350, 0.371, 0.386, 0.404, 0.425, 0.451}, 0.375},
        {MacroRegion::West, {0.202, 0.222, 0.244, 0.262, 0.272, 0.286, 0.301, 0.318}, 0.263},
    };
}

std::vector<FooterRow> reference_footer() {
    return {
        {2014, 0.252, 0.109, 0.434}, {2015, 0.285, 0.119, 0.420}, {2016, 0.310, 0.129, 0.415},
        {2017, 0.333, 0.140, 0.421}, {2018, 0.347, 0.148, 0.426}, {2019, 0.366, 0.158, 0.428},
        {2020, 0.389, 0.170, 0.438}, {2021, 0.415, 0.182, 0.439},
    };
}

PanelDataset random_panel(std::mt19937_64& rng, std::size_t years, std::size_t regions, std::size_t nx,
                          std::size_t ny) {
    std::uniform_real_distribution<double> value(0.0, 100.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> ys;
    for (std::size_t t = 0; t < years; ++t) ys.push_back(2000 + static_cast<int>(t));
    std::vector<RegionSpec> rs;
    for (std::size_t i = 0; i < regions; ++i) {
        RegionSpec r;
        r.id = "r" + std::to_string(i);
        r.name = "Region " + std::to_string(i);
        r.centroid_lon = 100.0 + static_cast<double>(i);
        r.centroid_lat = 30.0;
        if (i > 0) r.neighbors.push_back("r" + std::to_string(i - 1));
        if (i + 1 < regions) r.neighbors.push_back("r" + std::to_string(i + 1));
        rs.push_back(std::move(r));
    }
    std::vector<IndicatorSpec> is;
    for (std::size_t j = 0; j < nx + ny; ++j) {
        IndicatorSpec s;
        s.id = (j < nx ? "x" : "y") + std::to_string(j);
        s.name = s.id;
        s.subsystem = j < nx ? Subsystem::X : Subsystem::Y;
        s.direction = unit(rng) < 0.25 ? Direction::Negative : Direction::Positive;
        is.push_back(std::move(s));
    }
    std::vector<double> values(years * regions * is.size());
    for (auto& v : values) v = value(rng);
    return PanelDataset(std::move(ys), std::move(rs), std::move(is), std::move(values));
}

PanelDataset tiny_panel() {
    std::vector<RegionSpec> rs(2);
    rs[0] = {"north", "North", MacroRegion::East, 116.0, 40.0, {"south"}};
    rs[1] = {"south", "South", MacroRegion::East, 113.0, 23.0, {"north"}};
    std::vector<IndicatorSpec> is = {{"x1", "X one", Subsystem::X, Direction::Positive, ""},
                                     {"x2", "X two", Subsystem::X, Direction::Positive, ""},
                                     {"y1", "Y one", Subsystem::Y, Direction::Positive, ""},
                                     {"y2", "Y two", Subsystem::Y, Direction::Positive, ""}};
    // [year][region][indicator]; each indicator bottoms out in a different cell so every D > 0
    std::vector<double> values = {1, 9, 2, 8, 5, 4, 6, 3, 3, 6, 4, 7, 8, 2, 9, 1};
    return PanelDataset({2020, 2021}, std::move(rs), std::move(is), std::move(values));
}

OracleIndex oracle_index(const PanelDataset& ds) {
    const std::size_t v = ds.year_count(), m = ds.region_count();
    OracleIndex out;
    out.f.assign(v * m, 0.0);
    out.g.assign(v * m, 0.0);
    for (Subsystem sub : {Subsystem::X, Subsystem::Y}) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < ds.indicator_count(); ++j) {
            if (ds.indicators()[j].subsystem == sub) cols.push_back(j);
        }
        // standardized values
        std::vector<std::vector<double>> z(cols.size(), std::vector<double>(v * m));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            double lo = ds.value(0, 0, cols[k]), hi = lo;
            for (std::size_t t = 0; t < v; ++t)
                for (std::size_t i = 0; i < m; ++i) {
                    lo = std::min(lo, ds.value(t, i, cols[k]));
                    hi = std::max(hi, ds.value(t, i, cols[k]));
                }
            const bool positive = ds.indicators()[cols[k]].direction == Direction::Positive;
            for (std::size_t t = 0; t < v; ++t)
                for (std::size_t i = 0; i < m; ++i) {
                    const double x = ds.value(t, i, cols[k]);
                    z[k][t * m + i] = hi == lo ? 1.0 : (positive ? (x - lo) / (hi - lo) : (hi - x) / (hi - lo));
                }
        }
        // proportions, entropy, redundancy
        std::vector<double> d(cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            double total = 0.0;
            for (double x : z[k]) total += x;
            double h = 0.0;
            for (double x : z[k]) {
                const double s = x / total;
                if (s > 0.0) h += s * std::log(s);
            }
            const double e = -h / std::log(static_cast<double>(v * m));
            d[k] = 1.0 - e;
        }
        double dsum = 0.0;
        for (double x : d) dsum += x;
        std::vector<double> w(cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k) w[k] = d[k] / dsum;
        auto& level = sub == Subsystem::X ? out.f : out.g;
        for (std::size_t c = 0; c < v * m; ++c)
            for (std::size_t k = 0; k < cols.size(); ++k) level[c] += w[k] * z[k][c];
        (sub == Subsystem::X ? out.weights_x : out.weights_y) = w;
    }
    return out;
}

OracleEllipse oracle_ellipse(const std::vector<geo::PlanarPoint>& points) {
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    double total = 0.0;
    for (const auto& p : points) {
        mean += p.weight * Eigen::Vector2d(p.x_km, p.y_km);
        total += p.weight;
    }
    mean /= total;
    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    for (const auto& p : points) {
        const Eigen::Vector2d d = Eigen::Vector2d(p.x_km, p.y_km) - mean;
        cov += p.weight * d * d.transpose();
    }
    cov /= total;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(cov);
    const Eigen::Vector2d major = solver.eigenvectors().col(1);  // eigenvalues ascend
    OracleEllipse out;
    out.var_minor = solver.eigenvalues()(0);
    out.var_major = solver.eigenvalues()(1);
    double az = std::atan2(major.x(), major.y()) * 180.0 / std::numbers::pi;
    az = std::fmod(az + 360.0, 180.0);
    out.azimuth_deg = az;
    return out;
}

double axis_angle_diff(double a_deg, double b_deg) {
    double d = std::fmod(std::abs(a_deg - b_deg), 180.0);
    return std::min(d, 180.0 - d);
}

std::string read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TempDir::TempDir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = fs::temp_directory_path() / ("ccd-" + tag + "-" + std::to_string(rng()));
    fs::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

}  // namespace ccd::testing
