#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccd/coupling.hpp"
#include "ccd/entropy.hpp"
#include "ccd/panel.hpp"
#include "ccd/sde.hpp"
#include "ccd/spatial.hpp"

namespace ccd {

inline constexpr const char* kToolName = "ccd";
inline constexpr const char* kToolVersion = "0.1.0";

struct ScopeSpec {
    std::string label;
    std::optional<MacroRegion> filter;  // empty = all regions

    bool operator==(const ScopeSpec&) const = default;
};

/// Run configuration, read from a JSON object. Relative input paths resolve
/// against the config file's directory.
///
///   indicators, regions, values   input CSV paths (required)
///   output_dir                    report directory (required unless overridden on the CLI)
///   seed                          unsigned integer (required; LISA inference is always permutation based)
///   alpha, beta                   coupling weights, default 0.5 / 0.5
///   d_variant                     "literal" (D = C*T, default) or "sqrt"
///   weights_scheme                "row_standardized" (default) or "binary"
///   inference                     "permutation" (default) or "normal"
///   permutations                  global Moran permutations, default 999
///   moran_tail                    "upper" (default) or "two_sided"
///   lisa_alpha                    default 0.05
///   lisa_permutations             default 999
///   sde_scopes                    [{"label": ..., "filter": "all"|"east"|"central"|"west"|"northeast"}]
///   sde_years                     subset of panel years, default all
///   threads                       worker threads, default 1
///   geojson                       emit report.geojson, default true
struct RunConfig {
    std::filesystem::path indicators;
    std::filesystem::path regions;
    std::filesystem::path values;
    std::filesystem::path output_dir;
    CouplingConfig coupling;
    WeightScheme weights_scheme = WeightScheme::RowStandardized;
    InferenceMethod inference = InferenceMethod::Permutation;
    std::size_t permutations = 999;
    Tail moran_tail = Tail::Upper;
    std::optional<std::uint64_t> seed;
    double lisa_alpha = 0.05;
    std::size_t lisa_permutations = 999;
    std::vector<ScopeSpec> sde_scopes;
    std::vector<int> sde_years;  // empty = every panel year
    std::size_t threads = 1;
    bool geojson = true;
};

std::vector<ScopeSpec> default_scopes();

/// Parses and checks a config object. `base_dir` anchors relative paths;
/// `source` names the file in error messages. Throws Error{ConfigError}.
RunConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir,
                       const std::string& source = "config");
RunConfig load_config(const std::filesystem::path& path);

/// Echo of the effective configuration, as recorded in the manifest.
nlohmann::json config_to_json(const RunConfig& cfg);

struct YearMoran {
    int year = 0;
    MoranResult result;
};

struct YearLisa {
    int year = 0;
    LisaResult result;
};

struct ScopeEllipse {
    std::string scope;
    int year = 0;
    geo::EllipseParams ellipse;
};

struct ScopeDrift {
    std::string scope;
    geo::DriftSegment segment;
};

struct PipelineResult {
    IndexResult index;
    std::vector<CouplingRecord> coupling;
    std::vector<YearStats> year_stats;
    RegionAggregate regions;
    SpatialWeights weights;
    std::vector<YearMoran> moran;
    std::vector<YearLisa> lisa;
    std::vector<ScopeEllipse> ellipses;
    std::vector<ScopeDrift> drift;
};

/// Seeds handed to the global and local inference of one year.
std::uint64_t moran_seed(std::uint64_t base, int year);
std::uint64_t lisa_seed(std::uint64_t base, int year);

/// Every analysis stage on an already validated dataset.
PipelineResult compute_pipeline(const PanelDataset& ds, const RunConfig& cfg);

/// Writes every report CSV (and GeoJSON when enabled). Returns data-row counts per file.
std::map<std::string, std::size_t> write_reports(const PipelineResult& result, const PanelDataset& ds,
                                                 const RunConfig& cfg, const std::filesystem::path& dir);

/// FeatureCollection of ellipse polygons, mean centers and LISA region points.
/// Throws Error{EmptyInput} when there is nothing to emit.
nlohmann::json emit_geojson(const std::vector<ScopeEllipse>& ellipses, const std::vector<YearLisa>& lisa,
                            std::span<const RegionSpec> regions, int segments = 64);

struct InputDigest {
    std::string role;
    std::string path;
    std::string sha256;
};

struct RunManifest {
    nlohmann::json config;
    std::vector<InputDigest> inputs;
    std::string tool_version;
    std::string timestamp;
    std::string generator;
    std::map<std::string, std::size_t> row_counts;
    std::vector<Finding> warnings;

    nlohmann::json to_json() const;
};

std::string sha256_file(const std::filesystem::path& path);

/// UTC timestamp from SOURCE_DATE_EPOCH when set, otherwise the current time.
std::string run_timestamp();

/// load -> validate -> index -> coupling -> spatial statistics -> ellipses -> reports + manifest.json.
/// Throws Error{ValidationFailed} when the dataset does not validate.
RunManifest run_pipeline(const RunConfig& cfg);

}  // namespace ccd
