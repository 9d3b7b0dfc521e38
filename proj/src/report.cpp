#include "ccd/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "ccd/csv.hpp"
#include "ccd/error.hpp"
#include "ccd/parallel.hpp"
#include "ccd/rng.hpp"

namespace ccd {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<ScopeSpec> default_scopes() {
    return {{"national", std::nullopt},
            {"east", MacroRegion::East},
            {"central", MacroRegion::Central},
            {"west", MacroRegion::West},
            {"northeast", MacroRegion::Northeast}};
}

namespace {

[[noreturn]] void config_error(const std::string& source, const std::string& key, const std::string& message) {
    throw Error(ErrorCode::ConfigError, message, key.empty() ? source : source + ": " + key);
}

std::string get_string(const json& doc, const std::string& key, const std::string& source) {
    const auto& v = doc.at(key);
    if (!v.is_string()) config_error(source, key, "expected a string");
    return v.get<std::string>();
}

double get_number(const json& doc, const std::string& key, const std::string& source) {
    const auto& v = doc.at(key);
    if (!v.is_number()) config_error(source, key, "expected a number");
    return v.get<double>();
}

std::uint64_t get_unsigned(const json& doc, const std::string& key, const std::string& source) {
    const auto& v = doc.at(key);
    const bool ok = v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
    if (!ok) config_error(source, key, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

fs::path resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return (path.is_absolute() ? path : base / path).lexically_normal();
}

}  // namespace

RunConfig parse_config(const json& doc, const fs::path& base_dir, const std::string& source) {
    static const std::set<std::string> known = {
        "indicators", "regions",       "values",      "output_dir", "alpha",     "beta",
        "d_variant",  "weights_scheme", "inference",  "permutations", "moran_tail", "seed",
        "lisa_alpha", "lisa_permutations", "sde_scopes", "sde_years", "threads",   "geojson"};
    if (!doc.is_object()) config_error(source, "", "config must be a JSON object");
    for (const auto& [key, unused] : doc.items()) {
        if (!known.contains(key)) config_error(source, key, "unknown key");
    }

    RunConfig cfg;
    for (const char* key : {"indicators", "regions", "values"}) {
        if (!doc.contains(key)) config_error(source, key, "missing required key");
    }
    cfg.indicators = resolve(base_dir, get_string(doc, "indicators", source));
    cfg.regions = resolve(base_dir, get_string(doc, "regions", source));
    cfg.values = resolve(base_dir, get_string(doc, "values", source));
    if (doc.contains("output_dir")) cfg.output_dir = resolve(base_dir, get_string(doc, "output_dir", source));

    if (doc.contains("alpha")) cfg.coupling.alpha = get_number(doc, "alpha", source);
    if (doc.contains("beta")) cfg.coupling.beta = get_number(doc, "beta", source);
    try {
        cfg.coupling.check();
    } catch (const Error& e) {
        config_error(source, "alpha/beta", "alpha and beta must be non-negative and sum to 1");
    }
    if (doc.contains("d_variant")) {
        auto v = get_string(doc, "d_variant", source);
        if (v == "literal") cfg.coupling.d_variant = DVariant::Literal;
        else if (v == "sqrt") cfg.coupling.d_variant = DVariant::Sqrt;
        else config_error(source, "d_variant", "expected \"literal\" or \"sqrt\"");
    }
    if (doc.contains("weights_scheme")) {
        auto v = get_string(doc, "weights_scheme", source);
        if (v == "row_standardized") cfg.weights_scheme = WeightScheme::RowStandardized;
        else if (v == "binary") cfg.weights_scheme = WeightScheme::BinaryContiguity;
        else config_error(source, "weights_scheme", "expected \"row_standardized\" or \"binary\"");
    }
    if (doc.contains("inference")) {
        auto v = get_string(doc, "inference", source);
        if (v == "permutation") cfg.inference = InferenceMethod::Permutation;
        else if (v == "normal") cfg.inference = InferenceMethod::NormalApprox;
        else config_error(source, "inference", "expected \"permutation\" or \"normal\"");
    }
    if (doc.contains("moran_tail")) {
        auto v = get_string(doc, "moran_tail", source);
        if (v == "upper") cfg.moran_tail = Tail::Upper;
        else if (v == "two_sided") cfg.moran_tail = Tail::TwoSided;
        else config_error(source, "moran_tail", "expected \"upper\" or \"two_sided\"");
    }
    if (doc.contains("permutations")) cfg.permutations = get_unsigned(doc, "permutations", source);
    if (doc.contains("lisa_permutations")) cfg.lisa_permutations = get_unsigned(doc, "lisa_permutations", source);
    if (cfg.permutations == 0 && cfg.inference == InferenceMethod::Permutation) {
        config_error(source, "permutations", "must be positive for permutation inference");
    }
    if (cfg.lisa_permutations == 0) config_error(source, "lisa_permutations", "must be positive");
    if (!doc.contains("seed")) config_error(source, "seed", "missing required key (permutation inference needs a seed)");
    cfg.seed = get_unsigned(doc, "seed", source);

    if (doc.contains("lisa_alpha")) {
        cfg.lisa_alpha = get_number(doc, "lisa_alpha", source);
        if (!(cfg.lisa_alpha > 0.0 && cfg.lisa_alpha < 1.0)) config_error(source, "lisa_alpha", "must lie in (0, 1)");
    }

    if (doc.contains("sde_scopes")) {
        const auto& scopes = doc.at("sde_scopes");
        if (!scopes.is_array() || scopes.empty()) config_error(source, "sde_scopes", "expected a non-empty array");
        std::set<std::string> labels;
        for (const auto& s : scopes) {
            if (!s.is_object() || !s.contains("label") || !s.contains("filter") || !s.at("label").is_string() ||
                !s.at("filter").is_string() || s.size() != 2) {
                config_error(source, "sde_scopes", "each scope needs exactly string fields \"label\" and \"filter\"");
            }
            ScopeSpec spec;
            spec.label = s.at("label").get<std::string>();
            if (spec.label.empty() || !labels.insert(spec.label).second) {
                config_error(source, "sde_scopes", "scope labels must be non-empty and unique");
            }
            const auto filter = s.at("filter").get<std::string>();
            if (filter != "all") {
                spec.filter = parse_macro_region(filter);
                if (!spec.filter) config_error(source, "sde_scopes", "unknown filter '" + filter + "'");
            }
            cfg.sde_scopes.push_back(std::move(spec));
        }
    } else {
        cfg.sde_scopes = default_scopes();
    }

    if (doc.contains("sde_years")) {
        const auto& years = doc.at("sde_years");
        if (!years.is_array()) config_error(source, "sde_years", "expected an array of years");
        for (const auto& y : years) {
            if (!y.is_number_integer()) config_error(source, "sde_years", "years must be integers");
            cfg.sde_years.push_back(y.get<int>());
        }
        std::sort(cfg.sde_years.begin(), cfg.sde_years.end());
        if (std::adjacent_find(cfg.sde_years.begin(), cfg.sde_years.end()) != cfg.sde_years.end()) {
            config_error(source, "sde_years", "duplicate year");
        }
    }
    if (doc.contains("threads")) {
        cfg.threads = get_unsigned(doc, "threads", source);
        if (cfg.threads == 0) config_error(source, "threads", "must be at least 1");
    }
    if (doc.contains("geojson")) {
        if (!doc.at("geojson").is_boolean()) config_error(source, "geojson", "expected true or false");
        cfg.geojson = doc.at("geojson").get<bool>();
    }
    return cfg;
}

RunConfig load_config(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open config file", path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ConfigError, e.what(), path.string() + ":byte " + std::to_string(e.byte));
    }
    return parse_config(doc, path.parent_path(), path.string());
}

json config_to_json(const RunConfig& cfg) {
    json scopes = json::array();
    for (const auto& s : cfg.sde_scopes) {
        scopes.push_back({{"label", s.label}, {"filter", s.filter ? std::string(to_string(*s.filter)) : "all"}});
    }
    return {
        {"indicators", cfg.indicators.generic_string()},
        {"regions", cfg.regions.generic_string()},
        {"values", cfg.values.generic_string()},
        {"output_dir", cfg.output_dir.generic_string()},
        {"alpha", cfg.coupling.alpha},
        {"beta", cfg.coupling.beta},
        {"d_variant", to_string(cfg.coupling.d_variant)},
        {"weights_scheme", to_string(cfg.weights_scheme)},
        {"inference", to_string(cfg.inference)},
        {"permutations", cfg.permutations},
        {"moran_tail", to_string(cfg.moran_tail)},
        {"seed", cfg.seed.value_or(0)},
        {"lisa_alpha", cfg.lisa_alpha},
        {"lisa_permutations", cfg.lisa_permutations},
        {"sde_scopes", scopes},
        {"sde_years", cfg.sde_years},
        {"threads", cfg.threads},
        {"geojson", cfg.geojson},
    };
}

std::uint64_t moran_seed(std::uint64_t base, int year) {
    return rng::derive_seed(rng::derive_seed(base, static_cast<std::uint64_t>(year)), 0);
}

std::uint64_t lisa_seed(std::uint64_t base, int year) {
    return rng::derive_seed(rng::derive_seed(base, static_cast<std::uint64_t>(year)), 1);
}

PipelineResult compute_pipeline(const PanelDataset& ds, const RunConfig& cfg) {
    if (!cfg.seed) throw Error(ErrorCode::ConfigError, "a seed is required for permutation inference", "seed");
    for (int year : cfg.sde_years) {
        if (!ds.year_index(year)) {
            throw Error(ErrorCode::ConfigError, "year " + std::to_string(year) + " is not in the panel", "sde_years");
        }
    }

    PipelineResult out;
    out.index = compute_index_series(ds);
    out.coupling = compute_coupling(out.index.series, cfg.coupling);
    out.year_stats = year_stats(out.coupling);
    out.regions = region_aggregate(out.coupling, ds.regions());
    out.weights = build_weights(ds.regions(), cfg.weights_scheme);

    const std::size_t v = ds.year_count();
    const std::size_t m = ds.region_count();
    auto d_of_year = [&](std::size_t t) {
        std::vector<double> d(m);
        for (std::size_t i = 0; i < m; ++i) d[i] = out.coupling[t * m + i].d;
        return d;
    };

    out.moran.resize(v);
    out.lisa.resize(v);
    parallel_for(v, cfg.threads, [&](std::size_t t) {
        const int year = ds.years()[t];
        const auto d = d_of_year(t);
        MoranOptions mo;
        mo.method = cfg.inference;
        mo.permutations = cfg.permutations;
        mo.seed = moran_seed(*cfg.seed, year);
        mo.tail = cfg.moran_tail;
        out.moran[t] = {year, morans_inference(d, out.weights, mo)};

        LisaOptions lo;
        lo.permutations = cfg.lisa_permutations;
        lo.seed = lisa_seed(*cfg.seed, year);
        lo.alpha = cfg.lisa_alpha;
        out.lisa[t] = {year, lisa_classify(d, out.weights, lo)};
    });

    const std::vector<int> sde_years = cfg.sde_years.empty() ? ds.years() : cfg.sde_years;
    const std::size_t scopes = cfg.sde_scopes.size();
    out.ellipses.resize(scopes * sde_years.size());
    parallel_for(out.ellipses.size(), cfg.threads, [&](std::size_t k) {
        const auto& scope = cfg.sde_scopes[k / sde_years.size()];
        const int year = sde_years[k % sde_years.size()];
        const auto d = d_of_year(*ds.year_index(year));
        std::vector<geo::LonLat> positions;
        std::vector<double> weights;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& r = ds.regions()[i];
            if (scope.filter && r.macro_region != *scope.filter) continue;
            positions.push_back({r.centroid_lon, r.centroid_lat});
            weights.push_back(d[i]);
        }
        if (positions.empty()) {
            throw Error(ErrorCode::EmptyRegion, "scope has no member regions", "scope " + scope.label);
        }
        out.ellipses[k] = {scope.label, year, geo::sde_lonlat(positions, weights)};
    });

    if (sde_years.size() >= 2) {
        for (std::size_t s = 0; s < scopes; ++s) {
            std::vector<geo::YearCenter> centers;
            for (std::size_t y = 0; y < sde_years.size(); ++y) {
                const auto& e = out.ellipses[s * sde_years.size() + y];
                centers.push_back({e.year, {e.ellipse.center_lon, e.ellipse.center_lat}});
            }
            for (auto& seg : geo::centroid_drift(centers)) out.drift.push_back({cfg.sde_scopes[s].label, seg});
        }
    }
    return out;
}

namespace {

class CsvFile {
public:
    CsvFile(const fs::path& path, std::vector<std::string> header) : path_(path), out_(path, std::ios::binary) {
        if (!out_) throw Error(ErrorCode::IoError, "cannot write file", path.string());
        csv::write_row(out_, header);
    }

    void row(const std::vector<std::string>& fields) {
        csv::write_row(out_, fields);
        ++rows_;
    }

    std::size_t finish() {
        out_.flush();
        if (!out_) throw Error(ErrorCode::IoError, "write failed", path_.string());
        return rows_;
    }

private:
    fs::path path_;
    std::ofstream out_;
    std::size_t rows_ = 0;
};

std::string num(double v) { return csv::format_double(v); }

}  // namespace

std::map<std::string, std::size_t> write_reports(const PipelineResult& r, const PanelDataset& ds,
                                                 const RunConfig& cfg, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create output directory: " + ec.message(), dir.string());

    std::map<std::string, std::size_t> counts;
    const auto& series = r.index.series;
    {
        CsvFile f(dir / "index_series.csv", {"year", "region", "f", "g"});
        for (std::size_t t = 0; t < series.years.size(); ++t) {
            for (std::size_t i = 0; i < series.regions.size(); ++i) {
                f.row({std::to_string(series.years[t]), series.regions[i], num(series.f_at(t, i)),
                       num(series.g_at(t, i))});
            }
        }
        counts["index_series.csv"] = f.finish();
    }
    {
        CsvFile f(dir / "index_means.csv", {"year", "mean_f", "mean_g"});
        for (std::size_t t = 0; t < series.years.size(); ++t) {
            f.row({std::to_string(series.years[t]), num(series.mean_f[t]), num(series.mean_g[t])});
        }
        counts["index_means.csv"] = f.finish();
    }
    {
        CsvFile f(dir / "weights.csv", {"subsystem", "indicator", "entropy", "divergence", "weight"});
        for (const auto* w : {&r.index.weights_x, &r.index.weights_y}) {
            for (const auto& item : w->items) {
                f.row({std::string(to_string(w->subsystem)), item.indicator, num(item.entropy), num(item.divergence),
                       num(item.weight)});
            }
        }
        counts["weights.csv"] = f.finish();
    }
    {
        CsvFile f(dir / "coupling.csv", {"year", "region", "f", "g", "C", "T", "D", "stage"});
        for (const auto& c : r.coupling) {
            f.row({std::to_string(c.year), c.region, num(c.f), num(c.g), num(c.c), num(c.t), num(c.d),
                   std::string(to_string(c.stage))});
        }
        counts["coupling.csv"] = f.finish();
    }
    {
        CsvFile f(dir / "year_stats.csv", {"year", "mean", "std", "cv"});
        for (const auto& s : r.year_stats) {
            f.row({std::to_string(s.year), num(s.mean), num(s.std), s.cv ? num(*s.cv) : std::string()});
        }
        counts["year_stats.csv"] = f.finish();
    }
    {
        CsvFile f(dir / "region_means.csv", {"macro_region", "year", "mean_D"});
        for (const auto& y : r.regions.yearly) {
            f.row({std::string(to_string(y.macro_region)), std::to_string(y.year), num(y.mean_d)});
        }
        for (const auto& [macro, mean] : r.regions.overall) {
            f.row({std::string(to_string(macro)), "all", num(mean)});
        }
        counts["region_means.csv"] = f.finish();
    }
    {
        CsvFile f(dir / "moran.csv", {"year", "I", "expected", "z", "p", "method", "permutations", "seed"});
        for (const auto& [year, m] : r.moran) {
            f.row({std::to_string(year), num(m.i_value), num(m.expected), num(m.z), num(m.p),
                   std::string(to_string(m.method)), std::to_string(m.permutations), std::to_string(m.seed)});
        }
        counts["moran.csv"] = f.finish();
    }
    {
        CsvFile f(dir / "lisa.csv", {"year", "region", "local_i", "p", "cluster"});
        for (const auto& [year, l] : r.lisa) {
            for (const auto& reg : l.regions) {
                f.row({std::to_string(year), reg.region, num(reg.local_i), num(reg.p),
                       std::string(to_string(reg.cluster))});
            }
        }
        counts["lisa.csv"] = f.finish();
    }
    {
        CsvFile f(dir / "sde.csv", {"scope", "year", "center_lon", "center_lat", "sigma_x_km", "sigma_y_km",
                                    "azimuth_deg", "area_1e4_km2"});
        for (const auto& e : r.ellipses) {
            const auto& p = e.ellipse;
            f.row({e.scope, std::to_string(e.year), num(p.center_lon), num(p.center_lat), num(p.sigma_x_km),
                   num(p.sigma_y_km), num(p.azimuth_deg), num(p.area_1e4_km2)});
        }
        counts["sde.csv"] = f.finish();
    }
    {
        CsvFile f(dir / "drift.csv",
                  {"scope", "from_year", "to_year", "distance_km", "bearing_deg", "speed_km_per_year", "octant"});
        for (const auto& [scope, s] : r.drift) {
            f.row({scope, std::to_string(s.from_year), std::to_string(s.to_year), num(s.distance_km),
                   num(s.bearing_deg), num(s.speed_km_per_year), s.octant});
        }
        counts["drift.csv"] = f.finish();
    }
    if (cfg.geojson) {
        const auto doc = emit_geojson(r.ellipses, r.lisa, ds.regions());
        std::ofstream out(dir / "report.geojson", std::ios::binary);
        if (!out) throw Error(ErrorCode::IoError, "cannot write file", (dir / "report.geojson").string());
        out << doc.dump(1) << '\n';
        if (!out) throw Error(ErrorCode::IoError, "write failed", (dir / "report.geojson").string());
        counts["report.geojson"] = doc.at("features").size();
    }
    return counts;
}

json emit_geojson(const std::vector<ScopeEllipse>& ellipses, const std::vector<YearLisa>& lisa,
                  std::span<const RegionSpec> regions, int segments) {
    if (ellipses.empty() && lisa.empty()) throw Error(ErrorCode::EmptyInput, "no ellipses or LISA results to emit");
    json features = json::array();
    for (const auto& e : ellipses) {
        json ring = json::array();
        for (const auto& p : geo::ellipse_ring(e.ellipse, segments)) ring.push_back({p.lon, p.lat});
        const auto& p = e.ellipse;
        features.push_back({{"type", "Feature"},
                            {"geometry", {{"type", "Polygon"}, {"coordinates", json::array({ring})}}},
                            {"properties",
                             {{"kind", "ellipse"},
                              {"scope", e.scope},
                              {"year", e.year},
                              {"sigma_x_km", p.sigma_x_km},
                              {"sigma_y_km", p.sigma_y_km},
                              {"azimuth_deg", p.azimuth_deg},
                              {"area_1e4_km2", p.area_1e4_km2}}}});
        features.push_back({{"type", "Feature"},
                            {"geometry", {{"type", "Point"}, {"coordinates", {p.center_lon, p.center_lat}}}},
                            {"properties", {{"kind", "center"}, {"scope", e.scope}, {"year", e.year}}}});
    }
    for (const auto& [year, result] : lisa) {
        for (const auto& reg : result.regions) {
            auto it = std::find_if(regions.begin(), regions.end(), [&](const auto& r) { return r.id == reg.region; });
            if (it == regions.end()) throw Error(ErrorCode::UnknownRegionId, "LISA region not in region list", reg.region);
            features.push_back(
                {{"type", "Feature"},
                 {"geometry", {{"type", "Point"}, {"coordinates", {it->centroid_lon, it->centroid_lat}}}},
                 {"properties",
                  {{"kind", "lisa"},
                   {"year", year},
                   {"region", reg.region},
                   {"cluster", to_string(reg.cluster)},
                   {"local_i", reg.local_i},
                   {"p", reg.p}}}});
        }
    }
    return {{"type", "FeatureCollection"}, {"features", features}};
}

json RunManifest::to_json() const {
    json inputs_json = json::array();
    for (const auto& in : inputs) inputs_json.push_back({{"role", in.role}, {"path", in.path}, {"sha256", in.sha256}});
    json warnings_json = json::array();
    for (const auto& w : warnings) {
        warnings_json.push_back({{"code", w.code}, {"location", w.location}, {"message", w.message}});
    }
    return {{"tool", kToolName},      {"version", tool_version}, {"timestamp", timestamp},
            {"generator", generator}, {"config", config},        {"inputs", inputs_json},
            {"row_counts", row_counts}, {"warnings", warnings_json}};
}

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open file for hashing", path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::IoError, "cannot initialise SHA-256", path.string());
    }
    char buf[1 << 15];
    while (in) {
        in.read(buf, sizeof(buf));
        if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

std::string run_timestamp() {
    std::time_t t = 0;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
        auto parsed = csv::parse_int(epoch);
        t = parsed ? static_cast<std::time_t>(*parsed) : 0;
    } else {
        t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunManifest run_pipeline(const RunConfig& cfg) {
    if (cfg.output_dir.empty()) throw Error(ErrorCode::ConfigError, "no output directory configured", "output_dir");
    auto ds = load_panel(cfg.indicators, cfg.regions, cfg.values);
    auto report = validate(ds);
    if (!report.accepted()) {
        std::ostringstream msg;
        msg << report.errors.size() << " validation error(s)";
        for (const auto& e : report.errors) msg << "\n  " << e.code << " [" << e.location << "] " << e.message;
        throw Error(ErrorCode::ValidationFailed, msg.str(), cfg.regions.string());
    }

    RunManifest manifest;
    manifest.config = config_to_json(cfg);
    manifest.tool_version = kToolVersion;
    manifest.timestamp = run_timestamp();
    manifest.generator = rng::kGeneratorFamily;
    manifest.warnings = report.warnings;
    manifest.inputs = {{"indicators", cfg.indicators.generic_string(), sha256_file(cfg.indicators)},
                       {"regions", cfg.regions.generic_string(), sha256_file(cfg.regions)},
                       {"values", cfg.values.generic_string(), sha256_file(cfg.values)}};

    const auto result = compute_pipeline(ds, cfg);
    manifest.row_counts = write_reports(result, ds, cfg, cfg.output_dir);
    for (const auto& island : result.weights.islands) {
        manifest.warnings.push_back({"IslandWarning", "region " + island, "region has no neighbors; zero weight row"});
    }

    const auto path = cfg.output_dir / "manifest.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write file", path.string());
    out << manifest.to_json().dump(2) << '\n';
    if (!out) throw Error(ErrorCode::IoError, "write failed", path.string());
    return manifest;
}

}  // namespace ccd
