#include "ccd/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "ccd/error.hpp"

namespace ccd {

std::string_view to_string(DVariant v) noexcept { return v == DVariant::Literal ? "literal" : "sqrt"; }

std::string_view to_string(Stage s) noexcept {
    switch (s) {
        case Stage::SeriousMaladjustment: return "SeriousMaladjustment";
        case Stage::ModerateDisorder: return "ModerateDisorder";
        case Stage::BasicCoordination: return "BasicCoordination";
        case Stage::ModerateCoordination: return "ModerateCoordination";
        case Stage::HighCoordination: return "HighCoordination";
    }
    return "";
}

void CouplingConfig::check() const {
    if (!(alpha >= 0.0) || !(beta >= 0.0) || std::abs(alpha + beta - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidConfig, "alpha and beta must be non-negative and sum to 1");
    }
}

double coupling_degree(double f, double g) {
    const double sum = f + g;
    if (!(sum > 0.0)) return 0.0;
    const double c = 2.0 * std::sqrt(f * g / (sum * sum));
    return std::clamp(c, 0.0, 1.0);
}

double comprehensive_index(double f, double g, const CouplingConfig& cfg) { return cfg.alpha * f + cfg.beta * g; }

double coordination_degree(double c, double t, const CouplingConfig& cfg) {
    const double ct = c * t;
    return cfg.d_variant == DVariant::Literal ? ct : std::sqrt(std::max(ct, 0.0));
}

Stage classify(double d) {
    if (!(d >= 0.0 && d <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "coordination degree " + std::to_string(d) + " outside [0,1]");
    }
    if (d <= 0.2) return Stage::SeriousMaladjustment;
    if (d <= 0.4) return Stage::ModerateDisorder;
    if (d <= 0.5) return Stage::BasicCoordination;
    if (d <= 0.8) return Stage::ModerateCoordination;
    return Stage::HighCoordination;
}

CouplingRecord couple(int year, std::string region, double f, double g, const CouplingConfig& cfg) {
    CouplingRecord r;
    r.year = year;
    r.region = std::move(region);
    r.f = f;
    r.g = g;
    r.c = coupling_degree(f, g);
    r.t = comprehensive_index(f, g, cfg);
    r.d = coordination_degree(r.c, r.t, cfg);
    r.stage = classify(r.d);
    return r;
}

std::vector<CouplingRecord> compute_coupling(const IndexSeries& series, const CouplingConfig& cfg) {
    cfg.check();
    std::vector<CouplingRecord> out;
    out.reserve(series.f.size());
    for (std::size_t t = 0; t < series.years.size(); ++t) {
        for (std::size_t i = 0; i < series.regions.size(); ++i) {
            out.push_back(couple(series.years[t], series.regions[i], series.f_at(t, i), series.g_at(t, i), cfg));
        }
    }
    return out;
}

YearStats descriptive_stats(std::span<const double> values, int year) {
    if (values.empty()) throw Error(ErrorCode::EmptyInput, "no values for descriptive statistics");
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);

    YearStats s;
    s.year = year;
    s.mean = mean;
    s.std = std::sqrt(ss / n);
    if (mean != 0.0) s.cv = s.std / std::abs(mean);
    return s;
}

std::vector<YearStats> year_stats(const std::vector<CouplingRecord>& records) {
    std::map<int, std::vector<double>> by_year;
    for (const auto& r : records) by_year[r.year].push_back(r.d);
    std::vector<YearStats> out;
    for (const auto& [year, values] : by_year) out.push_back(descriptive_stats(values, year));
    return out;
}

RegionAggregate region_aggregate(const std::vector<CouplingRecord>& records, std::span<const RegionSpec> regions) {
    if (records.empty()) throw Error(ErrorCode::EmptyInput, "no coupling records to aggregate");
    std::unordered_map<std::string, MacroRegion> macro_of;
    std::map<MacroRegion, std::size_t> members;
    for (const auto& r : regions) {
        macro_of.emplace(r.id, r.macro_region);
        ++members[r.macro_region];
    }

    std::map<std::pair<MacroRegion, int>, std::pair<double, std::size_t>> acc;
    std::map<int, bool> years;
    for (const auto& rec : records) {
        auto it = macro_of.find(rec.region);
        if (it == macro_of.end()) {
            throw Error(ErrorCode::UnknownRegionId, "record region has no macro-region", rec.region);
        }
        auto& cell = acc[{it->second, rec.year}];
        cell.first += rec.d;
        ++cell.second;
        years[rec.year] = true;
    }

    RegionAggregate out;
    for (const auto& [macro, count] : members) {
        double total = 0.0;
        for (const auto& [year, unused] : years) {
            auto it = acc.find({macro, year});
            if (it == acc.end()) {
                throw Error(ErrorCode::EmptyRegion, "no records for macro-region in year " + std::to_string(year),
                            std::string(to_string(macro)));
            }
            const double mean = it->second.first / static_cast<double>(it->second.second);
            out.yearly.push_back({macro, year, mean});
            total += mean;
        }
        out.overall.emplace_back(macro, total / static_cast<double>(years.size()));
    }
    return out;
}

}  // namespace ccd
