#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccd/entropy.hpp"
#include "ccd/panel.hpp"

namespace ccd {

enum class DVariant {
    Literal,  // D = C * T
    Sqrt,     // D = sqrt(C * T)
};

enum class Stage {
    SeriousMaladjustment,
    ModerateDisorder,
    BasicCoordination,
    ModerateCoordination,
    HighCoordination,
};

std::string_view to_string(DVariant v) noexcept;
std::string_view to_string(Stage s) noexcept;

struct CouplingConfig {
    double alpha = 0.5;
    double beta = 0.5;
    DVariant d_variant = DVariant::Literal;

    /// Throws Error{InvalidConfig} unless alpha, beta >= 0 and alpha + beta = 1.
    void check() const;
};

struct CouplingRecord {
    int year = 0;
    std::string region;
    double f = 0.0;
    double g = 0.0;
    double c = 0.0;
    double t = 0.0;
    double d = 0.0;
    Stage stage = Stage::SeriousMaladjustment;
};

struct YearStats {
    int year = 0;
    double mean = 0.0;
    double std = 0.0;           // population standard deviation
    std::optional<double> cv;   // empty when mean == 0
};

struct RegionYearMean {
    MacroRegion macro_region = MacroRegion::East;
    int year = 0;
    double mean_d = 0.0;
};

struct RegionAggregate {
    std::vector<RegionYearMean> yearly;                          // macro-region major, then year
    std::vector<std::pair<MacroRegion, double>> overall;         // mean of the yearly means
};

/// C = 2 sqrt(f g / (f + g)^2); f = g = 0 is reported as uncoupled (C = 0).
double coupling_degree(double f, double g);

/// T = alpha f + beta g.
double comprehensive_index(double f, double g, const CouplingConfig& cfg);

double coordination_degree(double c, double t, const CouplingConfig& cfg);

/// Right-closed stage intervals: [0,.2], (.2,.4], (.4,.5], (.5,.8], (.8,1].
Stage classify(double d);

CouplingRecord couple(int year, std::string region, double f, double g, const CouplingConfig& cfg);

/// One record per (year, region) in series order.
std::vector<CouplingRecord> compute_coupling(const IndexSeries& series, const CouplingConfig& cfg);

YearStats descriptive_stats(std::span<const double> values, int year = 0);

/// Per-year statistics of D across regions, in year order.
std::vector<YearStats> year_stats(const std::vector<CouplingRecord>& records);

/// Unweighted mean D per macro-region and year, plus the cross-year mean.
/// Macro-regions without member regions are omitted.
RegionAggregate region_aggregate(const std::vector<CouplingRecord>& records, std::span<const RegionSpec> regions);

}  // namespace ccd
