#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ccd/panel.hpp"

namespace ccd {

/// Dense year x region x column array, row-major in that order.
class Cube {
public:
    Cube() = default;
    Cube(std::size_t years, std::size_t regions, std::size_t columns, double fill = 0.0)
        : years_(years), regions_(regions), columns_(columns), data_(years * regions * columns, fill) {}

    double& operator()(std::size_t t, std::size_t i, std::size_t j) { return data_[index(t, i, j)]; }
    double operator()(std::size_t t, std::size_t i, std::size_t j) const { return data_[index(t, i, j)]; }

    std::size_t years() const noexcept { return years_; }
    std::size_t regions() const noexcept { return regions_; }
    std::size_t columns() const noexcept { return columns_; }
    std::span<const double> data() const noexcept { return data_; }

private:
    std::size_t index(std::size_t t, std::size_t i, std::size_t j) const { return (t * regions_ + i) * columns_ + j; }

    std::size_t years_ = 0, regions_ = 0, columns_ = 0;
    std::vector<double> data_;
};

struct NormalizationBounds {
    std::vector<double> x_min;
    std::vector<double> x_max;
};

/// Min-max normalized values of one subsystem; column k is indicator `indicators[k]` of the dataset.
struct NormalizedPanel {
    Subsystem subsystem = Subsystem::X;
    std::vector<std::size_t> indicators;
    Cube z;
    NormalizationBounds bounds;
};

struct IndicatorWeight {
    std::string indicator;
    double proportion_sum = 0.0;  // column sum of the proportions, 1 up to rounding
    double entropy = 0.0;
    double divergence = 0.0;
    double weight = 0.0;
};

struct EntropyWeights {
    Subsystem subsystem = Subsystem::X;
    std::vector<IndicatorWeight> items;

    std::vector<double> weights() const;
};

/// Composite levels f (subsystem X) and g (subsystem Y) per (year, region).
struct IndexSeries {
    std::vector<int> years;
    std::vector<std::string> regions;
    std::vector<double> f;  // [year * regions + region]
    std::vector<double> g;
    std::vector<double> mean_f;  // unweighted mean over regions, per year
    std::vector<double> mean_g;

    double f_at(std::size_t t, std::size_t i) const { return f[t * regions.size() + i]; }
    double g_at(std::size_t t, std::size_t i) const { return g[t * regions.size() + i]; }
};

struct IndexResult {
    IndexSeries series;
    EntropyWeights weights_x;
    EntropyWeights weights_y;
};

/// Pooled min-max normalization over every (year, region) cell of each indicator.
/// Constant columns map to 1.
NormalizedPanel normalize(const PanelDataset& ds, Subsystem subsystem);

/// S[t][i][j] = z[t][i][j] / sum over (t, i) of z[.][.][j].
Cube proportions(const NormalizedPanel& np);

/// Information entropy per column with 0 ln 0 = 0, normalized by ln(v * m).
std::vector<double> entropy(const Cube& s, std::size_t year_count, std::size_t region_count);

/// Divergence-proportional weights; `ids` labels the entries and may be empty.
EntropyWeights weights(std::span<const double> entropies, std::span<const std::string> ids = {},
                       Subsystem subsystem = Subsystem::X);

/// level[t * m + i] = sum_j W_j z[t][i][j].
std::vector<double> composite_index(const NormalizedPanel& np, const EntropyWeights& w);

/// Entropy weights and composite index for one subsystem.
EntropyWeights subsystem_weights(const PanelDataset& ds, Subsystem subsystem);

IndexResult compute_index_series(const PanelDataset& ds);

}  // namespace ccd
