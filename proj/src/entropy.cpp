#include "ccd/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "ccd/error.hpp"

namespace ccd {

std::vector<double> EntropyWeights::weights() const {
    std::vector<double> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(item.weight);
    return out;
}

NormalizedPanel normalize(const PanelDataset& ds, Subsystem subsystem) {
    NormalizedPanel np;
    np.subsystem = subsystem;
    np.indicators = ds.subsystem_indicators(subsystem);
    if (np.indicators.empty()) {
        throw Error(ErrorCode::EmptySubsystem, "subsystem has no indicators",
                    "subsystem " + std::string(to_string(subsystem)));
    }
    const std::size_t v = ds.year_count(), m = ds.region_count(), n = np.indicators.size();
    np.z = Cube(v, m, n);
    np.bounds.x_min.assign(n, 0.0);
    np.bounds.x_max.assign(n, 0.0);

    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = np.indicators[k];
        double lo = ds.value(0, 0, j), hi = lo;
        for (std::size_t t = 0; t < v; ++t) {
            for (std::size_t i = 0; i < m; ++i) {
                lo = std::min(lo, ds.value(t, i, j));
                hi = std::max(hi, ds.value(t, i, j));
            }
        }
        np.bounds.x_min[k] = lo;
        np.bounds.x_max[k] = hi;
        const double range = hi - lo;
        const bool positive = ds.indicators()[j].direction == Direction::Positive;
        for (std::size_t t = 0; t < v; ++t) {
            for (std::size_t i = 0; i < m; ++i) {
                const double x = ds.value(t, i, j);
                double z = 1.0;
                if (range > 0.0) z = positive ? (x - lo) / range : (hi - x) / range;
                np.z(t, i, k) = std::clamp(z, 0.0, 1.0);
            }
        }
    }
    return np;
}

Cube proportions(const NormalizedPanel& np) {
    const auto& z = np.z;
    Cube s(z.years(), z.regions(), z.columns());
    for (std::size_t j = 0; j < z.columns(); ++j) {
        double total = 0.0;
        for (std::size_t t = 0; t < z.years(); ++t) {
            for (std::size_t i = 0; i < z.regions(); ++i) total += z(t, i, j);
        }
        if (!(total > 0.0)) throw Error(ErrorCode::ZeroColumn, "normalized column sums to zero", "column " + std::to_string(j));
        for (std::size_t t = 0; t < z.years(); ++t) {
            for (std::size_t i = 0; i < z.regions(); ++i) s(t, i, j) = z(t, i, j) / total;
        }
    }
    return s;
}

std::vector<double> entropy(const Cube& s, std::size_t year_count, std::size_t region_count) {
    const std::size_t cells = year_count * region_count;
    if (cells != s.years() * s.regions()) {
        throw Error(ErrorCode::DimensionMismatch, "year/region counts do not match the proportion array");
    }
    if (cells <= 1) throw Error(ErrorCode::DegenerateLog, "ln(v*m) is zero for a single cell");
    const double scale = 1.0 / std::log(static_cast<double>(cells));

    std::vector<double> e(s.columns(), 0.0);
    for (std::size_t j = 0; j < s.columns(); ++j) {
        double acc = 0.0;
        bool uniform = true;
        const double first = s(0, 0, j);
        for (std::size_t t = 0; t < s.years(); ++t) {
            for (std::size_t i = 0; i < s.regions(); ++i) {
                const double p = s(t, i, j);
                uniform = uniform && p == first;
                if (p > 0.0) acc += p * std::log(p);
            }
        }
        // an exactly uniform column carries no information; avoid a rounding residue in 1 - E
        e[j] = uniform ? 1.0 : std::clamp(-scale * acc, 0.0, 1.0);
    }
    return e;
}

EntropyWeights weights(std::span<const double> entropies, std::span<const std::string> ids, Subsystem subsystem) {
    if (!ids.empty() && ids.size() != entropies.size()) {
        throw Error(ErrorCode::DimensionMismatch, "indicator ids and entropies differ in length");
    }
    EntropyWeights out;
    out.subsystem = subsystem;
    double total = 0.0;
    for (std::size_t j = 0; j < entropies.size(); ++j) {
        const double e = entropies[j];
        if (!(e >= 0.0 && e <= 1.0)) {
            throw Error(ErrorCode::OutOfRange, "entropy outside [0,1]", "column " + std::to_string(j));
        }
        IndicatorWeight item;
        item.indicator = ids.empty() ? std::to_string(j) : ids[j];
        item.entropy = e;
        item.divergence = 1.0 - e;
        total += item.divergence;
        out.items.push_back(std::move(item));
    }
    if (!(total > 0.0)) {
        throw Error(ErrorCode::AllColumnsUninformative, "every indicator has zero divergence",
                    "subsystem " + std::string(to_string(subsystem)));
    }
    for (auto& item : out.items) item.weight = item.divergence / total;
    return out;
}

std::vector<double> composite_index(const NormalizedPanel& np, const EntropyWeights& w) {
    const auto& z = np.z;
    if (w.items.size() != z.columns()) {
        throw Error(ErrorCode::DimensionMismatch, "weight vector length " + std::to_string(w.items.size()) +
                                                      " != indicator count " + std::to_string(z.columns()));
    }
    std::vector<double> level(z.years() * z.regions(), 0.0);
    for (std::size_t t = 0; t < z.years(); ++t) {
        for (std::size_t i = 0; i < z.regions(); ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < z.columns(); ++j) acc += w.items[j].weight * z(t, i, j);
            level[t * z.regions() + i] = std::clamp(acc, 0.0, 1.0);
        }
    }
    return level;
}

namespace {

struct SubsystemResult {
    EntropyWeights weights;
    std::vector<double> level;
};

SubsystemResult evaluate_subsystem(const PanelDataset& ds, Subsystem subsystem) {
    auto np = normalize(ds, subsystem);
    auto s = proportions(np);
    auto e = entropy(s, ds.year_count(), ds.region_count());

    std::vector<std::string> ids;
    for (auto j : np.indicators) ids.push_back(ds.indicators()[j].id);
    auto w = weights(e, ids, subsystem);
    for (std::size_t k = 0; k < w.items.size(); ++k) {
        double sum = 0.0;
        for (std::size_t t = 0; t < s.years(); ++t) {
            for (std::size_t i = 0; i < s.regions(); ++i) sum += s(t, i, k);
        }
        w.items[k].proportion_sum = sum;
    }
    auto level = composite_index(np, w);
    return {std::move(w), std::move(level)};
}

std::vector<double> yearly_means(const std::vector<double>& level, std::size_t v, std::size_t m) {
    std::vector<double> out(v, 0.0);
    for (std::size_t t = 0; t < v; ++t) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) acc += level[t * m + i];
        out[t] = m ? acc / static_cast<double>(m) : 0.0;
    }
    return out;
}

}  // namespace

EntropyWeights subsystem_weights(const PanelDataset& ds, Subsystem subsystem) {
    return evaluate_subsystem(ds, subsystem).weights;
}

IndexResult compute_index_series(const PanelDataset& ds) {
    auto x = evaluate_subsystem(ds, Subsystem::X);
    auto y = evaluate_subsystem(ds, Subsystem::Y);

    IndexResult out;
    auto& series = out.series;
    series.years = ds.years();
    for (const auto& r : ds.regions()) series.regions.push_back(r.id);
    series.mean_f = yearly_means(x.level, ds.year_count(), ds.region_count());
    series.mean_g = yearly_means(y.level, ds.year_count(), ds.region_count());
    series.f = std::move(x.level);
    series.g = std::move(y.level);
    out.weights_x = std::move(x.weights);
    out.weights_y = std::move(y.weights);
    return out;
}

}  // namespace ccd
