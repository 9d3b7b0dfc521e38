#include "ccd/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "ccd/error.hpp"
#include "ccd/parallel.hpp"
#include "ccd/rng.hpp"

namespace ccd {

std::string_view to_string(WeightScheme s) noexcept {
    return s == WeightScheme::BinaryContiguity ? "binary" : "row_standardized";
}

std::string_view to_string(InferenceMethod m) noexcept {
    return m == InferenceMethod::NormalApprox ? "normal" : "permutation";
}

std::string_view to_string(Tail t) noexcept { return t == Tail::Upper ? "upper" : "two_sided"; }

std::string_view to_string(Cluster c) noexcept {
    switch (c) {
        case Cluster::HH: return "HH";
        case Cluster::HL: return "HL";
        case Cluster::LH: return "LH";
        case Cluster::LL: return "LL";
        case Cluster::NotSignificant: return "NS";
    }
    return "NS";
}

double SpatialWeights::total() const { return std::accumulate(w.begin(), w.end(), 0.0); }

SpatialWeights build_weights(std::span<const RegionSpec> regions, WeightScheme scheme) {
    SpatialWeights out;
    out.scheme = scheme;
    const std::size_t m = regions.size();
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i) {
        out.order.push_back(regions[i].id);
        pos.emplace(regions[i].id, i);
    }
    out.w.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& nb : regions[i].neighbors) {
            auto it = pos.find(nb);
            if (it == pos.end() || it->second == i) continue;
            out.w[i * m + it->second] = 1.0;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m; ++j) row += out.w[i * m + j];
        if (row == 0.0) {
            out.islands.push_back(regions[i].id);
        } else if (scheme == WeightScheme::RowStandardized) {
            for (std::size_t j = 0; j < m; ++j) out.w[i * m + j] /= row;
        }
    }
    return out;
}

namespace {

// Deviations from the mean; throws on size mismatch or zero variance.
std::vector<double> deviations(std::span<const double> x, const SpatialWeights& w, double& sum_sq) {
    if (x.size() != w.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(x.size()) + " values for " + std::to_string(w.size()) + " regions");
    }
    if (x.size() < 2) throw Error(ErrorCode::TooFewRegions, "at least two regions are required");
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) {
        throw Error(ErrorCode::ZeroVariance, "values are constant across regions");
    }
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    std::vector<double> z(x.size());
    sum_sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = x[i] - mean;
        sum_sq += z[i] * z[i];
    }
    if (!(sum_sq > 0.0)) throw Error(ErrorCode::ZeroVariance, "values have zero variance");
    return z;
}

double cross_product(std::span<const double> z, const SpatialWeights& w) {
    const std::size_t n = z.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double lag = 0.0;
        for (std::size_t j = 0; j < n; ++j) lag += w.at(i, j) * z[j];
        acc += z[i] * lag;
    }
    return acc;
}

double upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

double morans_i(std::span<const double> x, const SpatialWeights& w) {
    double sum_sq = 0.0;
    const auto z = deviations(x, w, sum_sq);
    const double s0 = w.total();
    if (!(s0 > 0.0)) throw Error(ErrorCode::EmptyWeights, "weight matrix has no nonzero entries");
    return static_cast<double>(x.size()) * cross_product(z, w) / (s0 * sum_sq);
}

MoranResult morans_inference(std::span<const double> x, const SpatialWeights& w, const MoranOptions& options) {
    MoranResult out;
    out.i_value = morans_i(x, w);
    const std::size_t n = x.size();
    const double nd = static_cast<double>(n);
    out.expected = -1.0 / (nd - 1.0);
    out.method = options.method;
    out.seed = options.seed;

    if (options.method == InferenceMethod::NormalApprox) {
        double sum_sq = 0.0;
        const auto z = deviations(x, w, sum_sq);
        double s0 = 0.0, s1 = 0.0, s2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0, col = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                s0 += w.at(i, j);
                s1 += (w.at(i, j) + w.at(j, i)) * (w.at(i, j) + w.at(j, i));
                row += w.at(i, j);
                col += w.at(j, i);
            }
            s2 += (row + col) * (row + col);
        }
        s1 *= 0.5;
        double variance = 0.0;
        if (n >= 4) {
            double m4 = 0.0;
            for (double d : z) m4 += d * d * d * d;
            const double kurtosis = nd * m4 / (sum_sq * sum_sq);
            variance = (nd * ((nd * nd - 3.0 * nd + 3.0) * s1 - nd * s2 + 3.0 * s0 * s0) -
                        kurtosis * ((nd * nd - nd) * s1 - 2.0 * nd * s2 + 6.0 * s0 * s0)) /
                           ((nd - 1.0) * (nd - 2.0) * (nd - 3.0) * s0 * s0) -
                       out.expected * out.expected;
        } else {
            // randomization moments need n >= 4; fall back to the normality variance
            variance = (nd * nd * s1 - nd * s2 + 3.0 * s0 * s0) / ((nd * nd - 1.0) * s0 * s0) -
                       out.expected * out.expected;
        }
        const double diff = out.i_value - out.expected;
        out.z = (variance > 0.0 && std::abs(diff) > 1e-12) ? diff / std::sqrt(variance) : 0.0;
        out.permutations = 0;
        out.p = options.tail == Tail::Upper ? upper_tail(out.z) : std::min(1.0, 2.0 * upper_tail(std::abs(out.z)));
        return out;
    }

    if (options.permutations == 0) throw Error(ErrorCode::InvalidConfig, "permutation inference needs permutations > 0");
    out.permutations = options.permutations;
    rng::Engine engine(rng::derive_seed(options.seed, 0));
    std::vector<double> shuffled(x.begin(), x.end());
    std::size_t at_least = 0, at_most = 0;
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t k = 0; k < options.permutations; ++k) {
        rng::shuffle(engine, std::span<double>(shuffled));
        const double value = morans_i(shuffled, w);
        if (value >= out.i_value) ++at_least;
        if (value <= out.i_value) ++at_most;
        sum += value;
        sum_sq += value * value;
    }
    const double count = static_cast<double>(options.permutations);
    const double mean = sum / count;
    const double sd = std::sqrt(std::max(0.0, sum_sq / count - mean * mean));
    out.z = sd > 0.0 ? (out.i_value - mean) / sd : 0.0;
    if (options.tail == Tail::Upper) {
        out.p = static_cast<double>(at_least + 1) / (count + 1.0);
    } else {
        out.p = std::min(1.0, 2.0 * static_cast<double>(std::min(at_least, at_most) + 1) / (count + 1.0));
    }
    return out;
}

std::vector<double> lisa(std::span<const double> x, const SpatialWeights& w) {
    double sum_sq = 0.0;
    const auto z = deviations(x, w, sum_sq);
    const std::size_t n = z.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double lag = 0.0;
        for (std::size_t j = 0; j < n; ++j) lag += w.at(i, j) * z[j];
        out[i] = static_cast<double>(n) * z[i] * lag / sum_sq;
    }
    return out;
}

LisaResult lisa_classify(std::span<const double> x, const SpatialWeights& w, const LisaOptions& options) {
    if (options.permutations == 0) throw Error(ErrorCode::InvalidConfig, "LISA inference needs permutations > 0");
    double sum_sq = 0.0;
    const auto z = deviations(x, w, sum_sq);
    const auto local = lisa(x, w);
    const std::size_t n = z.size();
    const double scale = static_cast<double>(n) / sum_sq;

    LisaResult out;
    out.permutations = options.permutations;
    out.seed = options.seed;
    out.alpha = options.alpha;
    out.regions.resize(n);

    parallel_for(n, options.threads, [&](std::size_t i) {
        auto& region = out.regions[i];
        region.region = w.order[i];
        region.local_i = local[i];

        std::vector<double> weights;
        double lag = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && w.at(i, j) != 0.0) {
                weights.push_back(w.at(i, j));
                lag += w.at(i, j) * z[j];
            }
        }
        std::vector<double> pool;
        pool.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) pool.push_back(z[j]);
        }

        rng::Engine engine(rng::derive_seed(options.seed, i + 1));
        std::size_t extreme = 0;
        for (std::size_t k = 0; k < options.permutations; ++k) {
            rng::partial_shuffle(engine, std::span<double>(pool), weights.size());
            double perm_lag = 0.0;
            for (std::size_t l = 0; l < weights.size(); ++l) perm_lag += weights[l] * pool[l];
            const double value = scale * z[i] * perm_lag;
            if (local[i] >= 0.0 ? value >= local[i] : value <= local[i]) ++extreme;
        }
        region.p = static_cast<double>(extreme + 1) / static_cast<double>(options.permutations + 1);

        if (region.p <= options.alpha && z[i] != 0.0 && lag != 0.0) {
            const bool high = z[i] > 0.0;
            const bool high_lag = lag > 0.0;
            region.cluster = high ? (high_lag ? Cluster::HH : Cluster::HL) : (high_lag ? Cluster::LH : Cluster::LL);
        }
    });
    return out;
}

}  // namespace ccd
