#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccd/panel.hpp"

namespace ccd {

enum class WeightScheme { BinaryContiguity, RowStandardized };
enum class InferenceMethod { NormalApprox, Permutation };
enum class Tail { Upper, TwoSided };
enum class Cluster { NotSignificant, HH, HL, LH, LL };

std::string_view to_string(WeightScheme s) noexcept;
std::string_view to_string(InferenceMethod m) noexcept;
std::string_view to_string(Tail t) noexcept;
std::string_view to_string(Cluster c) noexcept;  // "HH", "HL", "LH", "LL", "NS"

/// Dense m x m weight matrix over regions in `order`; zero diagonal.
struct SpatialWeights {
    std::vector<std::string> order;
    std::vector<double> w;  // row-major
    WeightScheme scheme = WeightScheme::RowStandardized;
    std::vector<std::string> islands;  // regions with no neighbors (zero rows)

    std::size_t size() const noexcept { return order.size(); }
    double at(std::size_t i, std::size_t j) const { return w[i * order.size() + j]; }
    double total() const;
};

/// Contiguity weights from the regions' neighbor lists. Neighbor ids that are
/// not in `regions` are ignored; run validate() first to reject them.
SpatialWeights build_weights(std::span<const RegionSpec> regions, WeightScheme scheme);

/// Global Moran's I for any non-negative W.
double morans_i(std::span<const double> x, const SpatialWeights& w);

struct MoranOptions {
    InferenceMethod method = InferenceMethod::Permutation;
    std::size_t permutations = 999;
    std::uint64_t seed = 0;
    Tail tail = Tail::Upper;
};

struct MoranResult {
    double i_value = 0.0;
    double expected = 0.0;  // -1 / (m - 1)
    double z = 0.0;
    double p = 1.0;
    InferenceMethod method = InferenceMethod::Permutation;
    std::size_t permutations = 0;
    std::uint64_t seed = 0;
};

/// NormalApprox uses the randomization variance of I; Permutation shuffles x
/// with a generator seeded from `seed` and takes z from the permutation moments.
MoranResult morans_inference(std::span<const double> x, const SpatialWeights& w, const MoranOptions& options);

/// Local Moran's I_i = n z_i sum_j w_ij z_j / sum_j z_j^2 with z = x - mean(x).
std::vector<double> lisa(std::span<const double> x, const SpatialWeights& w);

struct LisaOptions {
    std::size_t permutations = 999;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    std::size_t threads = 1;
};

struct LisaRegion {
    std::string region;
    double local_i = 0.0;
    double p = 1.0;
    Cluster cluster = Cluster::NotSignificant;
};

struct LisaResult {
    std::vector<LisaRegion> regions;
    std::size_t permutations = 0;
    std::uint64_t seed = 0;
    double alpha = 0.05;
};

/// Conditional permutation inference per region (x_i held, the other values
/// drawn for its neighbors) and HH/HL/LH/LL labels for regions with p <= alpha.
/// Each region uses its own derived stream, so results do not depend on `threads`.
LisaResult lisa_classify(std::span<const double> x, const SpatialWeights& w, const LisaOptions& options);

}  // namespace ccd
