#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>

#include "ccd/error.hpp"
#include "ccd/spatial.hpp"
#include "support.hpp"

using namespace ccd;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<RegionSpec> chain(std::size_t n, bool cycle = false) {
    std::vector<RegionSpec> rs(n);
    for (std::size_t i = 0; i < n; ++i) {
        rs[i].id = "n" + std::to_string(i);
        if (i > 0) rs[i].neighbors.push_back("n" + std::to_string(i - 1));
        if (i + 1 < n) rs[i].neighbors.push_back("n" + std::to_string(i + 1));
    }
    if (cycle && n > 2) {
        rs[0].neighbors.push_back("n" + std::to_string(n - 1));
        rs[n - 1].neighbors.push_back("n0");
    }
    return rs;
}

// rows x cols lattice with queen contiguity
std::vector<RegionSpec> grid(std::size_t rows, std::size_t cols) {
    std::vector<RegionSpec> rs(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            auto& reg = rs[r * cols + c];
            reg.id = "g" + std::to_string(r) + "_" + std::to_string(c);
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    if (!dr && !dc) continue;
                    const long rr = static_cast<long>(r) + dr, cc = static_cast<long>(c) + dc;
                    if (rr < 0 || cc < 0 || rr >= static_cast<long>(rows) || cc >= static_cast<long>(cols)) continue;
                    reg.neighbors.push_back("g" + std::to_string(rr) + "_" + std::to_string(cc));
                }
        }
    return rs;
}

}  // namespace

TEST_CASE("contiguity weights", "[spatial]") {
    const auto pair = build_weights(chain(2), WeightScheme::BinaryContiguity);
    CHECK(pair.w == std::vector<double>{0, 1, 1, 0});
    CHECK(pair.islands.empty());

    const auto three = build_weights(chain(3), WeightScheme::RowStandardized);
    CHECK(three.at(1, 0) == 0.5);
    CHECK(three.at(1, 1) == 0.0);
    CHECK(three.at(1, 2) == 0.5);
    CHECK(three.at(0, 1) == 1.0);

    auto rs = chain(3);
    rs.push_back({"alone", "", MacroRegion::East, 0, 0, {}});
    const auto with_island = build_weights(rs, WeightScheme::RowStandardized);
    CHECK(with_island.islands == std::vector<std::string>{"alone"});
    for (std::size_t j = 0; j < 4; ++j) CHECK(with_island.at(3, j) == 0.0);
    CHECK(to_string(WeightScheme::RowStandardized) == "row_standardized");
}

TEST_CASE("bundled adjacency rows sum to one after standardization", "[spatial][fixture]") {
    const auto w = build_weights(testing::china31_regions(), WeightScheme::RowStandardized);
    CHECK(w.islands == std::vector<std::string>{"hainan"});
    for (std::size_t i = 0; i < w.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) row += w.at(i, j);
        if (w.order[i] != "hainan") CHECK_THAT(row, WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("Moran's I hand-evaluated cases", "[spatial]") {
    const auto pair = build_weights(chain(2), WeightScheme::BinaryContiguity);
    CHECK(morans_i(std::vector<double>{1.0, -1.0}, pair) == -1.0);

    const auto ring = build_weights(chain(4, true), WeightScheme::BinaryContiguity);
    CHECK_THAT(morans_i(std::vector<double>{1, -1, 1, -1}, ring), WithinAbs(-1.0, 1e-15));

    try {
        morans_i(std::vector<double>{2.0, 2.0}, pair);
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroVariance);
    }
    CHECK_THROWS_AS(morans_i(std::vector<double>{1.0, 2.0, 3.0}, pair), Error);
    const auto empty = build_weights(std::vector<RegionSpec>{{"a", "", MacroRegion::East, 0, 0, {}},
                                                             {"b", "", MacroRegion::East, 0, 0, {}}},
                                     WeightScheme::BinaryContiguity);
    try {
        morans_i(std::vector<double>{1.0, 2.0}, empty);
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyWeights);
    }
}

TEST_CASE("expected I is exact and the pair sits at it", "[spatial]") {
    const auto pair = build_weights(chain(2), WeightScheme::BinaryContiguity);
    MoranOptions normal{InferenceMethod::NormalApprox, 0, 0, Tail::Upper};
    const auto r = morans_inference(std::vector<double>{1.0, -1.0}, pair, normal);
    CHECK(r.expected == -1.0);
    CHECK(r.i_value == r.expected);
    CHECK(r.z == 0.0);
    CHECK(r.p >= 0.5);

    const auto rs = chain(7);
    const auto w = build_weights(rs, WeightScheme::RowStandardized);
    const auto r7 = morans_inference(std::vector<double>{1, 2, 3, 4, 5, 6, 8}, w, normal);
    CHECK(r7.expected == -1.0 / 6.0);
}

TEST_CASE("two-block map is significant under both methods", "[spatial]") {
    const auto rs = grid(6, 6);
    std::vector<double> x;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) x.push_back(c < 3 ? 10.0 + 0.1 * static_cast<double>(r) : 1.0 + 0.1 * static_cast<double>(c));
    for (auto scheme : {WeightScheme::RowStandardized, WeightScheme::BinaryContiguity}) {
        const auto w = build_weights(rs, scheme);
        for (auto method : {InferenceMethod::NormalApprox, InferenceMethod::Permutation}) {
            const auto r = morans_inference(x, w, {method, 999, 42, Tail::Upper});
            CHECK(r.i_value > 0.5);
            CHECK(r.p < 0.05);
            CHECK(r.z > 2.0);
        }
    }
}

TEST_CASE("permutation inference is reproducible and bounded", "[spatial][property]") {
    const auto w = build_weights(testing::china31_regions(), WeightScheme::RowStandardized);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int round = 0; round < 20; ++round) {
        std::vector<double> x(31);
        for (auto& v : x) v = u(rng);
        const MoranOptions opt{InferenceMethod::Permutation, 199, static_cast<std::uint64_t>(round), Tail::Upper};
        const auto a = morans_inference(x, w, opt);
        const auto b = morans_inference(x, w, opt);
        CHECK(a.p == b.p);
        CHECK(a.z == b.z);
        CHECK(a.p >= 1.0 / 200.0);
        CHECK(a.p <= 1.0);
        CHECK(a.permutations == 199);
        auto two = opt;
        two.tail = Tail::TwoSided;
        const auto c = morans_inference(x, w, two);
        CHECK((c.p > 0.0 && c.p <= 1.0));
    }
    CHECK_THROWS_AS(morans_inference(std::vector<double>(31, 0.0), w, {}), Error);
    std::vector<double> x(31);
    std::iota(x.begin(), x.end(), 0.0);
    CHECK_THROWS_AS(morans_inference(x, w, {InferenceMethod::Permutation, 0, 1, Tail::Upper}), Error);
}

TEST_CASE("Moran's I is affine invariant", "[spatial][property]") {
    const auto w = build_weights(testing::china31_regions(), WeightScheme::RowStandardized);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int round = 0; round < 200; ++round) {
        std::vector<double> x(31), y(31);
        for (auto& v : x) v = u(rng);
        double a = u(rng);
        if (std::abs(a) < 0.1) a = 0.1;
        const double b = 100.0 * u(rng);
        for (std::size_t i = 0; i < 31; ++i) y[i] = a * x[i] + b;
        const double ix = morans_i(x, w);
        CHECK_THAT(morans_i(y, w), WithinAbs(ix, 1e-10));
        CHECK((ix >= -1.0 && ix <= 1.0));
    }
}

TEST_CASE("local statistics sum to the global one", "[spatial][property]") {
    const auto regions = testing::china31_regions();
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto scheme : {WeightScheme::RowStandardized, WeightScheme::BinaryContiguity}) {
        const auto w = build_weights(regions, scheme);
        for (int round = 0; round < 50; ++round) {
            std::vector<double> x(31);
            for (auto& v : x) v = u(rng);
            const auto local = lisa(x, w);
            const double sum = std::accumulate(local.begin(), local.end(), 0.0);
            CHECK_THAT(sum, WithinAbs(w.total() * morans_i(x, w), 1e-10));
        }
    }
}

TEST_CASE("normal approximation on the coupling table", "[spatial][fixture]") {
    const auto regions = testing::china31_regions();
    const auto w = build_weights(regions, WeightScheme::RowStandardized);
    const auto d = testing::load_coupling_table().column(2021, regions);
    const auto r = morans_inference(d, w, {InferenceMethod::NormalApprox, 0, 0, Tail::TwoSided});
    CHECK_THAT(r.i_value, WithinAbs(0.22, 0.005));
    CHECK_THAT(r.z, WithinAbs(2.192, 0.05));
    CHECK_THAT(r.p, WithinAbs(0.028, 0.005));
}
