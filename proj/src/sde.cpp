#include "ccd/sde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ccd/error.hpp"

namespace ccd::geo {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double normalize_half_turn(double deg) {
    double a = std::fmod(deg, 180.0);
    if (a < 0.0) a += 180.0;
    return a >= 180.0 ? 0.0 : a;
}

double total_weight(std::span<const PlanarPoint> points) {
    double total = 0.0;
    for (const auto& p : points) {
        if (!(p.weight >= 0.0)) throw Error(ErrorCode::OutOfRange, "negative or NaN weight", p.region);
        total += p.weight;
    }
    if (!(total > 0.0)) throw Error(ErrorCode::ZeroTotalWeight, "total weight is zero");
    return total;
}

}  // namespace

PlanarPoint project(LonLat p, LonLat ref) {
    PlanarPoint out;
    out.x_km = (p.lon - ref.lon) * kKmPerDegree * std::cos(ref.lat * kDeg);
    out.y_km = (p.lat - ref.lat) * kKmPerDegree;
    return out;
}

LonLat unproject(double x_km, double y_km, LonLat ref) {
    return {ref.lon + x_km / (kKmPerDegree * std::cos(ref.lat * kDeg)), ref.lat + y_km / kKmPerDegree};
}

Center mean_center(std::span<const PlanarPoint> points) {
    const double total = total_weight(points);
    Center c;
    for (const auto& p : points) {
        c.x_km += p.weight * p.x_km;
        c.y_km += p.weight * p.y_km;
    }
    c.x_km /= total;
    c.y_km /= total;
    return c;
}

PlanarEllipse sde(std::span<const PlanarPoint> points) {
    const double total = total_weight(points);
    PlanarEllipse e;
    e.center = mean_center(points);

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        const double dx = p.x_km - e.center.x_km;
        const double dy = p.y_km - e.center.y_km;
        sxx += p.weight * dx * dx;
        syy += p.weight * dy * dy;
        sxy += p.weight * dx * dy;
    }
    sxx /= total;
    syy /= total;
    sxy /= total;
    if (!(sxx + syy > 0.0)) throw Error(ErrorCode::DegenerateCloud, "all weighted points coincide");

    // Variance along the direction at azimuth a (unit vector (sin a, cos a)) is
    // (sxx + syy)/2 + r cos(2a - phi) with tan(phi) = 2 sxy / (syy - sxx).
    const double half_diff = 0.5 * (syy - sxx);
    const double r = std::hypot(half_diff, sxy);
    const bool isotropic = r <= 1e-12 * (sxx + syy);
    const double azimuth = isotropic ? 0.0 : 0.5 * std::atan2(2.0 * sxy, syy - sxx);

    // principal variances in closed form; equal to the weighted mean squares of the
    // rotated coordinates, but exact for collinear clouds
    const double mid = 0.5 * (sxx + syy);
    e.sigma_major_km = std::sqrt(mid + r);
    e.sigma_minor_km = std::sqrt(std::max(0.0, mid - r));
    e.azimuth_deg = normalize_half_turn(azimuth / kDeg);
    return e;
}

double ellipse_area_1e4_km2(double sigma_x_km, double sigma_y_km) {
    return std::numbers::pi * sigma_x_km * sigma_y_km / 1e4;
}

EllipseParams sde_lonlat(std::span<const LonLat> positions, std::span<const double> weights) {
    if (positions.size() != weights.size()) {
        throw Error(ErrorCode::DimensionMismatch, "positions and weights differ in length");
    }
    LonLat ref;
    double total = 0.0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (!(weights[i] >= 0.0)) throw Error(ErrorCode::OutOfRange, "negative or NaN weight");
        ref.lon += weights[i] * positions[i].lon;
        ref.lat += weights[i] * positions[i].lat;
        total += weights[i];
    }
    if (!(total > 0.0)) throw Error(ErrorCode::ZeroTotalWeight, "total weight is zero");
    ref.lon /= total;
    ref.lat /= total;

    std::vector<PlanarPoint> points;
    points.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        auto p = project(positions[i], ref);
        p.weight = weights[i];
        points.push_back(p);
    }
    const auto planar = sde(points);
    const auto center = unproject(planar.center.x_km, planar.center.y_km, ref);

    EllipseParams out;
    out.center_lon = center.lon;
    out.center_lat = center.lat;
    out.sigma_x_km = planar.sigma_major_km;
    out.sigma_y_km = planar.sigma_minor_km;
    out.azimuth_deg = planar.azimuth_deg;
    out.area_1e4_km2 = ellipse_area_1e4_km2(out.sigma_x_km, out.sigma_y_km);
    return out;
}

std::string_view octant(double bearing_deg) {
    static constexpr std::string_view names[] = {"N", "NE", "E", "SE", "S", "SW", "W", "NW"};
    double b = std::fmod(bearing_deg + 22.5, 360.0);
    if (b < 0.0) b += 360.0;
    const auto idx = static_cast<std::size_t>(b / 45.0) % 8;
    return names[idx];
}

std::vector<DriftSegment> centroid_drift(std::vector<YearCenter> centers) {
    std::sort(centers.begin(), centers.end(), [](const auto& a, const auto& b) { return a.year < b.year; });
    for (std::size_t k = 1; k < centers.size(); ++k) {
        if (centers[k].year == centers[k - 1].year) {
            throw Error(ErrorCode::DuplicateYear, "year " + std::to_string(centers[k].year) + " appears twice");
        }
    }
    if (centers.size() < 2) throw Error(ErrorCode::EmptyInput, "drift needs centers for at least two years");

    std::vector<DriftSegment> out;
    for (std::size_t k = 1; k < centers.size(); ++k) {
        const auto& from = centers[k - 1];
        const auto& to = centers[k];
        const auto p = project(to.center, from.center);
        DriftSegment seg;
        seg.from_year = from.year;
        seg.to_year = to.year;
        seg.east_km = p.x_km;
        seg.north_km = p.y_km;
        seg.distance_km = std::hypot(p.x_km, p.y_km);
        double bearing = seg.distance_km > 0.0 ? std::atan2(p.x_km, p.y_km) / kDeg : 0.0;
        if (bearing < 0.0) bearing += 360.0;
        if (bearing >= 360.0) bearing -= 360.0;
        seg.bearing_deg = bearing;
        seg.speed_km_per_year = seg.distance_km / static_cast<double>(to.year - from.year);
        seg.octant = std::string(octant(bearing));
        out.push_back(std::move(seg));
    }
    return out;
}

std::vector<LonLat> ellipse_ring(const EllipseParams& e, int segments) {
    if (segments < 3) throw Error(ErrorCode::OutOfRange, "an ellipse ring needs at least 3 segments");
    const LonLat center{e.center_lon, e.center_lat};
    const double s = std::sin(e.azimuth_deg * kDeg), c = std::cos(e.azimuth_deg * kDeg);
    std::vector<LonLat> ring;
    ring.reserve(static_cast<std::size_t>(segments) + 1);
    for (int k = 0; k < segments; ++k) {
        const double t = 2.0 * std::numbers::pi * k / segments;
        const double a = e.sigma_x_km * std::cos(t);
        const double b = e.sigma_y_km * std::sin(t);
        // major axis along (sin az, cos az), minor along (cos az, -sin az)
        ring.push_back(unproject(a * s + b * c, a * c - b * s, center));
    }
    ring.push_back(ring.front());
    return ring;
}

}  // namespace ccd::geo
