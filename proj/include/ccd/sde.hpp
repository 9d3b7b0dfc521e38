#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccd::geo {

/// Kilometres per degree of arc on a sphere of radius 6371 km.
inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kKmPerDegree = 3.14159265358979323846 * kEarthRadiusKm / 180.0;

struct LonLat {
    double lon = 0.0;
    double lat = 0.0;
};

struct PlanarPoint {
    double x_km = 0.0;  // east
    double y_km = 0.0;  // north
    double weight = 0.0;
    std::string region;
};

/// Local equirectangular projection about `ref`.
PlanarPoint project(LonLat p, LonLat ref);
LonLat unproject(double x_km, double y_km, LonLat ref);

struct Center {
    double x_km = 0.0;
    double y_km = 0.0;
};

/// Weighted mean of planar positions; throws ZeroTotalWeight.
Center mean_center(std::span<const PlanarPoint> points);

struct EllipseParams {
    double center_lon = 0.0;
    double center_lat = 0.0;
    double sigma_x_km = 0.0;  // major semi-axis
    double sigma_y_km = 0.0;  // minor semi-axis
    double azimuth_deg = 0.0;  // clockwise from north to the major axis, [0, 180)
    double area_1e4_km2 = 0.0;
};

/// Planar ellipse geometry. Center fields hold the planar mean center (km).
struct PlanarEllipse {
    Center center;
    double sigma_major_km = 0.0;
    double sigma_minor_km = 0.0;
    double azimuth_deg = 0.0;
};

/// Weighted standard deviational ellipse of a planar cloud: one standard
/// deviation along the principal directions, weight-normalized.
/// Throws DegenerateCloud when all positively weighted points coincide.
PlanarEllipse sde(std::span<const PlanarPoint> points);

/// Projects lon/lat points about their weighted mean and fits the ellipse.
EllipseParams sde_lonlat(std::span<const LonLat> positions, std::span<const double> weights);

/// pi * a * b in units of 10^4 km^2.
double ellipse_area_1e4_km2(double sigma_x_km, double sigma_y_km);

struct YearCenter {
    int year = 0;
    LonLat center;
};

struct DriftSegment {
    int from_year = 0;
    int to_year = 0;
    double east_km = 0.0;
    double north_km = 0.0;
    double distance_km = 0.0;
    double bearing_deg = 0.0;  // clockwise from north, [0, 360)
    double speed_km_per_year = 0.0;
    std::string octant;
};

/// Compass sector of a bearing: N, NE, E, SE, S, SW, W, NW (45-degree sectors).
std::string_view octant(double bearing_deg);

/// Movement between consecutive years (sorted ascending); each later center is
/// projected about the earlier one. Throws DuplicateYear, or EmptyInput for fewer than two centers.
std::vector<DriftSegment> centroid_drift(std::vector<YearCenter> centers);

/// Closed ring of `segments + 1` lon/lat vertices tracing the ellipse.
std::vector<LonLat> ellipse_ring(const EllipseParams& e, int segments = 64);

}  // namespace ccd::geo
