#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cgo/problem.hpp"

namespace cgo::uav {

/// Finite stand-in for the infinite branch of the obstacle and height costs.
/// Large enough to dominate any weighted path length by several orders of
/// magnitude while keeping greedy acceptance well ordered.
constexpr double kBigPenalty = 1e8;

/// Smooth terrain bump used by the synthetic elevation generator.
struct TerrainBump {
    double x = 0.0;
    double y = 0.0;
    double amplitude = 0.0; // meters
    double radius = 0.0;    // Gaussian falloff scale, meters
};

/// Ground elevation grid with bilinear interpolation between cells.
struct Terrain {
    std::vector<double> heights; // row-major, ny rows of nx samples
    std::size_t nx = 0;
    std::size_t ny = 0;
    double cell = 1.0;
    double origin_x = 0.0;
    double origin_y = 0.0;

    static Terrain from_bumps(double extent_x, double extent_y, double cell,
                              const std::vector<TerrainBump>& bumps);

    double extent_x() const { return static_cast<double>(nx - 1) * cell; }
    double extent_y() const { return static_cast<double>(ny - 1) * cell; }
    bool in_extent(double x, double y) const;
    /// Bilinear ground height; caller must check in_extent first.
    double height_at(double x, double y) const;
    double min_height() const;
    double max_height() const;
};

struct Obstacle {
    double cx = 0.0;
    double cy = 0.0;
    double radius = 0.0; // > 0
};

struct Scenario {
    std::string name;
    Terrain terrain;
    std::vector<TerrainBump> bumps; // generator parameters, kept for round-trips
    std::vector<Obstacle> obstacles;
    std::array<double, 3> start{};
    std::array<double, 3> goal{};
    int waypoints = 50;        // n, start + interior + goal
    double safety_width = 0.0; // S
    double h_min = 0.0;
    double h_max = 0.0;
    std::array<double, 3> weights{}; // length, obstacle, height; sums to 1

    void validate() const;
    double band_center() const { return (h_min + h_max) / 2.0; }
};

/// Flight path: waypoints with fixed start and goal.
struct Path {
    std::vector<std::array<double, 3>> points;
};

/// Reshape 3*(n-2) decision variables into the interior waypoints, in
/// absolute map coordinates, between the fixed start and goal.
Path decode(std::span<const double> x, const Scenario& scenario);

/// Sum of Euclidean segment lengths.
double length_cost(const Path& path);

/// Minimum 2-D distance between segment (ax,ay)-(bx,by) and point (cx,cy).
double segment_point_distance(double ax, double ay, double bx, double by, double cx, double cy);

/// Per-segment, per-obstacle clearance penalty: zero beyond radius + safety
/// width, linear inside the safety annulus, kBigPenalty at or inside the
/// cylinder. Cylinders are vertical and unbounded, so only the xy projection
/// matters.
double obstacle_cost(const Path& path, const Scenario& scenario);

/// Distance of each waypoint's above-ground height from the band center;
/// kBigPenalty outside [h_min, h_max] or off the terrain grid.
double height_cost(const Path& path, const Scenario& scenario);

/// Weighted total of the three cost terms on the decoded path.
double total_cost(std::span<const double> x, const Scenario& scenario);

/// The scenario objective over its waypoint box, ready for any optimizer.
Problem make_problem(const Scenario& scenario);

/// Two built-in synthetic scenarios: seven obstacles (dense) and four
/// obstacles (sparse). In both, the straight start-goal chord crosses at
/// least one obstacle, so planning is nontrivial.
std::pair<Scenario, Scenario> build_scenarios();

/// Key-value scenario text format; see docs/formats.md. Throws IngestionError
/// with line context on malformed input.
Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, std::ostream& out);

void write_path_csv(const Path& path, std::ostream& out);
/// Top view: obstacle circles, dashed safety annuli, the path polyline, and
/// square start/goal markers. No timestamps, byte-stable across reruns.
void write_svg(const Path& path, const Scenario& scenario, std::ostream& out);

} // namespace cgo::uav
