#include "cgo/uav.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "cgo/format.hpp"

namespace cgo::uav {

Terrain Terrain::from_bumps(double extent_x, double extent_y, double cell,
                            const std::vector<TerrainBump>& bumps) {
    if (!(extent_x > 0.0) || !(extent_y > 0.0) || !(cell > 0.0))
        throw ConfigError("terrain: extents and cell size must be positive");
    Terrain t;
    t.cell = cell;
    t.nx = static_cast<std::size_t>(std::floor(extent_x / cell)) + 1;
    t.ny = static_cast<std::size_t>(std::floor(extent_y / cell)) + 1;
    t.heights.assign(t.nx * t.ny, 0.0);
    for (std::size_t iy = 0; iy < t.ny; ++iy) {
        for (std::size_t ix = 0; ix < t.nx; ++ix) {
            const double x = static_cast<double>(ix) * cell;
            const double y = static_cast<double>(iy) * cell;
            double h = 0.0;
            for (const TerrainBump& b : bumps) {
                const double dx = x - b.x, dy = y - b.y;
                h += b.amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * b.radius * b.radius));
            }
            t.heights[iy * t.nx + ix] = h;
        }
    }
    return t;
}

bool Terrain::in_extent(double x, double y) const {
    const double lx = x - origin_x, ly = y - origin_y;
    return lx >= 0.0 && ly >= 0.0 && lx <= extent_x() && ly <= extent_y();
}

double Terrain::height_at(double x, double y) const {
    const double lx = (x - origin_x) / cell;
    const double ly = (y - origin_y) / cell;
    std::size_t ix = static_cast<std::size_t>(std::clamp(lx, 0.0, static_cast<double>(nx - 2)));
    std::size_t iy = static_cast<std::size_t>(std::clamp(ly, 0.0, static_cast<double>(ny - 2)));
    const double fx = std::clamp(lx - static_cast<double>(ix), 0.0, 1.0);
    const double fy = std::clamp(ly - static_cast<double>(iy), 0.0, 1.0);
    const double h00 = heights[iy * nx + ix];
    const double h10 = heights[iy * nx + ix + 1];
    const double h01 = heights[(iy + 1) * nx + ix];
    const double h11 = heights[(iy + 1) * nx + ix + 1];
    return h00 * (1 - fx) * (1 - fy) + h10 * fx * (1 - fy) + h01 * (1 - fx) * fy + h11 * fx * fy;
}

double Terrain::min_height() const { return *std::min_element(heights.begin(), heights.end()); }
double Terrain::max_height() const { return *std::max_element(heights.begin(), heights.end()); }

void Scenario::validate() const {
    if (terrain.nx < 2 || terrain.ny < 2 || terrain.heights.size() != terrain.nx * terrain.ny)
        throw ConfigError("scenario '" + name + "': terrain grid must be at least 2x2");
    for (double h : terrain.heights)
        if (!std::isfinite(h)) throw ConfigError("scenario '" + name + "': non-finite terrain");
    for (const Obstacle& o : obstacles)
        if (!(o.radius > 0.0))
            throw ConfigError("scenario '" + name + "': obstacle radius must be > 0");
    if (waypoints < 3)
        throw ConfigError("scenario '" + name + "': waypoints must be >= 3");
    if (!(h_min < h_max))
        throw ConfigError("scenario '" + name + "': h_min < h_max required");
    if (safety_width < 0.0)
        throw ConfigError("scenario '" + name + "': safety width must be >= 0");
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ConfigError("scenario '" + name + "': weights must be >= 0");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw ConfigError("scenario '" + name + "': weights must sum to 1");
}

Path decode(std::span<const double> x, const Scenario& scenario) {
    const int interior = scenario.waypoints - 2;
    if (x.size() != static_cast<std::size_t>(3 * interior))
        throw ConfigError("decode: expected " + std::to_string(3 * interior) +
                          " variables for " + std::to_string(scenario.waypoints) +
                          " waypoints, got " + std::to_string(x.size()));
    Path path;
    path.points.reserve(scenario.waypoints);
    path.points.push_back(scenario.start);
    for (int i = 0; i < interior; ++i)
        path.points.push_back({x[3 * i], x[3 * i + 1], x[3 * i + 2]});
    path.points.push_back(scenario.goal);
    return path;
}

double length_cost(const Path& path) {
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < path.points.size(); ++j) {
        const auto& a = path.points[j];
        const auto& b = path.points[j + 1];
        const double dx = b[0] - a[0], dy = b[1] - a[1], dz = b[2] - a[2];
        total += std::sqrt(dx * dx + dy * dy + dz * dz);
    }
    return total;
}

double segment_point_distance(double ax, double ay, double bx, double by, double cx, double cy) {
    const double ux = bx - ax, uy = by - ay;
    const double wx = cx - ax, wy = cy - ay;
    const double len2 = ux * ux + uy * uy;
    double t = len2 > 0.0 ? (wx * ux + wy * uy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = wx - t * ux, dy = wy - t * uy;
    return std::sqrt(dx * dx + dy * dy);
}

double obstacle_cost(const Path& path, const Scenario& scenario) {
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < path.points.size(); ++j) {
        const auto& a = path.points[j];
        const auto& b = path.points[j + 1];
        for (const Obstacle& o : scenario.obstacles) {
            const double d = segment_point_distance(a[0], a[1], b[0], b[1], o.cx, o.cy);
            if (d <= o.radius) total += kBigPenalty;
            else if (d <= o.radius + scenario.safety_width)
                total += o.radius + scenario.safety_width - d;
        }
    }
    return total;
}

double height_cost(const Path& path, const Scenario& scenario) {
    double total = 0.0;
    const double center = scenario.band_center();
    for (const auto& p : path.points) {
        if (!scenario.terrain.in_extent(p[0], p[1])) {
            total += kBigPenalty;
            continue;
        }
        const double h = p[2] - scenario.terrain.height_at(p[0], p[1]);
        if (h < scenario.h_min || h > scenario.h_max) total += kBigPenalty;
        else total += std::abs(h - center);
    }
    return total;
}

double total_cost(std::span<const double> x, const Scenario& scenario) {
    const Path path = decode(x, scenario);
    return scenario.weights[0] * length_cost(path) + scenario.weights[1] * obstacle_cost(path, scenario) +
           scenario.weights[2] * height_cost(path, scenario);
}

Problem make_problem(const Scenario& scenario) {
    scenario.validate();
    const int interior = scenario.waypoints - 2;
    const double zmin = scenario.terrain.min_height() + scenario.h_min;
    const double zmax = scenario.terrain.max_height() + scenario.h_max;
    std::vector<double> lower, upper;
    lower.reserve(3 * interior);
    upper.reserve(3 * interior);
    for (int i = 0; i < interior; ++i) {
        lower.push_back(scenario.terrain.origin_x);
        upper.push_back(scenario.terrain.origin_x + scenario.terrain.extent_x());
        lower.push_back(scenario.terrain.origin_y);
        upper.push_back(scenario.terrain.origin_y + scenario.terrain.extent_y());
        lower.push_back(zmin);
        upper.push_back(zmax);
    }
    Scenario copy = scenario;
    return Problem("uav_" + scenario.name, SearchSpace(std::move(lower), std::move(upper)),
                   [copy](std::span<const double> x) { return total_cost(x, copy); });
}

namespace {

bool chord_blocked(const Scenario& s) {
    for (const Obstacle& o : s.obstacles)
        if (segment_point_distance(s.start[0], s.start[1], s.goal[0], s.goal[1], o.cx, o.cy) <=
            o.radius)
            return true;
    return false;
}

Scenario finish_scenario(Scenario s) {
    s.terrain = Terrain::from_bumps(1000.0, 1000.0, 10.0, s.bumps);
    const double center = s.band_center();
    s.start[2] = s.terrain.height_at(s.start[0], s.start[1]) + center;
    s.goal[2] = s.terrain.height_at(s.goal[0], s.goal[1]) + center;
    s.validate();
    if (!chord_blocked(s))
        throw ConfigError("scenario '" + s.name + "': start-goal chord misses every obstacle");
    return s;
}

} // namespace

std::pair<Scenario, Scenario> build_scenarios() {
    const std::vector<TerrainBump> rolling = {
        {220.0, 310.0, 12.0, 160.0}, {520.0, 140.0, 8.0, 140.0}, {760.0, 420.0, 15.0, 200.0},
        {380.0, 700.0, 10.0, 170.0}, {840.0, 830.0, 7.0, 150.0},  {120.0, 860.0, 9.0, 180.0},
    };

    // Three blockers sit on or near the start-goal chord; the rest crowd the
    // map without sealing the side corridors.
    Scenario one;
    one.name = "one";
    one.bumps = rolling;
    one.obstacles = {{250.0, 250.0, 50.0}, {430.0, 470.0, 45.0}, {640.0, 640.0, 55.0},
                     {200.0, 600.0, 45.0}, {600.0, 200.0, 50.0}, {820.0, 480.0, 40.0},
                     {480.0, 820.0, 40.0}};
    one.start = {60.0, 60.0, 0.0};
    one.goal = {940.0, 940.0, 0.0};
    one.waypoints = 50;
    one.safety_width = 20.0;
    one.h_min = 20.0;
    one.h_max = 120.0;
    one.weights = {0.5, 0.3, 0.2};

    Scenario two;
    two.name = "two";
    two.bumps = rolling;
    two.obstacles = {{320.0, 500.0, 55.0}, {620.0, 460.0, 50.0}, {460.0, 760.0, 60.0},
                     {760.0, 680.0, 50.0}};
    two.start = {80.0, 500.0, 0.0};
    two.goal = {920.0, 500.0, 0.0};
    two.waypoints = 50;
    two.safety_width = 20.0;
    two.h_min = 20.0;
    two.h_max = 120.0;
    two.weights = {0.5, 0.3, 0.2};

    return {finish_scenario(std::move(one)), finish_scenario(std::move(two))};
}

void save_scenario(const Scenario& s, std::ostream& out) {
    out << "# uav scenario\n";
    out << "name " << s.name << "\n";
    out << "start " << format_double(s.start[0]) << ' ' << format_double(s.start[1]) << ' '
        << format_double(s.start[2]) << "\n";
    out << "goal " << format_double(s.goal[0]) << ' ' << format_double(s.goal[1]) << ' '
        << format_double(s.goal[2]) << "\n";
    out << "waypoints " << s.waypoints << "\n";
    out << "safety_width " << format_double(s.safety_width) << "\n";
    out << "height_band " << format_double(s.h_min) << ' ' << format_double(s.h_max) << "\n";
    out << "weights " << format_double(s.weights[0]) << ' ' << format_double(s.weights[1]) << ' '
        << format_double(s.weights[2]) << "\n";
    out << "terrain " << format_double(s.terrain.extent_x()) << ' '
        << format_double(s.terrain.extent_y()) << ' ' << format_double(s.terrain.cell) << "\n";
    for (const TerrainBump& b : s.bumps)
        out << "bump " << format_double(b.x) << ' ' << format_double(b.y) << ' '
            << format_double(b.amplitude) << ' ' << format_double(b.radius) << "\n";
    for (const Obstacle& o : s.obstacles)
        out << "obstacle " << format_double(o.cx) << ' ' << format_double(o.cy) << ' '
            << format_double(o.radius) << "\n";
}

namespace {

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line_no,
                             const std::string& why) {
    throw IngestionError("scenario '" + path.string() + "' line " + std::to_string(line_no) +
                         ": " + why);
}

std::vector<double> parse_reals(const std::filesystem::path& path, std::size_t line_no,
                                std::istringstream& ls, std::size_t count,
                                const std::string& key) {
    std::vector<double> vals;
    std::string token;
    while (ls >> token) {
        try {
            std::size_t used = 0;
            vals.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            parse_fail(path, line_no, "cannot parse '" + token + "' as a real in '" + key + "'");
        }
    }
    if (vals.size() != count)
        parse_fail(path, line_no, "'" + key + "' expects " + std::to_string(count) +
                                      " values, found " + std::to_string(vals.size()));
    return vals;
}

} // namespace

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestionError("scenario: cannot open '" + path.string() + "'");

    Scenario s;
    double extent_x = 0.0, extent_y = 0.0, cell = 0.0;
    bool have_start = false, have_goal = false, have_terrain = false, have_band = false,
         have_weights = false, start_z_given = false, goal_z_given = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "name") {
            if (!(ls >> s.name)) parse_fail(path, line_no, "'name' expects a value");
        } else if (key == "start" || key == "goal") {
            // two values place the endpoint at the band center; three pin z
            std::vector<double> vals;
            std::string token;
            while (ls >> token) {
                try {
                    vals.push_back(std::stod(token));
                } catch (const std::exception&) {
                    parse_fail(path, line_no, "cannot parse '" + token + "' in '" + key + "'");
                }
            }
            if (vals.size() != 2 && vals.size() != 3)
                parse_fail(path, line_no, "'" + key + "' expects 2 or 3 values");
            std::array<double, 3> pt{vals[0], vals[1], vals.size() == 3 ? vals[2] : 0.0};
            if (key == "start") {
                s.start = pt;
                have_start = true;
                start_z_given = vals.size() == 3;
            } else {
                s.goal = pt;
                have_goal = true;
                goal_z_given = vals.size() == 3;
            }
        } else if (key == "waypoints") {
            if (!(ls >> s.waypoints)) parse_fail(path, line_no, "'waypoints' expects an integer");
        } else if (key == "safety_width") {
            s.safety_width = parse_reals(path, line_no, ls, 1, key)[0];
        } else if (key == "height_band") {
            auto v = parse_reals(path, line_no, ls, 2, key);
            s.h_min = v[0];
            s.h_max = v[1];
            have_band = true;
        } else if (key == "weights") {
            auto v = parse_reals(path, line_no, ls, 3, key);
            s.weights = {v[0], v[1], v[2]};
            have_weights = true;
        } else if (key == "terrain") {
            auto v = parse_reals(path, line_no, ls, 3, key);
            extent_x = v[0];
            extent_y = v[1];
            cell = v[2];
            have_terrain = true;
        } else if (key == "bump") {
            auto v = parse_reals(path, line_no, ls, 4, key);
            s.bumps.push_back({v[0], v[1], v[2], v[3]});
        } else if (key == "obstacle") {
            auto v = parse_reals(path, line_no, ls, 3, key);
            s.obstacles.push_back({v[0], v[1], v[2]});
        } else {
            parse_fail(path, line_no, "unknown key '" + key + "'");
        }
    }
    if (!have_start || !have_goal) throw IngestionError("scenario '" + path.string() +
                                                        "': start and goal are required");
    if (!have_terrain) throw IngestionError("scenario '" + path.string() + "': terrain is required");
    if (!have_band) throw IngestionError("scenario '" + path.string() + "': height_band is required");
    if (!have_weights) throw IngestionError("scenario '" + path.string() + "': weights are required");

    try {
        s.terrain = Terrain::from_bumps(extent_x, extent_y, cell, s.bumps);
        if (!start_z_given) s.start[2] = s.terrain.height_at(s.start[0], s.start[1]) + s.band_center();
        if (!goal_z_given) s.goal[2] = s.terrain.height_at(s.goal[0], s.goal[1]) + s.band_center();
        s.validate();
    } catch (const ConfigError& e) {
        throw IngestionError("scenario '" + path.string() + "': " + e.what());
    }
    return s;
}

void write_path_csv(const Path& path, std::ostream& out) {
    out << "j,x,y,z\n";
    for (std::size_t j = 0; j < path.points.size(); ++j)
        out << j << ',' << format_double(path.points[j][0]) << ','
            << format_double(path.points[j][1]) << ',' << format_double(path.points[j][2]) << "\n";
}

void write_svg(const Path& path, const Scenario& scenario, std::ostream& out) {
    const double w = scenario.terrain.extent_x();
    const double h = scenario.terrain.extent_y();
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << format_double(w) << ' '
        << format_double(h) << "\">\n";
    // map y grows upward; flip into SVG's downward axis
    out << "<g transform=\"translate(0," << format_double(h) << ") scale(1,-1)\">\n";
    out << "<rect class=\"map\" x=\"0\" y=\"0\" width=\"" << format_double(w) << "\" height=\""
        << format_double(h) << "\" fill=\"#f4f1ea\"/>\n";
    for (const Obstacle& o : scenario.obstacles)
        out << "<circle class=\"safety\" cx=\"" << format_double(o.cx) << "\" cy=\""
            << format_double(o.cy) << "\" r=\"" << format_double(o.radius + scenario.safety_width)
            << "\" fill=\"none\" stroke=\"#c9a227\" stroke-dasharray=\"6 4\"/>\n";
    for (const Obstacle& o : scenario.obstacles)
        out << "<circle class=\"obstacle\" cx=\"" << format_double(o.cx) << "\" cy=\""
            << format_double(o.cy) << "\" r=\"" << format_double(o.radius)
            << "\" fill=\"#8a8a8a\"/>\n";
    out << "<polyline class=\"path\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"3\" points=\"";
    for (std::size_t j = 0; j < path.points.size(); ++j) {
        if (j) out << ' ';
        out << format_double(path.points[j][0]) << ',' << format_double(path.points[j][1]);
    }
    out << "\"/>\n";
    const auto marker = [&](const std::array<double, 3>& p, const char* cls, const char* color) {
        out << "<rect class=\"" << cls << "\" x=\"" << format_double(p[0] - 8.0) << "\" y=\""
            << format_double(p[1] - 8.0) << "\" width=\"16\" height=\"16\" fill=\"" << color
            << "\"/>\n";
    };
    marker(scenario.start, "start", "#2da44e");
    marker(scenario.goal, "goal", "#cf222e");
    out << "</g>\n</svg>\n";
}

} // namespace cgo::uav
