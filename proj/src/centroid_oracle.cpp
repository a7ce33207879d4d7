#include "formred/centroid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace formred {

namespace {

// sum_j cosh d = sum_j 1 + ((x - x_j)^2 + (y - y_j)^2) / (2 y y_j), evaluated
// straight from the distance identity and nothing else.
double objective(std::span<const PointH2> points, double x, double y) {
    double total = 0.0;
    for (const auto& p : points) {
        const double dx = x - p.x;
        const double dy = y - p.y;
        total += 1.0 + (dx * dx + dy * dy) / (2.0 * y * p.y);
    }
    return total;
}

}  // namespace

PointH2 oracle_center(std::span<const PointH2> points, double tol) {
    if (points.empty()) throw std::invalid_argument("oracle_center: empty point set");
    constexpr int kGrid = 200;
    constexpr int kLevels = 60;
    constexpr int kMovesPerLevel = 200;

    double min_x = points[0].x, max_x = points[0].x;
    double min_y = points[0].y, max_y = points[0].y;
    for (const auto& p : points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double span = max_x > min_x ? max_x - min_x : max_y;
    const double x_lo = min_x - span;
    const double x_hi = max_x + span;
    const double log_y_lo = std::log(min_y / 4.0);
    const double log_y_hi = std::log(4.0 * max_y);
    const double dx = (x_hi - x_lo) / (kGrid - 1);
    const double dly = (log_y_hi - log_y_lo) / (kGrid - 1);

    double best_x = x_lo;
    double best_ly = log_y_lo;
    double best = objective(points, best_x, std::exp(best_ly));
    for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
            const double x = x_lo + i * dx;
            const double ly = log_y_lo + j * dly;
            const double v = objective(points, x, std::exp(ly));
            if (v < best) {
                best = v;
                best_x = x;
                best_ly = ly;
            }
        }
    }

    // Compass search in (x, log y); the step halves when no neighbour improves.
    double step_x = dx;
    double step_ly = dly;
    static constexpr std::array<std::array<int, 2>, 8> kDirections{
        {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (int level = 0; level < kLevels; ++level) {
        for (int move = 0; move < kMovesPerLevel; ++move) {
            bool improved = false;
            for (const auto& dir : kDirections) {
                const double x = best_x + dir[0] * step_x;
                const double ly = best_ly + dir[1] * step_ly;
                const double v = objective(points, x, std::exp(ly));
                if (v < best) {
                    best = v;
                    best_x = x;
                    best_ly = ly;
                    improved = true;
                }
            }
            if (!improved) break;
        }
        step_x *= 0.5;
        step_ly *= 0.5;
        if (step_ly < tol && step_x < tol * std::exp(best_ly)) break;
    }
    return {best_x, std::exp(best_ly)};
}

}  // namespace formred
