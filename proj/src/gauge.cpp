#include "knitfold/gauge.hpp"

#include <cmath>
#include <stdexcept>

namespace knitfold {

namespace {

// Absorbs floating noise in extents that are exact multiples of the gauge.
constexpr double kSnap = 1e-9;

int cells_for(double extent, double pitch) {
    const double n = extent / pitch;
    return static_cast<int>(std::ceil(n - kSnap));
}

int index_for(double offset, double pitch, int count) {
    const double t = offset / pitch;
    int i = static_cast<int>(std::floor(t + kSnap));
    if (i == count && t <= count + kSnap) i = count - 1;
    return i;
}

}  // namespace

void check_gauge(const Gauge& g) {
    if (!(std::isfinite(g.stitch_w) && g.stitch_w > 0.0 && std::isfinite(g.stitch_h) &&
          g.stitch_h > 0.0)) {
        throw ParamError("gauge stitch width and height must be positive");
    }
}

GridSpec build_grid(const CreasePattern& p, const Gauge& g) {
    check_gauge(g);
    const BoundingBox box = bounding_box(p.vertices);
    if (p.vertices.empty() || !(box.width() > kMinEdgeLength) || !(box.height() > kMinEdgeLength)) {
        throw GeometryError("pattern bounding box has no area; cannot build a stitch grid");
    }
    GridSpec grid;
    grid.origin = box.min;
    grid.gauge = g;
    grid.cols = cells_for(box.width(), g.stitch_w);
    grid.rows = cells_for(box.height(), g.stitch_h);
    return grid;
}

Cell to_cell(Point2 pt, const GridSpec& grid) {
    const double dx = pt.x - grid.origin.x;
    const double dy = pt.y - grid.origin.y;
    const Cell c{index_for(dy, grid.gauge.stitch_h, grid.rows),
                 index_for(dx, grid.gauge.stitch_w, grid.cols)};
    if (!grid.contains(c) || !std::isfinite(dx) || !std::isfinite(dy)) {
        throw GeometryError("point (" + format_shortest(pt.x) + ", " + format_shortest(pt.y) +
                            ") lies outside the stitch grid");
    }
    return c;
}

Point2 cell_center(Cell rc, const GridSpec& grid) {
    if (!grid.contains(rc)) {
        throw std::out_of_range("cell (" + std::to_string(rc.row) + ", " + std::to_string(rc.col) +
                                ") outside " + std::to_string(grid.rows) + "x" +
                                std::to_string(grid.cols) + " grid");
    }
    return {grid.origin.x + (rc.col + 0.5) * grid.gauge.stitch_w,
            grid.origin.y + (rc.row + 0.5) * grid.gauge.stitch_h};
}

}  // namespace knitfold
