#pragma once

#include <compare>

#include "knitfold/pattern.hpp"

namespace knitfold {

/// Relaxed stitch dimensions measured on plain fabric.
struct Gauge {
    double stitch_w = 0.0;  // mm per stitch along the course
    double stitch_h = 0.0;  // mm per row along the wale

    bool operator==(const Gauge&) const = default;
};

void check_gauge(const Gauge& g);

/// Row 0 is the first knitted (bottom) row; column 0 is leftmost.
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

/// Stitch grid over a physical region. Cell (r, c) spans
/// [origin.x + c·w, origin.x + (c+1)·w) × [origin.y + r·h, origin.y + (r+1)·h).
struct GridSpec {
    int rows = 0;
    int cols = 0;
    Point2 origin{};
    Gauge gauge{};

    double width() const { return cols * gauge.stitch_w; }
    double height() const { return rows * gauge.stitch_h; }
    bool contains(Cell c) const { return c.row >= 0 && c.row < rows && c.col >= 0 && c.col < cols; }

    bool operator==(const GridSpec&) const = default;
};

GridSpec build_grid(const CreasePattern& p, const Gauge& g);

/// Cell containing `pt`. Upper edges are half-open except the grid's own
/// top/right boundary, which maps onto the last row/column.
Cell to_cell(Point2 pt, const GridSpec& grid);

Point2 cell_center(Cell rc, const GridSpec& grid);

}  // namespace knitfold
