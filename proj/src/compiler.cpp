#include "knitfold/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace knitfold {

Orientation mirrored(Orientation o) {
    switch (o) {
        case Orientation::DiagFwd: return Orientation::DiagBwd;
        case Orientation::DiagBwd: return Orientation::DiagFwd;
        default: return o;
    }
}

const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::Horizontal: return "horizontal";
        case Orientation::Vertical: return "vertical";
        case Orientation::DiagFwd: return "diag_fwd";
        case Orientation::DiagBwd: return "diag_bwd";
    }
    return "?";
}

const char* to_string(StitchType s) {
    switch (s) {
        case StitchType::Knit: return "knit";
        case StitchType::Purl: return "purl";
        case StitchType::Tuck: return "tuck";
        case StitchType::TwistLeft: return "twist_left";
        case StitchType::TwistRight: return "twist_right";
    }
    return "?";
}

const char* to_string(OffGridPolicy p) {
    switch (p) {
        case OffGridPolicy::Snap: return "snap";
        case OffGridPolicy::Staircase: return "staircase";
        case OffGridPolicy::Reject: return "reject";
    }
    return "?";
}

TwistMap::TwistMap() {
    set(Orientation::DiagBwd, FoldType::Mountain, StitchType::TwistRight);
    set(Orientation::DiagFwd, FoldType::Valley, StitchType::TwistLeft);
    set(Orientation::DiagFwd, FoldType::Mountain, StitchType::TwistRight);
    set(Orientation::DiagBwd, FoldType::Valley, StitchType::TwistLeft);
}

std::size_t TwistMap::slot(Orientation diagonal, FoldType fold) {
    if (!is_diagonal(diagonal)) throw ParamError("twist map is only defined for diagonal creases");
    return (diagonal == Orientation::DiagFwd ? 0 : 2) + (fold == FoldType::Mountain ? 0 : 1);
}

StitchType TwistMap::at(Orientation diagonal, FoldType fold) const {
    return table_[slot(diagonal, fold)];
}

void TwistMap::set(Orientation diagonal, FoldType fold, StitchType twist) {
    if (!is_twist(twist)) throw ParamError("twist map entries must be TwistLeft or TwistRight");
    table_[slot(diagonal, fold)] = twist;
}

void check_config(const RuleConfig& cfg) {
    if (!(cfg.orientation_tol_deg >= 0.0 && cfg.orientation_tol_deg < 22.5)) {
        throw ParamError("orientation_tol_deg must lie in [0, 22.5) so bands do not overlap");
    }
    if (cfg.wale_buffer < 0) throw ParamError("wale_buffer must be >= 0");
    if (!(cfg.fusible_fraction >= 0.0 && cfg.fusible_fraction < 1.0)) {
        throw ParamError("fusible_fraction must lie in [0, 1)");
    }
}

double crease_angle_deg(Point2 a, Point2 b) {
    double theta = std::atan2(b.y - a.y, b.x - a.x) * 180.0 / std::numbers::pi;
    if (theta < 0.0) theta += 180.0;
    if (theta >= 180.0) theta -= 180.0;
    return theta;
}

namespace {

struct Band {
    Orientation orientation;
    double center;
};

constexpr std::array<Band, 5> kBands = {{{Orientation::Horizontal, 0.0},
                                         {Orientation::DiagFwd, 45.0},
                                         {Orientation::Vertical, 90.0},
                                         {Orientation::DiagBwd, 135.0},
                                         {Orientation::Horizontal, 180.0}}};

double band_angle(Orientation o) {
    switch (o) {
        case Orientation::Horizontal: return 0.0;
        case Orientation::DiagFwd: return 45.0;
        case Orientation::Vertical: return 90.0;
        case Orientation::DiagBwd: return 135.0;
    }
    return 0.0;
}

// Slack for creases that are exactly on a band edge but carry rounding noise.
constexpr double kAngleSlack = 1e-9;

}  // namespace

Orientation classify_orientation(Point2 a, Point2 b, const RuleConfig& cfg) {
    if (!(distance(a, b) > kMinEdgeLength)) throw GeometryError("cannot classify a degenerate edge");
    const double theta = crease_angle_deg(a, b);
    const Band* nearest = &kBands[0];
    for (const auto& band : kBands) {
        if (std::abs(theta - band.center) < std::abs(theta - nearest->center)) nearest = &band;
    }
    if (std::abs(theta - nearest->center) <= cfg.orientation_tol_deg + kAngleSlack) {
        return nearest->orientation;
    }
    if (cfg.offgrid_policy == OffGridPolicy::Reject) {
        throw OffGridError("crease at " + format_shortest(std::round(theta * 100.0) / 100.0) +
                               " deg is outside every orientation band (tolerance " +
                               format_shortest(cfg.orientation_tol_deg) + " deg)",
                           theta);
    }
    return nearest->orientation;
}

StitchPlan stitch_rule(Orientation o, FoldType fold, const RuleConfig& cfg) {
    switch (o) {
        case Orientation::Horizontal:
            return fold == FoldType::Mountain ? StitchPlan{StitchType::Purl, {1, 1}}
                                              : StitchPlan{StitchType::Tuck, {2, 1}};
        case Orientation::Vertical:
            return fold == FoldType::Valley ? StitchPlan{StitchType::Purl, {1, 1}}
                                            : StitchPlan{StitchType::Tuck, {2, 1}};
        case Orientation::DiagFwd:
        case Orientation::DiagBwd:
            return {cfg.twist_map.at(o, fold), {1, 2}};
    }
    return {};
}

std::vector<Cell> line_walk(Cell from, Cell to) {
    std::vector<Cell> out;
    const int dx = std::abs(to.col - from.col);
    const int dy = -std::abs(to.row - from.row);
    const int sx = from.col < to.col ? 1 : -1;
    const int sy = from.row < to.row ? 1 : -1;
    int err = dx + dy;
    Cell c = from;
    out.reserve(static_cast<std::size_t>(std::max(dx, -dy)) + 1);
    while (true) {
        out.push_back(c);
        if (c == to) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            c.col += sx;
        }
        if (e2 <= dx) {
            err += dx;
            c.row += sy;
        }
    }
    return out;
}

std::vector<Cell> FoldTrace::footprint_cells() const {
    std::set<Cell> unique;
    for (const auto& s : stamps) unique.insert(s.cells.begin(), s.cells.end());
    return {unique.begin(), unique.end()};
}

FoldTrace rasterize_crease(Point2 a, Point2 b, FoldType fold, const GridSpec& grid,
                           const RuleConfig& cfg, std::size_t edge,
                           std::optional<Orientation> orientation) {
    FoldTrace trace;
    trace.edge = edge;
    trace.fold = fold;
    trace.orientation = orientation ? *orientation : classify_orientation(a, b, cfg);
    const StitchPlan plan = stitch_rule(trace.orientation, fold, cfg);
    trace.stitch = plan.stitch;

    Cell start = to_cell(a, grid);
    Cell end = to_cell(b, grid);
    // Walk left to right (bottom to top on columns) so footprints that grow
    // up or right never fold back over the walk.
    if (std::pair{end.col, end.row} < std::pair{start.col, start.row}) std::swap(start, end);
    trace.cells = line_walk(start, end);

    const Cell grow = plan.footprint.height == 2 ? Cell{1, 0}
                      : plan.footprint.width == 2 ? Cell{0, 1}
                                                  : Cell{0, 0};
    std::set<Cell> covered;
    for (std::size_t i = 0; i < trace.cells.size(); ++i) {
        const Cell anchor = trace.cells[i];
        if (covered.contains(anchor)) continue;
        Stamp stamp{anchor, {anchor}};
        if (grow != Cell{0, 0}) {
            Cell extra{anchor.row + grow.row, anchor.col + grow.col};
            if (!grid.contains(extra)) {
                // Against the top or right border the footprint grows inward.
                extra = {anchor.row - grow.row, anchor.col - grow.col};
                if (!grid.contains(extra)) {
                    throw GeometryError(std::string(to_string(plan.stitch)) + " footprint at cell (" + std::to_string(anchor.row) + ", " +
                                            std::to_string(anchor.col) + ") exceeds the grid",
                                        {edge});
                }
            }
            stamp.cells.push_back(extra);
        }
        covered.insert(stamp.cells.begin(), stamp.cells.end());
        trace.stamps.push_back(std::move(stamp));
    }
    return trace;
}

std::optional<StitchType> resolve_cell(std::span<const Claim> claims) {
    if (claims.empty()) return std::nullopt;

    // A trace whose own footprints overlap claims the cell only once.
    std::map<std::size_t, Claim> by_trace;
    for (const auto& c : claims) by_trace.emplace(c.trace, c);
    if (by_trace.size() == 1) return by_trace.begin()->second.stitch;

    int diagonals = 0;
    std::optional<StitchType> diagonal;
    std::set<StitchType> horizontal, vertical;
    for (const auto& [_, c] : by_trace) {
        if (is_diagonal(c.orientation)) {
            ++diagonals;
            diagonal = c.stitch;
        } else if (c.orientation == Orientation::Horizontal) {
            horizontal.insert(c.stitch);
        } else {
            vertical.insert(c.stitch);
        }
    }

    auto merge = [](const std::set<StitchType>& s) -> std::optional<StitchType> {
        if (s.empty()) return std::nullopt;
        return s.size() == 1 ? *s.begin() : StitchType::Purl;
    };
    const auto h = merge(horizontal);
    const auto v = merge(vertical);
    if (h && v) return *h == *v ? *h : StitchType::Purl;
    // Crossing diagonals stay plain even on a single axis line.
    if (diagonals >= 2) return StitchType::Knit;
    if (h) return h;
    if (v) return v;
    return diagonal;
}

std::vector<std::optional<StitchType>> resolve_conflicts(const std::vector<FoldTrace>& traces,
                                                         const GridSpec& grid) {
    const auto n = static_cast<std::size_t>(grid.rows) * grid.cols;
    std::vector<std::vector<Claim>> claims(n);
    for (std::size_t t = 0; t < traces.size(); ++t) {
        for (const auto& stamp : traces[t].stamps) {
            for (const Cell& c : stamp.cells) {
                if (!grid.contains(c)) throw GeometryError("footprint cell outside grid", {traces[t].edge});
                claims[static_cast<std::size_t>(c.row) * grid.cols + c.col].push_back(
                    {t, traces[t].orientation, traces[t].stitch});
            }
        }
    }
    std::vector<std::optional<StitchType>> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = resolve_cell(claims[i]);
    return out;
}

std::vector<StitchCell> place_fusible(std::vector<StitchCell> cells, const GridSpec& grid,
                                      const std::vector<FoldTrace>& traces, const RuleConfig& cfg) {
    const auto index = [&](int r, int c) { return static_cast<std::size_t>(r) * grid.cols + c; };
    std::vector<std::size_t> fold_edge(cells.size(), kNoEdge);
    for (const auto& t : traces) {
        for (const auto& stamp : t.stamps) {
            for (const Cell& c : stamp.cells) {
                auto& e = fold_edge[index(c.row, c.col)];
                e = std::min(e, t.edge);
            }
        }
    }

    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            StitchCell& cell = cells[index(r, c)];
            cell.yarn.fusible_fraction = cfg.fusible_fraction;
            if (fold_edge[index(r, c)] != kNoEdge) {
                cell.origin = CellOrigin::Fold;
                cell.edge = fold_edge[index(r, c)];
                cell.yarn.with_fusible = false;
                continue;
            }
            cell.origin = CellOrigin::Panel;
            cell.edge = kNoEdge;
            cell.yarn.with_fusible = true;
            for (int d = 1; d <= cfg.wale_buffer && cell.origin == CellOrigin::Panel; ++d) {
                for (int rr : {r - d, r + d}) {
                    if (rr < 0 || rr >= grid.rows) continue;
                    const std::size_t e = fold_edge[index(rr, c)];
                    if (e == kNoEdge) continue;
                    cell.origin = CellOrigin::FoldBuffer;
                    cell.edge = e;
                    cell.yarn.with_fusible = false;
                    break;
                }
            }
        }
    }
    return cells;
}

namespace {

struct Piece {
    Point2 a;
    Point2 b;
};

Point2 clamp_to(const GridSpec& grid, Point2 p) {
    return {std::clamp(p.x, grid.origin.x, grid.origin.x + grid.width()),
            std::clamp(p.y, grid.origin.y, grid.origin.y + grid.height())};
}

// Rotates the crease about its midpoint onto the band direction.
Piece snap_piece(Point2 a, Point2 b, Orientation o, const GridSpec& grid) {
    const Point2 mid = 0.5 * (a + b);
    const double half = distance(a, b) / 2.0;
    const double phi = band_angle(o) * std::numbers::pi / 180.0;
    Point2 dir{std::cos(phi), std::sin(phi)};
    if (o == Orientation::Vertical) dir = {0.0, 1.0};
    if (o == Orientation::Horizontal) dir = {1.0, 0.0};
    return {clamp_to(grid, mid - half * dir), clamp_to(grid, mid + half * dir)};
}

// Splits into axis, diagonal and axis runs: half the axis remainder on
// either side of a single exact-45 degree run.
std::vector<Piece> staircase_pieces(Point2 a, Point2 b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double m = std::min(std::abs(dx), std::abs(dy));
    const Point2 diag{std::copysign(m, dx), std::copysign(m, dy)};
    const Point2 axis{dx - diag.x, dy - diag.y};
    const Point2 p1 = a + 0.5 * axis;
    const Point2 p2 = p1 + diag;
    std::vector<Piece> out;
    for (const Piece& piece : {Piece{a, p1}, Piece{p1, p2}, Piece{p2, b}}) {
        if (distance(piece.a, piece.b) > kMinEdgeLength) out.push_back(piece);
    }
    return out;
}

// A twist needs both loops of its pair. Keep a twist cell only when it
// belongs to a stamp whose two cells both resolved to that twist and which
// does not overlap a stamp already kept; everything else knits plain.
void pair_twists(StitchChart& chart) {
    std::set<Cell> kept;
    for (const auto& t : chart.trace) {
        if (!is_twist(t.stitch)) continue;
        for (const auto& stamp : t.stamps) {
            const bool intact = std::all_of(stamp.cells.begin(), stamp.cells.end(), [&](Cell c) {
                return chart.at(c.row, c.col).stitch == t.stitch && !kept.contains(c);
            });
            if (intact && stamp.cells.size() == 2) kept.insert(stamp.cells.begin(), stamp.cells.end());
        }
    }
    for (int r = 0; r < chart.grid.rows; ++r) {
        for (int c = 0; c < chart.grid.cols; ++c) {
            auto& cell = chart.at(r, c);
            if (is_twist(cell.stitch) && !kept.contains(Cell{r, c})) cell.stitch = StitchType::Knit;
        }
    }
}

Diagnostic issue(std::size_t edge, const std::string& code, const std::string& what) {
    return {Severity::Error, code, "edge " + std::to_string(edge) + ": " + what, {edge}, {}};
}

}  // namespace

StitchChart compile(const CreasePattern& p, const Gauge& g, const RuleConfig& cfg) {
    check_config(cfg);
    {
        auto diagnostics = validate_pattern(p);
        std::erase_if(diagnostics, [](const Diagnostic& d) { return d.severity != Severity::Error; });
        if (!diagnostics.empty()) throw CompileError(std::move(diagnostics));
    }

    StitchChart chart;
    chart.grid = build_grid(p, g);

    std::vector<Diagnostic> issues;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const Edge& e = p.edges[i];
        if (!e.assignment.is_fold()) continue;
        const FoldType fold = e.assignment.fold_type();
        const Segment seg = p.segment(i);
        try {
            const Orientation o = classify_orientation(seg.a, seg.b, cfg);
            const double off = std::abs(crease_angle_deg(seg.a, seg.b) - band_angle(o));
            const bool in_band = std::min(off, 180.0 - off) <= cfg.orientation_tol_deg + kAngleSlack;
            std::vector<Piece> pieces{{seg.a, seg.b}};
            if (!in_band && cfg.offgrid_policy == OffGridPolicy::Snap) {
                pieces = {snap_piece(seg.a, seg.b, o, chart.grid)};
            } else if (!in_band && cfg.offgrid_policy == OffGridPolicy::Staircase) {
                pieces = staircase_pieces(seg.a, seg.b);
            }
            for (const Piece& piece : pieces) {
                const auto forced = in_band || cfg.offgrid_policy == OffGridPolicy::Snap
                                        ? std::optional<Orientation>(o)
                                        : std::nullopt;
                chart.trace.push_back(rasterize_crease(piece.a, piece.b, fold, chart.grid, cfg, i, forced));
            }
        } catch (const OffGridError& err) {
            issues.push_back(issue(i, "off-grid", err.what()));
        } catch (const GeometryError& err) {
            issues.push_back(issue(i, "geometry", err.what()));
        }
    }
    if (!issues.empty()) throw CompileError(std::move(issues));

    const auto resolved = resolve_conflicts(chart.trace, chart.grid);
    chart.cells.assign(resolved.size(), StitchCell{});
    for (std::size_t i = 0; i < resolved.size(); ++i) {
        chart.cells[i].stitch = resolved[i].value_or(StitchType::Knit);
    }
    pair_twists(chart);
    chart.cells = place_fusible(std::move(chart.cells), chart.grid, chart.trace, cfg);

    for (const auto& t : chart.trace) {
        if (t.orientation == Orientation::Vertical && t.stitch == StitchType::Tuck) {
            chart.warnings.push_back(
                {Severity::Warning, "tuck-tension",
                 "edge " + std::to_string(t.edge) +
                     ": vertical tuck column stacks two loops per needle; expect a stiffer crease "
                     "unless machine tension is reduced locally",
                 {t.edge},
                 {}});
        }
    }
    return chart;
}

}  // namespace knitfold
