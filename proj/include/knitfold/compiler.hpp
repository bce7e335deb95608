#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knitfold/gauge.hpp"
#include "knitfold/pattern.hpp"

namespace knitfold {

/// Crease direction in physical space. DiagFwd leans like '/', DiagBwd like '\'.
enum class Orientation { Horizontal, Vertical, DiagFwd, DiagBwd };

enum class StitchType { Knit, Purl, Tuck, TwistLeft, TwistRight };

enum class OffGridPolicy { Snap, Staircase, Reject };

inline bool is_diagonal(Orientation o) {
    return o == Orientation::DiagFwd || o == Orientation::DiagBwd;
}
inline bool is_twist(StitchType s) {
    return s == StitchType::TwistLeft || s == StitchType::TwistRight;
}
Orientation mirrored(Orientation o);

const char* to_string(Orientation o);
const char* to_string(StitchType s);
const char* to_string(OffGridPolicy p);

struct YarnSpec {
    bool with_fusible = true;
    double fusible_fraction = 0.52;  // fusible weight relative to acrylic

    bool operator==(const YarnSpec&) const = default;
};

enum class CellOrigin { Panel, Fold, FoldBuffer };

inline constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

/// One chart cell. `edge` names the crease behind a Fold/FoldBuffer cell.
struct StitchCell {
    StitchType stitch = StitchType::Knit;
    YarnSpec yarn{};
    CellOrigin origin = CellOrigin::Panel;
    std::size_t edge = kNoEdge;

    bool operator==(const StitchCell&) const = default;
};

/// Twist handedness for each (diagonal, fold) pair. Always total.
class TwistMap {
public:
    TwistMap();  // default handedness table

    StitchType at(Orientation diagonal, FoldType fold) const;
    void set(Orientation diagonal, FoldType fold, StitchType twist);

    bool operator==(const TwistMap&) const = default;

private:
    static std::size_t slot(Orientation diagonal, FoldType fold);
    std::array<StitchType, 4> table_;
};

struct RuleConfig {
    double orientation_tol_deg = 10.0;
    OffGridPolicy offgrid_policy = OffGridPolicy::Reject;
    TwistMap twist_map{};
    int wale_buffer = 1;
    double fusible_fraction = 0.52;
};

/// Throws ParamError when a config value is out of range.
void check_config(const RuleConfig& cfg);

struct Footprint {
    int height = 1;
    int width = 1;

    bool operator==(const Footprint&) const = default;
};

struct StitchPlan {
    StitchType stitch = StitchType::Knit;
    Footprint footprint{};

    bool operator==(const StitchPlan&) const = default;
};

/// One footprint placement. cells[0] is the anchor; a tuck adds the cell
/// above, a twist the cell to the right (or below/left when clamped).
struct Stamp {
    Cell anchor;
    std::vector<Cell> cells;
};

/// Audit record for one rasterized crease (or one piece of a staircased
/// crease). `cells` is the 8-connected walk between the endpoint cells.
struct FoldTrace {
    std::size_t edge = 0;
    Orientation orientation = Orientation::Horizontal;
    FoldType fold = FoldType::Mountain;
    StitchType stitch = StitchType::Knit;
    std::vector<Cell> cells;
    std::vector<Stamp> stamps;

    std::vector<Cell> footprint_cells() const;
};

struct StitchChart {
    GridSpec grid;
    std::vector<StitchCell> cells;  // row-major, rows × cols
    std::vector<FoldTrace> trace;
    std::vector<Diagnostic> warnings;

    const StitchCell& at(int row, int col) const {
        return cells.at(static_cast<std::size_t>(row) * grid.cols + col);
    }
    StitchCell& at(int row, int col) {
        return cells.at(static_cast<std::size_t>(row) * grid.cols + col);
    }
};

/// Crease angle from +x in degrees, folded into [0, 180).
double crease_angle_deg(Point2 a, Point2 b);

/// Classifies in millimetre space. Outside every band: throws OffGridError
/// under Reject, otherwise returns the nearest band.
Orientation classify_orientation(Point2 a, Point2 b, const RuleConfig& cfg);

StitchPlan stitch_rule(Orientation o, FoldType fold, const RuleConfig& cfg);

/// Cells of an 8-connected integer line walk from `from` to `to` inclusive.
std::vector<Cell> line_walk(Cell from, Cell to);

/// Rasterizes one crease segment whose orientation is already within a band
/// (or is forced by `orientation`).
FoldTrace rasterize_crease(Point2 a, Point2 b, FoldType fold, const GridSpec& grid,
                           const RuleConfig& cfg, std::size_t edge = 0,
                           std::optional<Orientation> orientation = std::nullopt);

/// A trace's claim on one cell, as seen by conflict resolution.
struct Claim {
    std::size_t trace = 0;
    Orientation orientation = Orientation::Horizontal;
    StitchType stitch = StitchType::Knit;
};

/// Resolution rule for a single cell; nullopt when nothing claims it.
/// Each trace counts once. Where horizontal meets vertical the common stitch
/// wins, or Purl if they differ. Otherwise two or more diagonals leave Knit,
/// and an axis-aligned stitch beats a single diagonal.
std::optional<StitchType> resolve_cell(std::span<const Claim> claims);

/// Per-cell stitch (row-major) from every trace footprint.
std::vector<std::optional<StitchType>> resolve_conflicts(const std::vector<FoldTrace>& traces,
                                                         const GridSpec& grid);

/// Assigns origin and yarn to every cell from the trace footprints.
std::vector<StitchCell> place_fusible(std::vector<StitchCell> cells, const GridSpec& grid,
                                      const std::vector<FoldTrace>& traces, const RuleConfig& cfg);

/// Full pipeline. Boundary and Seam edges are never programmed. Throws
/// CompileError listing every failing edge.
StitchChart compile(const CreasePattern& p, const Gauge& g, const RuleConfig& cfg = {});

}  // namespace knitfold
