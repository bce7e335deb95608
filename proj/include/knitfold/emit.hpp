#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knitfold/compiler.hpp"

namespace knitfold {

// Text chart
//
//   # rows=R cols=C gauge=WxH
//   # stitch: .=knit -=purl ^=tuck /=twist-left \=twist-right | yarn: #=fusible o=acrylic
//   <stitch block, row R-1 first>
//
//   <yarn block, row R-1 first>
//
// Charts are printed top row first, so they read bottom-up in knitting order.

char stitch_symbol(StitchType s);
StitchType stitch_from_symbol(char c);

std::string render_text_chart(const StitchChart& chart);

/// Inverse of render_text_chart. Cell origins are not part of the text; they
/// are reconstructed as Panel (fusible), Fold (acrylic, non-knit) or
/// FoldBuffer (acrylic knit). Throws SchemaError on malformed input.
StitchChart parse_text_chart(std::string_view text);

/// Fill colour used for a cell in the SVG chart.
std::string cell_fill(const StitchCell& cell);

/// SVG 1.1 chart, one 10×10 rect per cell, row-major from the bottom row.
std::string render_svg_chart(const StitchChart& chart);

enum class PassDirection { LeftToRight, RightToLeft };

enum class NeedleAction { KnitFront, KnitBack, TuckHold, CrossLeft, CrossRight };

enum class Carrier { Acrylic, AcrylicFusible };

struct NeedleOp {
    int needle = 0;
    NeedleAction action = NeedleAction::KnitFront;
    Carrier carrier = Carrier::AcrylicFusible;

    bool operator==(const NeedleOp&) const = default;
};

struct RowPass {
    int row = 0;
    PassDirection direction = PassDirection::LeftToRight;
    std::vector<NeedleOp> ops;

    bool operator==(const RowPass&) const = default;
};

struct MachineProgram {
    Gauge gauge;
    std::vector<Carrier> carriers{Carrier::Acrylic, Carrier::AcrylicFusible};
    std::vector<RowPass> passes;

    bool operator==(const MachineProgram&) const = default;
};

const char* to_string(NeedleAction a);
const char* to_string(Carrier c);
const char* to_string(PassDirection d);

/// One pass per chart row, alternating direction from left-to-right.
/// A Tuck cell holds (TuckHold) when the cell above it is also Tuck and it
/// is the lower half of its pair counted from the bottom of the column run;
/// the upper half knits through. Twist pairs become CrossLeft/CrossRight on
/// both needles. Throws EmitError on an unpaired twist cell.
MachineProgram emit_machine_program(const StitchChart& chart);

/// Line format: `# carriers: A,AF gauge=WxH` then
/// `ROW r DIR L2R | needle:action:carrier ...` per pass.
std::string render_machine_program(const MachineProgram& program);

/// Number of carrier switches within one pass.
int carrier_changes(const RowPass& pass);

}  // namespace knitfold
