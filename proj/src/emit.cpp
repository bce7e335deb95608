#include "knitfold/emit.hpp"

#include <algorithm>
#include <sstream>

namespace knitfold {

namespace {

constexpr const char* kLegend =
    "# stitch: .=knit -=purl ^=tuck /=twist-left \\=twist-right | yarn: #=fusible o=acrylic";

std::string gauge_text(const Gauge& g) {
    return format_shortest(g.stitch_w) + "x" + format_shortest(g.stitch_h);
}

}  // namespace

char stitch_symbol(StitchType s) {
    switch (s) {
        case StitchType::Knit: return '.';
        case StitchType::Purl: return '-';
        case StitchType::Tuck: return '^';
        case StitchType::TwistLeft: return '/';
        case StitchType::TwistRight: return '\\';
    }
    return '?';
}

StitchType stitch_from_symbol(char c) {
    switch (c) {
        case '.': return StitchType::Knit;
        case '-': return StitchType::Purl;
        case '^': return StitchType::Tuck;
        case '/': return StitchType::TwistLeft;
        case '\\': return StitchType::TwistRight;
        default: throw SchemaError(std::string("unknown stitch symbol '") + c + "'");
    }
}

std::string render_text_chart(const StitchChart& chart) {
    const auto& g = chart.grid;
    std::string out = "# rows=" + std::to_string(g.rows) + " cols=" + std::to_string(g.cols) +
                      " gauge=" + gauge_text(g.gauge) + "\n" + kLegend + "\n";
    for (int r = g.rows - 1; r >= 0; --r) {
        for (int c = 0; c < g.cols; ++c) out += stitch_symbol(chart.at(r, c).stitch);
        out += '\n';
    }
    out += '\n';
    for (int r = g.rows - 1; r >= 0; --r) {
        for (int c = 0; c < g.cols; ++c) out += chart.at(r, c).yarn.with_fusible ? '#' : 'o';
        out += '\n';
    }
    return out;
}

StitchChart parse_text_chart(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) throw SchemaError("chart text must end with a newline");
    }
    if (lines.size() < 2) throw SchemaError("chart text is missing its header");

    StitchChart chart;
    {
        std::istringstream head(lines[0]);
        std::string hash, rows, cols, gauge;
        head >> hash >> rows >> cols >> gauge;
        try {
            if (hash != "#" || rows.rfind("rows=", 0) != 0 || cols.rfind("cols=", 0) != 0 ||
                gauge.rfind("gauge=", 0) != 0)
                throw SchemaError("");
            chart.grid.rows = std::stoi(rows.substr(5));
            chart.grid.cols = std::stoi(cols.substr(5));
            const auto g = gauge.substr(6);
            const auto x = g.find('x');
            if (x == std::string::npos) throw SchemaError("");
            chart.grid.gauge = {std::stod(g.substr(0, x)), std::stod(g.substr(x + 1))};
        } catch (const std::exception&) {
            throw SchemaError("malformed chart header: " + lines[0]);
        }
    }
    const int rows = chart.grid.rows;
    const int cols = chart.grid.cols;
    if (rows < 1 || cols < 1) throw SchemaError("chart must have at least one row and column");
    if (lines[1] != kLegend) throw SchemaError("missing or altered symbol legend line");

    const std::size_t expected = 2 + static_cast<std::size_t>(rows) * 2 + 1;
    if (lines.size() != expected || !lines[2 + rows].empty()) {
        throw SchemaError("chart body does not match rows=" + std::to_string(rows));
    }
    chart.cells.assign(static_cast<std::size_t>(rows) * cols, StitchCell{});
    for (int i = 0; i < rows; ++i) {
        const int r = rows - 1 - i;
        const std::string& stitches = lines[2 + i];
        const std::string& yarn = lines[3 + rows + i];
        if (static_cast<int>(stitches.size()) != cols || static_cast<int>(yarn.size()) != cols) {
            throw SchemaError("chart row " + std::to_string(r) + " does not have " +
                              std::to_string(cols) + " cells");
        }
        for (int c = 0; c < cols; ++c) {
            StitchCell& cell = chart.at(r, c);
            cell.stitch = stitch_from_symbol(stitches[c]);
            if (yarn[c] != '#' && yarn[c] != 'o') {
                throw SchemaError(std::string("unknown yarn symbol '") + yarn[c] + "'");
            }
            cell.yarn.with_fusible = yarn[c] == '#';
            cell.origin = cell.yarn.with_fusible            ? CellOrigin::Panel
                          : cell.stitch != StitchType::Knit ? CellOrigin::Fold
                                                            : CellOrigin::FoldBuffer;
        }
    }
    return chart;
}

std::string cell_fill(const StitchCell& cell) {
    switch (cell.stitch) {
        case StitchType::Knit: return cell.yarn.with_fusible ? "#B0B0B0" : "#FFFFFF";
        case StitchType::Purl: return "#FFD800";
        case StitchType::Tuck: return "#3A7BD5";
        case StitchType::TwistLeft: return "#E03030";
        case StitchType::TwistRight: return "#30A040";
    }
    return "#000000";
}

std::string render_svg_chart(const StitchChart& chart) {
    constexpr int kCell = 10;
    const auto& g = chart.grid;
    const int w = g.cols * kCell;
    const int h = g.rows * kCell;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
        << "<title>stitch chart " << g.rows << "x" << g.cols << " gauge " << gauge_text(g.gauge)
        << "</title>\n"
        << "<g stroke=\"#606060\" stroke-width=\"0.5\">\n";
    for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.cols; ++c) {
            out << "<rect x=\"" << c * kCell << "\" y=\"" << (g.rows - 1 - r) * kCell
                << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\""
                << cell_fill(chart.at(r, c)) << "\"/>\n";
        }
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

const char* to_string(NeedleAction a) {
    switch (a) {
        case NeedleAction::KnitFront: return "KnitFront";
        case NeedleAction::KnitBack: return "KnitBack";
        case NeedleAction::TuckHold: return "TuckHold";
        case NeedleAction::CrossLeft: return "CrossLeft";
        case NeedleAction::CrossRight: return "CrossRight";
    }
    return "?";
}

const char* to_string(Carrier c) { return c == Carrier::Acrylic ? "A" : "AF"; }

const char* to_string(PassDirection d) {
    return d == PassDirection::LeftToRight ? "L2R" : "R2L";
}

MachineProgram emit_machine_program(const StitchChart& chart) {
    const auto& g = chart.grid;
    MachineProgram program;
    program.gauge = g.gauge;

    // Tuck roles per column: pair runs of Tuck cells from the bottom; the
    // lower cell of each pair holds, everything else knits through.
    std::vector<bool> hold(chart.cells.size(), false);
    for (int c = 0; c < g.cols; ++c) {
        int r = 0;
        while (r < g.rows) {
            if (chart.at(r, c).stitch != StitchType::Tuck) {
                ++r;
                continue;
            }
            int end = r;
            while (end < g.rows && chart.at(end, c).stitch == StitchType::Tuck) ++end;
            for (int k = r; k + 1 < end; k += 2) hold[static_cast<std::size_t>(k) * g.cols + c] = true;
            r = end;
        }
    }

    for (int r = 0; r < g.rows; ++r) {
        std::vector<NeedleOp> ops(static_cast<std::size_t>(g.cols));
        int c = 0;
        while (c < g.cols) {
            const StitchCell& cell = chart.at(r, c);
            const Carrier carrier = cell.yarn.with_fusible ? Carrier::AcrylicFusible : Carrier::Acrylic;
            ops[c] = {c, NeedleAction::KnitFront, carrier};
            switch (cell.stitch) {
                case StitchType::Knit: break;
                case StitchType::Purl: ops[c].action = NeedleAction::KnitBack; break;
                case StitchType::Tuck:
                    if (hold[static_cast<std::size_t>(r) * g.cols + c]) ops[c].action = NeedleAction::TuckHold;
                    break;
                case StitchType::TwistLeft:
                case StitchType::TwistRight: {
                    if (c + 1 >= g.cols || chart.at(r, c + 1).stitch != cell.stitch) {
                        throw EmitError("unpaired twist at row " + std::to_string(r) + ", col " +
                                        std::to_string(c));
                    }
                    const auto action = cell.stitch == StitchType::TwistLeft ? NeedleAction::CrossLeft
                                                                             : NeedleAction::CrossRight;
                    const StitchCell& next = chart.at(r, c + 1);
                    ops[c].action = action;
                    ops[c + 1] = {c + 1, action,
                                  next.yarn.with_fusible ? Carrier::AcrylicFusible : Carrier::Acrylic};
                    ++c;
                    break;
                }
            }
            ++c;
        }
        RowPass pass{r, r % 2 == 0 ? PassDirection::LeftToRight : PassDirection::RightToLeft,
                     std::move(ops)};
        if (pass.direction == PassDirection::RightToLeft) std::reverse(pass.ops.begin(), pass.ops.end());
        program.passes.push_back(std::move(pass));
    }
    return program;
}

std::string render_machine_program(const MachineProgram& program) {
    std::string out = "# carriers: ";
    for (std::size_t i = 0; i < program.carriers.size(); ++i) {
        out += (i ? "," : "") + std::string(to_string(program.carriers[i]));
    }
    out += " gauge=" + gauge_text(program.gauge) + "\n";
    for (const auto& pass : program.passes) {
        out += "ROW " + std::to_string(pass.row) + " DIR " + to_string(pass.direction) + " |";
        for (const auto& op : pass.ops) {
            out += " " + std::to_string(op.needle) + ":" + to_string(op.action) + ":" + to_string(op.carrier);
        }
        out += "\n";
    }
    return out;
}

int carrier_changes(const RowPass& pass) {
    int changes = 0;
    for (std::size_t i = 1; i < pass.ops.size(); ++i) {
        changes += pass.ops[i].carrier != pass.ops[i - 1].carrier;
    }
    return changes;
}

}  // namespace knitfold
