#include "knitfold/tessellations.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace knitfold {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ParamError(message);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

CreaseAssignment fold(FoldType f, Polarity polarity) {
    if (polarity == Polarity::Flipped) {
        f = f == FoldType::Mountain ? FoldType::Valley : FoldType::Mountain;
    }
    return CreaseAssignment::fold(f);
}

FoldType opposite(FoldType f) {
    return f == FoldType::Mountain ? FoldType::Valley : FoldType::Mountain;
}

}  // namespace

CreasePattern gen_miura(const MiuraParams& p) {
    require(p.rows >= 1 && p.cols >= 1, "miura: rows and cols must be >= 1");
    require(positive(p.a) && positive(p.b), "miura: a and b must be > 0");
    require(p.gamma_deg > 0.0 && p.gamma_deg < 90.0,
            "miura: gamma must lie strictly between 0 and 90 degrees");
    require(!p.snap45 || p.gamma_deg == 45.0,
            "miura: snap45 requires gamma = 45; disable snap45 for other angles");

    const int nx = 2 * p.cols + 1;
    const int ny = 2 * p.rows + 1;
    const double offset = p.b / std::tan(p.gamma_deg * std::numbers::pi / 180.0);

    CreasePattern out;
    out.name = "miura-ori " + std::to_string(p.rows) + "x" + std::to_string(p.cols);
    auto id = [&](int i, int j) { return static_cast<std::size_t>(j * nx + i); };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double x = i * p.a + (j % 2 ? offset : 0.0);
            out.add_vertex({p.origin.x + x, p.origin.y + j * p.b});
        }
    }

    // Zigzag line i keeps one assignment along its whole length; neighbouring
    // lines alternate. Horizontal segments flip at every vertex so that the
    // odd crease sits between the two acute sectors.
    auto zigzag = [](int i) { return i % 2 == 0 ? FoldType::Mountain : FoldType::Valley; };

    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i) {
            CreaseAssignment a = CreaseAssignment::boundary();
            if (j != 0 && j != ny - 1) {
                const FoldType f = j % 2 == 0 ? opposite(zigzag(i)) : zigzag(i);
                a = fold(f, p.polarity);
            }
            out.add_edge(id(i, j), id(i + 1, j), a);
        }
    }
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j + 1 < ny; ++j) {
            const bool edge = i == 0 || i == nx - 1;
            out.add_edge(id(i, j), id(i, j + 1),
                         edge ? CreaseAssignment::boundary() : fold(zigzag(i), p.polarity));
        }
    }
    return out;
}

CreasePattern gen_yoshimura(const YoshimuraParams& p) {
    require(p.rows >= 1 && p.cols >= 1, "yoshimura: rows and cols must be >= 1");
    require(positive(p.w) && positive(p.h), "yoshimura: w and h must be > 0");
    require(!p.snap45 || p.w == p.h, "yoshimura: snap45 requires w = h; disable snap45 otherwise");

    CreasePattern out;
    out.name = "yoshimura " + std::to_string(p.rows) + "x" + std::to_string(p.cols);
    const int levels = 2 * p.rows + 1;
    // levels[k] holds vertex ids left-to-right. Even levels sit on diamond
    // corners x = i·w; odd levels sit on diamond mid-heights x = (i + 1/2)·w
    // plus the two strip boundary points.
    std::vector<std::vector<std::size_t>> level(levels);
    for (int k = 0; k < levels; ++k) {
        const double y = p.origin.y + k * p.h / 2.0;
        if (k % 2 == 0) {
            for (int i = 0; i <= p.cols; ++i) level[k].push_back(out.add_vertex({p.origin.x + i * p.w, y}));
        } else {
            level[k].push_back(out.add_vertex({p.origin.x, y}));
            for (int i = 0; i < p.cols; ++i) {
                level[k].push_back(out.add_vertex({p.origin.x + (i + 0.5) * p.w, y}));
            }
            level[k].push_back(out.add_vertex({p.origin.x + p.cols * p.w, y}));
        }
    }

    for (int k = 0; k < levels; ++k) {
        const bool boundary = k == 0 || k == levels - 1;
        for (std::size_t i = 0; i + 1 < level[k].size(); ++i) {
            out.add_edge(level[k][i], level[k][i + 1],
                         boundary ? CreaseAssignment::boundary() : fold(FoldType::Mountain, p.polarity));
        }
    }
    for (int k = 0; k + 1 < levels; ++k) {
        const auto& even = level[k % 2 == 0 ? k : k + 1];
        const auto& odd = level[k % 2 == 0 ? k + 1 : k];
        // Corner i joins mid points i-1 and i (odd-level index i and i+1).
        for (int i = 0; i <= p.cols; ++i) {
            if (i > 0) out.add_edge(even[i], odd[i], fold(FoldType::Valley, p.polarity));
            if (i < p.cols) out.add_edge(even[i], odd[i + 1], fold(FoldType::Valley, p.polarity));
        }
        out.add_edge(level[k].front(), level[k + 1].front(), CreaseAssignment::boundary());
        out.add_edge(level[k].back(), level[k + 1].back(), CreaseAssignment::boundary());
    }
    return out;
}

CreasePattern gen_kresling(const KreslingParams& p) {
    require(p.n >= 3, "kresling: n must be >= 3");
    require(positive(p.panel_w) && positive(p.panel_h), "kresling: panel sizes must be > 0");
    require(p.shear > 0.0 && p.shear < p.panel_w, "kresling: shear must satisfy 0 < shear < panel_w");
    require(!p.snap45 || p.shear == p.panel_h,
            "kresling: snap45 requires shear = panel_h; disable snap45 otherwise");

    CreasePattern out;
    out.name = "kresling n=" + std::to_string(p.n);
    const double x0 = p.origin.x;
    const double y0 = p.origin.y;
    std::vector<std::size_t> bottom, top, apex;
    for (int k = 0; k <= p.n; ++k) {
        bottom.push_back(out.add_vertex({x0 + k * p.panel_w, y0}));
        top.push_back(out.add_vertex({x0 + k * p.panel_w, y0 + p.panel_h}));
    }
    for (int k = 0; k < p.n; ++k) {
        apex.push_back(out.add_vertex({x0 + k * p.panel_w + p.shear, y0 + p.panel_h}));
    }

    for (int k = 0; k < p.n; ++k) {
        out.add_edge(bottom[k], bottom[k + 1], CreaseAssignment::boundary());
        out.add_edge(top[k], apex[k], CreaseAssignment::boundary());
        out.add_edge(apex[k], top[k + 1], CreaseAssignment::boundary());
        out.add_edge(bottom[k], apex[k], fold(FoldType::Mountain, p.polarity));
    }
    for (int k = 0; k <= p.n; ++k) {
        const bool end = k == 0 || k == p.n;
        out.add_edge(bottom[k], top[k],
                     end ? CreaseAssignment::seam(0) : fold(FoldType::Valley, p.polarity));
    }
    return out;
}

CreasePattern gen_kaleidocycle(const KaleidocycleParams& p) {
    require(p.units >= 6,
            "kaleidocycle: at least 6 tetrahedral units are needed for continuous rotation (got " +
                std::to_string(p.units) + ")");
    require(positive(p.unit_w) && positive(p.unit_h), "kaleidocycle: unit sizes must be > 0");
    require(!p.snap45 || p.unit_w == p.unit_h,
            "kaleidocycle: snap45 requires unit_w = unit_h; disable snap45 otherwise");

    CreasePattern out;
    out.name = "kaleidocycle N=" + std::to_string(p.units);
    const double x0 = p.origin.x;
    const double y0 = p.origin.y;
    std::vector<std::size_t> bottom, top, center;
    for (int k = 0; k <= p.units; ++k) {
        bottom.push_back(out.add_vertex({x0 + k * p.unit_w, y0}));
        top.push_back(out.add_vertex({x0 + k * p.unit_w, y0 + p.unit_h}));
    }
    for (int k = 0; k < p.units; ++k) {
        center.push_back(out.add_vertex({x0 + (k + 0.5) * p.unit_w, y0 + p.unit_h / 2.0}));
    }

    for (int k = 0; k < p.units; ++k) {
        out.add_edge(bottom[k], bottom[k + 1], CreaseAssignment::boundary());
        out.add_edge(top[k], top[k + 1], CreaseAssignment::boundary());
        for (std::size_t corner : {bottom[k], bottom[k + 1], top[k], top[k + 1]}) {
            out.add_edge(center[k], corner, fold(FoldType::Mountain, p.polarity));
        }
    }
    for (int k = 0; k <= p.units; ++k) {
        const bool end = k == 0 || k == p.units;
        out.add_edge(bottom[k], top[k],
                     end ? CreaseAssignment::seam(0) : fold(FoldType::Valley, p.polarity));
    }
    return out;
}

}  // namespace knitfold
