#pragma once

#include "knitfold/pattern.hpp"

namespace knitfold {

/// Swaps every Mountain/Valley label of a generated pattern when flipped.
enum class Polarity { Normal, Flipped };

// Default dimensions below are arbitrary demonstration values.

/// Miura-ori: a (2·rows) × (2·cols) patch of parallelograms with straight
/// horizontal creases and zigzag creases leaning at `gamma_deg`.
struct MiuraParams {
    int rows = 2;
    int cols = 2;
    double a = 20.0;          // parallelogram base, mm
    double b = 20.0;          // parallelogram height, mm
    double gamma_deg = 45.0;  // acute angle, 0 < gamma < 90
    bool snap45 = true;       // requires gamma == 45 so zigzags land on grid diagonals
    Polarity polarity = Polarity::Normal;
    Point2 origin{};
};

/// Yoshimura: rows × cols diamonds, each split by a horizontal crease.
/// Horizontal creases are Mountain and diamond sides Valley (Normal polarity).
struct YoshimuraParams {
    int rows = 2;
    int cols = 3;
    double w = 20.0;  // diamond width, mm
    double h = 20.0;  // diamond height, mm
    bool snap45 = true;  // requires w == h
    Polarity polarity = Polarity::Normal;
    Point2 origin{};
};

/// Kresling flat development: n rectangular panels with vertical Valley
/// borders, one Mountain diagonal per panel running from the panel's
/// lower-left corner to a point `shear` mm along its top edge. The two strip
/// ends are one seam pair.
struct KreslingParams {
    int n = 6;
    double panel_w = 30.0;
    double panel_h = 20.0;
    double shear = 20.0;  // 0 < shear < panel_w
    bool snap45 = true;   // requires shear == panel_h
    Polarity polarity = Polarity::Normal;
    Point2 origin{};
};

/// Kaleidocycle strip of N units. Each unit rectangle carries two crossing
/// Mountain diagonals; interior unit borders are Valley and the strip ends
/// are one seam pair.
struct KaleidocycleParams {
    int units = 8;
    double unit_w = 30.0;
    double unit_h = 30.0;
    bool snap45 = true;  // requires unit_w == unit_h
    Polarity polarity = Polarity::Normal;
    Point2 origin{};
};

CreasePattern gen_miura(const MiuraParams& p);
CreasePattern gen_yoshimura(const YoshimuraParams& p);
CreasePattern gen_kresling(const KreslingParams& p);
CreasePattern gen_kaleidocycle(const KaleidocycleParams& p);

}  // namespace knitfold
