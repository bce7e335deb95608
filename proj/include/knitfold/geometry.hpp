#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace knitfold {

/// Planar point in millimetres.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2&) const = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

double distance(Point2 a, Point2 b);
bool is_finite(Point2 p);

struct BoundingBox {
    Point2 min;
    Point2 max;

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
};

BoundingBox bounding_box(const std::vector<Point2>& points);

struct Segment {
    Point2 a;
    Point2 b;
};

/// True when the closed segments share at least one point, within `eps` mm.
bool segments_intersect(const Segment& s, const Segment& t, double eps = 1e-9);

/// True when the segments are collinear and overlap along a stretch longer
/// than `eps`.
bool segments_overlap(const Segment& s, const Segment& t, double eps = 1e-9);

/// Formats a double with the shortest decimal text that round-trips.
std::string format_shortest(double v);

}  // namespace knitfold
