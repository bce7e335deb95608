#include "knitfold/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace knitfold {

double distance(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

BoundingBox bounding_box(const std::vector<Point2>& points) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    BoundingBox box{{inf, inf}, {-inf, -inf}};
    for (const auto& p : points) {
        box.min.x = std::min(box.min.x, p.x);
        box.min.y = std::min(box.min.y, p.y);
        box.max.x = std::max(box.max.x, p.x);
        box.max.y = std::max(box.max.y, p.y);
    }
    if (points.empty()) box = {};
    return box;
}

namespace {

double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Signed distance of p from the infinite line through s.
double side(const Segment& s, Point2 p) {
    const double len = distance(s.a, s.b);
    if (len == 0.0) return distance(s.a, p);
    return cross(s.a, s.b, p) / len;
}

// p is known to be (nearly) on the line of s; check it lies between the ends.
bool within(const Segment& s, Point2 p, double eps) {
    const double len = distance(s.a, s.b);
    if (len == 0.0) return distance(s.a, p) <= eps;
    const double t = ((p.x - s.a.x) * (s.b.x - s.a.x) + (p.y - s.a.y) * (s.b.y - s.a.y)) / len;
    return t >= -eps && t <= len + eps;
}

int sign(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t, double eps) {
    const int d1 = sign(side(t, s.a), eps);
    const int d2 = sign(side(t, s.b), eps);
    const int d3 = sign(side(s, t.a), eps);
    const int d4 = sign(side(s, t.b), eps);

    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && within(t, s.a, eps)) return true;
    if (d2 == 0 && within(t, s.b, eps)) return true;
    if (d3 == 0 && within(s, t.a, eps)) return true;
    if (d4 == 0 && within(s, t.b, eps)) return true;
    return false;
}

bool segments_overlap(const Segment& s, const Segment& t, double eps) {
    if (sign(side(s, t.a), eps) != 0 || sign(side(s, t.b), eps) != 0) return false;
    const double len = distance(s.a, s.b);
    if (len == 0.0) return false;
    const Point2 dir{(s.b.x - s.a.x) / len, (s.b.y - s.a.y) / len};
    auto proj = [&](Point2 p) { return (p.x - s.a.x) * dir.x + (p.y - s.a.y) * dir.y; };
    const double lo = std::max(0.0, std::min(proj(t.a), proj(t.b)));
    const double hi = std::min(len, std::max(proj(t.a), proj(t.b)));
    return hi - lo > eps;
}

std::string format_shortest(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace knitfold
