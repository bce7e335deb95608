#include "knitfold/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace knitfold {

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string to_string(const Diagnostic& d) {
    std::ostringstream out;
    out << (d.severity == Severity::Error ? "error" : "warning") << " [" << d.code << "] "
        << d.message;
    auto list = [&](const char* label, const std::vector<std::size_t>& ids) {
        if (ids.empty()) return;
        out << " (" << label;
        for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : " ") << ids[i];
        out << ")";
    };
    list("edges", d.edges);
    list("vertices", d.vertices);
    return out.str();
}

CompileError::CompileError(std::vector<Diagnostic> issues)
    : Error([&] {
          std::string msg = "compilation failed";
          for (const auto& d : issues) msg += "\n  " + to_string(d);
          return msg;
      }()),
      issues_(std::move(issues)) {}

const char* to_string(AssignmentKind kind) {
    switch (kind) {
        case AssignmentKind::Mountain: return "M";
        case AssignmentKind::Valley: return "V";
        case AssignmentKind::Boundary: return "B";
        case AssignmentKind::Seam: return "S";
    }
    return "?";
}

const char* to_string(FoldType fold) {
    return fold == FoldType::Mountain ? "mountain" : "valley";
}

double CreasePattern::edge_length(std::size_t edge) const {
    const auto s = segment(edge);
    return distance(s.a, s.b);
}

namespace {

bool indices_valid(const CreasePattern& p, const Edge& e) {
    return e.v1 < p.vertices.size() && e.v2 < p.vertices.size();
}

bool adjacent(const Edge& a, const Edge& b) {
    return a.v1 == b.v1 || a.v1 == b.v2 || a.v2 == b.v1 || a.v2 == b.v2;
}

Diagnostic error(std::string code, std::string message, std::vector<std::size_t> edges = {},
                 std::vector<std::size_t> vertices = {}) {
    return {Severity::Error, std::move(code), std::move(message), std::move(edges),
            std::move(vertices)};
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> find_edge_crossings(const CreasePattern& p) {
    constexpr double eps = kMinEdgeLength;
    struct Extent {
        std::size_t edge;
        double xmin, xmax, ymin, ymax;
    };
    std::vector<Extent> extents;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (!indices_valid(p, p.edges[i])) continue;
        const auto s = p.segment(i);
        extents.push_back({i, std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x),
                           std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)});
    }
    std::stable_sort(extents.begin(), extents.end(),
                     [](const Extent& a, const Extent& b) { return a.xmin < b.xmin; });

    std::vector<std::pair<std::size_t, std::size_t>> hits;
    std::vector<Extent> active;
    for (const auto& cur : extents) {
        std::erase_if(active, [&](const Extent& a) { return a.xmax < cur.xmin - eps; });
        for (const auto& other : active) {
            if (other.ymax < cur.ymin - eps || cur.ymax < other.ymin - eps) continue;
            const Edge& e1 = p.edges[cur.edge];
            const Edge& e2 = p.edges[other.edge];
            if (adjacent(e1, e2)) continue;
            if (segments_intersect(p.segment(cur.edge), p.segment(other.edge), eps)) {
                hits.emplace_back(std::min(cur.edge, other.edge), std::max(cur.edge, other.edge));
            }
        }
        active.push_back(cur);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<Diagnostic> validate_pattern(const CreasePattern& p) {
    std::vector<Diagnostic> out;

    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        if (!is_finite(p.vertices[v])) {
            out.push_back(error("non-finite-vertex", "vertex has non-finite coordinates", {}, {v}));
        }
    }

    bool indices_ok = true;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const Edge& e = p.edges[i];
        if (!indices_valid(p, e)) {
            out.push_back(error("vertex-index", "edge references a vertex out of range", {i}));
            indices_ok = false;
            continue;
        }
        if (e.v1 == e.v2) {
            out.push_back(error("self-loop", "edge starts and ends at the same vertex", {i}, {e.v1}));
        } else if (!(p.edge_length(i) > kMinEdgeLength)) {
            out.push_back(error("zero-length", "edge has zero length", {i}, {e.v1, e.v2}));
        }
        const bool seam = e.assignment.kind == AssignmentKind::Seam;
        if (seam != (e.assignment.seam_pair >= 0)) {
            out.push_back(error("seam-label", "seam pair id must be set exactly on seam edges", {i}));
        }
    }
    if (!indices_ok) return out;

    // Duplicate and overlapping adjacent edges.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const Edge& e = p.edges[i];
        auto key = std::minmax(e.v1, e.v2);
        auto [it, inserted] = seen.emplace(std::pair{key.first, key.second}, i);
        if (!inserted) {
            out.push_back(error("duplicate-edge", "two edges join the same vertices", {it->second, i}));
        }
    }
    std::vector<std::vector<std::size_t>> incident(p.vertices.size());
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        incident[p.edges[i].v1].push_back(i);
        if (p.edges[i].v2 != p.edges[i].v1) incident[p.edges[i].v2].push_back(i);
    }
    std::set<std::pair<std::size_t, std::size_t>> overlapping;
    for (const auto& around : incident) {
        for (std::size_t a = 0; a < around.size(); ++a) {
            for (std::size_t b = a + 1; b < around.size(); ++b) {
                const std::size_t i = std::min(around[a], around[b]);
                const std::size_t j = std::max(around[a], around[b]);
                if (std::minmax(p.edges[i].v1, p.edges[i].v2) ==
                    std::minmax(p.edges[j].v1, p.edges[j].v2))
                    continue;
                if (segments_overlap(p.segment(i), p.segment(j), kMinEdgeLength)) {
                    overlapping.emplace(i, j);
                }
            }
        }
    }
    for (const auto& [i, j] : overlapping) {
        out.push_back(error("overlap", "adjacent edges overlap along their length", {i, j}));
    }

    for (const auto& [a, b] : find_edge_crossings(p)) {
        out.push_back(error("crossing", "non-adjacent edges intersect", {a, b}));
    }

    std::map<int, std::vector<std::size_t>> pairs;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (p.edges[i].assignment.kind == AssignmentKind::Seam && p.edges[i].assignment.seam_pair >= 0) {
            pairs[p.edges[i].assignment.seam_pair].push_back(i);
        }
    }
    for (const auto& [id, members] : pairs) {
        if (members.size() != 2) {
            out.push_back(error("seam-count",
                                "seam pair " + std::to_string(id) + " is used by " +
                                    std::to_string(members.size()) + " edges, expected 2",
                                members));
            continue;
        }
        const double la = p.edge_length(members[0]);
        const double lb = p.edge_length(members[1]);
        if (std::abs(la - lb) > kSeamLengthTolerance) {
            out.push_back(error("seam-length",
                                "seam pair " + std::to_string(id) + " lengths differ: " +
                                    format_shortest(la) + " vs " + format_shortest(lb) + " mm",
                                members));
        }
    }
    return out;
}

std::vector<Diagnostic> maekawa_lint(const CreasePattern& p) {
    struct Counts {
        int mountain = 0, valley = 0, other = 0;
    };
    std::vector<Counts> counts(p.vertices.size());
    for (const Edge& e : p.edges) {
        if (!indices_valid(p, e)) continue;
        for (std::size_t v : {e.v1, e.v2}) {
            switch (e.assignment.kind) {
                case AssignmentKind::Mountain: ++counts[v].mountain; break;
                case AssignmentKind::Valley: ++counts[v].valley; break;
                default: ++counts[v].other; break;
            }
        }
    }
    std::vector<Diagnostic> out;
    for (std::size_t v = 0; v < counts.size(); ++v) {
        const auto& c = counts[v];
        if (c.other > 0 || c.mountain + c.valley == 0) continue;
        if (std::abs(c.mountain - c.valley) != 2) {
            out.push_back({Severity::Warning, "maekawa",
                           "interior vertex has " + std::to_string(c.mountain) + " mountain and " +
                               std::to_string(c.valley) + " valley creases",
                           {},
                           {v}});
        }
    }
    return out;
}

}  // namespace knitfold
