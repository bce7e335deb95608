#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "knitfold/errors.hpp"
#include "knitfold/geometry.hpp"

namespace knitfold {

enum class FoldType { Mountain, Valley };

enum class AssignmentKind { Mountain, Valley, Boundary, Seam };

/// Edge label. Seam edges come in pairs sharing `seam_pair`; every other
/// kind keeps `seam_pair == -1`.
struct CreaseAssignment {
    AssignmentKind kind = AssignmentKind::Boundary;
    int seam_pair = -1;

    static CreaseAssignment mountain() { return {AssignmentKind::Mountain, -1}; }
    static CreaseAssignment valley() { return {AssignmentKind::Valley, -1}; }
    static CreaseAssignment boundary() { return {AssignmentKind::Boundary, -1}; }
    static CreaseAssignment seam(int pair_id) { return {AssignmentKind::Seam, pair_id}; }
    static CreaseAssignment fold(FoldType f) {
        return f == FoldType::Mountain ? mountain() : valley();
    }

    bool is_fold() const {
        return kind == AssignmentKind::Mountain || kind == AssignmentKind::Valley;
    }
    FoldType fold_type() const {
        return kind == AssignmentKind::Mountain ? FoldType::Mountain : FoldType::Valley;
    }

    bool operator==(const CreaseAssignment&) const = default;
};

struct Edge {
    std::size_t v1 = 0;
    std::size_t v2 = 0;
    CreaseAssignment assignment;

    bool operator==(const Edge&) const = default;
};

/// Planar crease pattern in millimetres. Facets are never stored; every
/// consumer works from the edge list.
struct CreasePattern {
    std::string name;
    std::vector<Point2> vertices;
    std::vector<Edge> edges;
    // Unrecognised top-level document keys, carried through serialization.
    nlohmann::json metadata = nlohmann::json::object();

    Segment segment(std::size_t edge) const {
        return {vertices.at(edges.at(edge).v1), vertices.at(edges.at(edge).v2)};
    }
    double edge_length(std::size_t edge) const;

    std::size_t add_vertex(Point2 p) {
        vertices.push_back(p);
        return vertices.size() - 1;
    }
    std::size_t add_edge(std::size_t a, std::size_t b, CreaseAssignment assignment) {
        edges.push_back({a, b, assignment});
        return edges.size() - 1;
    }

    bool operator==(const CreasePattern&) const = default;
};

const char* to_string(AssignmentKind kind);
const char* to_string(FoldType fold);

inline constexpr double kMinEdgeLength = 1e-9;
inline constexpr double kSeamLengthTolerance = 1e-6;

/// Pairs (i < j) of edges that share no vertex but touch or cross.
/// Uses a sweep over x-extents.
std::vector<std::pair<std::size_t, std::size_t>> find_edge_crossings(const CreasePattern& p);

/// Empty iff every structural invariant of the pattern holds.
std::vector<Diagnostic> validate_pattern(const CreasePattern& p);

/// Advisory flat-foldability check: warns at each interior vertex where
/// |#M - #V| != 2. Interior means at least one incident edge and no incident
/// Boundary or Seam edge.
std::vector<Diagnostic> maekawa_lint(const CreasePattern& p);

/// Document I/O for the FOLD subset. parse_pattern throws SchemaError or
/// GeometryError; serialize_pattern output is canonical (sorted keys,
/// shortest round-trip numbers, LF).
CreasePattern parse_pattern(std::string_view text);
std::string serialize_pattern(const CreasePattern& p);

}  // namespace knitfold
