#include <gtest/gtest.h>

#include <random>

#include "knitfold/errors.hpp"
#include "knitfold/pattern.hpp"
#include "knitfold/tessellations.hpp"
#include "support/base_pattern.hpp"
#include "support/oracles.hpp"

using namespace knitfold;
using namespace knitfold::test_support;

namespace {

const char* kSquareWithCrease = R"({
  "frame_unit": "mm",
  "file_title": "square",
  "vertices_coords": [[0,0],[10,0],[10,5],[10,10],[0,10],[0,5]],
  "edges_vertices": [[0,1],[1,2],[2,3],[3,4],[4,5],[5,0],[5,2]],
  "edges_assignment": ["B","B","B","B","B","B","M"]
})";

std::size_t count_kind(const CreasePattern& p, AssignmentKind kind) {
    return std::count_if(p.edges.begin(), p.edges.end(),
                         [&](const Edge& e) { return e.assignment.kind == kind; });
}

bool has_code(const std::vector<Diagnostic>& ds, const std::string& code) {
    return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == code; });
}

CreasePattern seam_strip(double right_len) {
    CreasePattern p;
    const auto a = p.add_vertex({0, 0});
    const auto b = p.add_vertex({20, 0});
    const auto c = p.add_vertex({20, right_len});
    const auto d = p.add_vertex({0, 10});
    p.add_edge(a, b, CreaseAssignment::boundary());
    p.add_edge(b, c, CreaseAssignment::seam(0));
    p.add_edge(c, d, CreaseAssignment::boundary());
    p.add_edge(d, a, CreaseAssignment::seam(0));
    return p;
}

}  // namespace

TEST(ParsePattern, MinimalSquareWithMountainCrease) {
    const auto p = parse_pattern(kSquareWithCrease);
    EXPECT_EQ(p.vertices.size(), 6u);
    EXPECT_EQ(p.edges.size(), 7u);
    EXPECT_EQ(count_kind(p, AssignmentKind::Mountain), 1u);
    EXPECT_EQ(p.name, "square");
}

TEST(ParsePattern, OutOfRangeVertexIsSchemaError) {
    const char* doc = R"({"frame_unit":"mm","vertices_coords":[[0,0],[1,0],[1,1],[0,1],[0,2],[1,2]],
        "edges_vertices":[[0,99]],"edges_assignment":["M"]})";
    EXPECT_THROW(parse_pattern(doc), SchemaError);
}

TEST(ParsePattern, BasePatternAssignments) {
    const auto p = parse_pattern(serialize_pattern(base_pattern()));
    EXPECT_EQ(count_kind(p, AssignmentKind::Valley), 4u);
    EXPECT_EQ(count_kind(p, AssignmentKind::Mountain), 4u);
    EXPECT_EQ(count_kind(p, AssignmentKind::Boundary), 8u);
}

TEST(ParsePattern, SchemaErrors) {
    EXPECT_THROW(parse_pattern("{not json"), SchemaError);
    EXPECT_THROW(parse_pattern("[]"), SchemaError);
    EXPECT_THROW(parse_pattern(R"({"frame_unit":"cm","vertices_coords":[[0,0]],"edges_vertices":[],
        "edges_assignment":[]})"),
                 SchemaError);
    EXPECT_THROW(parse_pattern(R"({"frame_unit":"mm","vertices_coords":[[0,0],[1,0]],
        "edges_vertices":[[0,1]],"edges_assignment":["X"]})"),
                 SchemaError);
    EXPECT_THROW(parse_pattern(R"({"frame_unit":"mm","vertices_coords":[[0,"a"],[1,0]],
        "edges_vertices":[[0,1]],"edges_assignment":["M"]})"),
                 SchemaError);
    EXPECT_THROW(parse_pattern(R"({"frame_unit":"mm","vertices_coords":[[0,0],[1,0]],
        "edges_vertices":[[0,1]],"edges_assignment":["M","V"]})"),
                 SchemaError);
    // Seam labels need the pair array.
    EXPECT_THROW(parse_pattern(R"({"frame_unit":"mm","vertices_coords":[[0,0],[1,0]],
        "edges_vertices":[[0,1]],"edges_assignment":["S"]})"),
                 SchemaError);
}

TEST(ParsePattern, GeometryErrorNamesEdges) {
    const char* doc = R"({"frame_unit":"mm","vertices_coords":[[0,0],[10,10],[0,10],[10,0]],
        "edges_vertices":[[0,1],[2,3]],"edges_assignment":["M","V"]})";
    try {
        parse_pattern(doc);
        FAIL() << "expected GeometryError";
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.edges(), (std::vector<std::size_t>{0, 1}));
    }
}

TEST(ParsePattern, UnknownKeysKeptAsMetadata) {
    const char* doc = R"({"frame_unit":"mm","vertices_coords":[[0,0],[1,0]],"edges_vertices":[[0,1]],
        "edges_assignment":["B"],"frame_author":"someone"})";
    const auto p = parse_pattern(doc);
    EXPECT_EQ(p.metadata.at("frame_author"), "someone");
    EXPECT_NE(serialize_pattern(p).find("frame_author"), std::string::npos);
}

TEST(SerializePattern, CanonicalFixedPoint) {
    const std::string once = serialize_pattern(parse_pattern(kSquareWithCrease));
    const std::string twice = serialize_pattern(parse_pattern(once));
    EXPECT_EQ(once, twice);
    EXPECT_EQ(once.back(), '\n');
    EXPECT_EQ(once.find('\r'), std::string::npos);
    // Sorted keys.
    EXPECT_LT(once.find("edges_assignment"), once.find("edges_vertices"));
    EXPECT_LT(once.find("file_title"), once.find("frame_unit"));
    EXPECT_LT(once.find("frame_unit"), once.find("vertices_coords"));
}

TEST(SerializePattern, RoundTripIsIdentity) {
    for (const auto& p : {base_pattern(), gen_miura({}), gen_kresling({}), gen_kaleidocycle({})}) {
        EXPECT_EQ(parse_pattern(serialize_pattern(p)), p) << p.name;
    }
}

TEST(SerializePattern, SeamPairIdsPreserved) {
    auto p = seam_strip(10);
    p.edges[1].assignment.seam_pair = 7;
    p.edges[3].assignment.seam_pair = 7;
    const auto q = parse_pattern(serialize_pattern(p));
    EXPECT_EQ(q.edges[1].assignment.seam_pair, 7);
    EXPECT_EQ(q.edges[3].assignment.seam_pair, 7);
    EXPECT_EQ(q.edges[0].assignment.seam_pair, -1);
}

TEST(SerializePattern, EmptyEdgeList) {
    CreasePattern p;
    p.add_vertex({1.5, -2});
    const auto q = parse_pattern(serialize_pattern(p));
    EXPECT_EQ(q, p);
}

TEST(SerializePattern, ShortestRoundTripNumbers) {
    CreasePattern p;
    p.add_vertex({0.1, 1.0 / 3.0});
    p.add_vertex({1e-3, 2});
    p.add_edge(0, 1, CreaseAssignment::mountain());
    const std::string text = serialize_pattern(p);
    EXPECT_NE(text.find("0.1"), std::string::npos);
    EXPECT_NE(text.find("0.3333333333333333"), std::string::npos);
    EXPECT_EQ(parse_pattern(text).vertices[0].y, 1.0 / 3.0);
}

TEST(ValidatePattern, CrossingCreases) {
    CreasePattern p;
    p.add_vertex({0, 0});
    p.add_vertex({10, 10});
    p.add_vertex({0, 10});
    p.add_vertex({10, 0});
    p.add_edge(0, 1, CreaseAssignment::mountain());
    p.add_edge(2, 3, CreaseAssignment::valley());
    const auto ds = validate_pattern(p);
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].code, "crossing");
    EXPECT_EQ(ds[0].severity, Severity::Error);
}

TEST(ValidatePattern, MiuraIsClean) { EXPECT_TRUE(validate_pattern(gen_miura({})).empty()); }

TEST(ValidatePattern, SeamLengthMismatch) {
    const auto ds = validate_pattern(seam_strip(10.1));
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].code, "seam-length");
    EXPECT_TRUE(validate_pattern(seam_strip(10.0)).empty());
}

TEST(ValidatePattern, StructuralDefects) {
    CreasePattern p;
    p.add_vertex({0, 0});
    p.add_vertex({1, 0});
    p.add_vertex({1, 1e-12});
    p.add_edge(0, 0, CreaseAssignment::mountain());
    EXPECT_TRUE(has_code(validate_pattern(p), "self-loop"));

    p.edges = {{1, 2, CreaseAssignment::mountain()}};
    EXPECT_TRUE(has_code(validate_pattern(p), "zero-length"));

    p.edges = {{0, 1, CreaseAssignment::mountain()}, {1, 0, CreaseAssignment::valley()}};
    EXPECT_TRUE(has_code(validate_pattern(p), "duplicate-edge"));

    p.edges = {{0, 5, CreaseAssignment::mountain()}};
    EXPECT_TRUE(has_code(validate_pattern(p), "vertex-index"));

    p.vertices.push_back({std::nan(""), 0});
    p.edges.clear();
    EXPECT_TRUE(has_code(validate_pattern(p), "non-finite-vertex"));
}

TEST(ValidatePattern, CollinearOverlapOfAdjacentEdges) {
    CreasePattern p;
    p.add_vertex({0, 0});
    p.add_vertex({10, 0});
    p.add_vertex({5, 0});
    p.add_edge(0, 1, CreaseAssignment::mountain());
    p.add_edge(0, 2, CreaseAssignment::valley());
    EXPECT_TRUE(has_code(validate_pattern(p), "overlap"));
}

TEST(ValidatePattern, SeamPairUsedOnce) {
    auto p = seam_strip(10);
    p.edges[3].assignment = CreaseAssignment::boundary();
    EXPECT_TRUE(has_code(validate_pattern(p), "seam-count"));
}

TEST(ValidatePattern, GeneratorsWithDefaultsAreClean) {
    EXPECT_TRUE(validate_pattern(gen_miura({})).empty());
    EXPECT_TRUE(validate_pattern(gen_yoshimura({})).empty());
    EXPECT_TRUE(validate_pattern(gen_kresling({})).empty());
    EXPECT_TRUE(validate_pattern(gen_kaleidocycle({})).empty());
}

TEST(EdgeCrossings, SweepAgreesWithBruteForce) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coord(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        CreasePattern p;
        const int nv = 6 + trial % 20;
        // Coarse integer coordinates produce plenty of touching and collinear cases.
        for (int i = 0; i < nv; ++i) p.add_vertex({double(coord(rng)), double(coord(rng))});
        const int ne = 1 + trial % 64;
        std::uniform_int_distribution<int> vi(0, nv - 1);
        for (int i = 0; i < ne; ++i) {
            const auto a = vi(rng);
            const auto b = vi(rng);
            if (a == b || distance(p.vertices[a], p.vertices[b]) == 0) continue;
            p.add_edge(a, b, CreaseAssignment::mountain());
        }
        EXPECT_EQ(find_edge_crossings(p), brute_force_crossings(p)) << "trial " << trial;
    }
}

TEST(MaekawaLint, MiuraInteriorVertexPasses) {
    EXPECT_TRUE(maekawa_lint(gen_miura({.rows = 1, .cols = 1, .snap45 = true})).empty());
}

TEST(MaekawaLint, TwoMountainsTwoValleysWarns) {
    CreasePattern p;
    const auto c = p.add_vertex({0, 0});
    const Point2 ends[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int i = 0; i < 4; ++i) {
        p.add_edge(c, p.add_vertex(ends[i]), i < 2 ? CreaseAssignment::mountain() : CreaseAssignment::valley());
    }
    for (std::size_t i = 1; i <= 4; ++i) p.add_edge(i, i % 4 + 1, CreaseAssignment::boundary());
    const auto ds = maekawa_lint(p);
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].severity, Severity::Warning);
    EXPECT_EQ(ds[0].vertices, std::vector<std::size_t>{c});
}

TEST(MaekawaLint, NoInteriorVertices) {
    CreasePattern p;
    p.add_vertex({0, 0});
    p.add_vertex({1, 0});
    p.add_vertex({1, 1});
    p.add_edge(0, 1, CreaseAssignment::boundary());
    p.add_edge(1, 2, CreaseAssignment::boundary());
    p.add_edge(2, 0, CreaseAssignment::boundary());
    EXPECT_TRUE(maekawa_lint(p).empty());
}

TEST(MaekawaLint, NeverBlocksCompilationInputs) {
    // Base pattern's center has 4 M and 4 V: advisory warning only.
    const auto ds = maekawa_lint(base_pattern());
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_FALSE(has_errors(ds));
}
