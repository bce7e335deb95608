#include <cmath>
#include <set>
#include <string>

#include "knitfold/pattern.hpp"

namespace knitfold {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {"vertices_coords", "edges_vertices", "edges_assignment",
                                          "edges_seamPair", "file_title", "frame_unit"};

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError(std::string("missing required key '") + key + "'");
    if (!it->is_array()) throw SchemaError(std::string("'") + key + "' must be an array");
    return *it;
}

std::string where(const char* key, std::size_t i) {
    return std::string(key) + "[" + std::to_string(i) + "]";
}

AssignmentKind parse_kind(const json& v, std::size_t i) {
    if (!v.is_string()) throw SchemaError(where("edges_assignment", i) + " must be a string");
    const auto s = v.get<std::string>();
    if (s == "M") return AssignmentKind::Mountain;
    if (s == "V") return AssignmentKind::Valley;
    if (s == "B") return AssignmentKind::Boundary;
    if (s == "S") return AssignmentKind::Seam;
    throw SchemaError(where("edges_assignment", i) + " has unsupported assignment '" + s + "'");
}

}  // namespace

CreasePattern parse_pattern(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("document must be a JSON object");

    CreasePattern p;
    if (auto it = doc.find("frame_unit"); it != doc.end()) {
        if (!it->is_string() || it->get<std::string>() != "mm") {
            throw SchemaError("only millimetre documents are accepted (frame_unit must be \"mm\")");
        }
    }
    if (auto it = doc.find("file_title"); it != doc.end()) {
        if (!it->is_string()) throw SchemaError("'file_title' must be a string");
        p.name = it->get<std::string>();
    }

    const json& coords = require(doc, "vertices_coords");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const json& c = coords[i];
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
            throw SchemaError(where("vertices_coords", i) + " must be [x, y] numbers");
        }
        p.vertices.push_back({c[0].get<double>(), c[1].get<double>()});
    }

    const json& ev = require(doc, "edges_vertices");
    const json& ea = require(doc, "edges_assignment");
    if (ev.size() != ea.size()) {
        throw SchemaError("edges_vertices and edges_assignment lengths differ");
    }
    bool any_seam = false;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        const json& e = ev[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw SchemaError(where("edges_vertices", i) + " must be [i, j] integers");
        }
        const auto a = e[0].get<long long>();
        const auto b = e[1].get<long long>();
        const auto n = static_cast<long long>(p.vertices.size());
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw SchemaError(where("edges_vertices", i) + " references vertex out of range (" +
                              std::to_string(a) + ", " + std::to_string(b) + " of " +
                              std::to_string(n) + ")");
        }
        const AssignmentKind kind = parse_kind(ea[i], i);
        any_seam = any_seam || kind == AssignmentKind::Seam;
        p.edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), {kind, -1}});
    }

    if (auto it = doc.find("edges_seamPair"); it != doc.end()) {
        if (!it->is_array() || it->size() != p.edges.size()) {
            throw SchemaError("'edges_seamPair' must be an array with one entry per edge");
        }
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            const json& v = (*it)[i];
            if (!v.is_number_integer()) throw SchemaError(where("edges_seamPair", i) + " must be an integer");
            const auto id = v.get<long long>();
            const bool seam = p.edges[i].assignment.kind == AssignmentKind::Seam;
            if (seam && id < 0) throw SchemaError(where("edges_seamPair", i) + " must be >= 0 on a seam edge");
            if (!seam && id != -1) throw SchemaError(where("edges_seamPair", i) + " must be -1 on a non-seam edge");
            p.edges[i].assignment.seam_pair = static_cast<int>(id);
        }
    } else if (any_seam) {
        throw SchemaError("'edges_seamPair' is required when any edge is a seam");
    }

    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!kKnownKeys.contains(it.key())) p.metadata[it.key()] = it.value();
    }

    const auto diagnostics = validate_pattern(p);
    if (has_errors(diagnostics)) {
        std::vector<std::size_t> edges, vertices;
        std::string msg = "pattern violates geometric invariants:";
        for (const auto& d : diagnostics) {
            if (d.severity != Severity::Error) continue;
            msg += "\n  " + to_string(d);
            edges.insert(edges.end(), d.edges.begin(), d.edges.end());
            vertices.insert(vertices.end(), d.vertices.begin(), d.vertices.end());
        }
        throw GeometryError(msg, edges, vertices);
    }
    return p;
}

std::string serialize_pattern(const CreasePattern& p) {
    json doc = p.metadata.is_object() ? p.metadata : json::object();
    json coords = json::array();
    for (const auto& v : p.vertices) coords.push_back({v.x, v.y});
    json ev = json::array();
    json ea = json::array();
    json seams = json::array();
    bool any_seam = false;
    for (const auto& e : p.edges) {
        ev.push_back({e.v1, e.v2});
        ea.push_back(to_string(e.assignment.kind));
        seams.push_back(e.assignment.seam_pair);
        any_seam = any_seam || e.assignment.kind == AssignmentKind::Seam;
    }
    doc["vertices_coords"] = std::move(coords);
    doc["edges_vertices"] = std::move(ev);
    doc["edges_assignment"] = std::move(ea);
    if (any_seam) doc["edges_seamPair"] = std::move(seams);
    doc["frame_unit"] = "mm";
    if (!p.name.empty()) doc["file_title"] = p.name;
    return doc.dump(1) + "\n";
}

}  // namespace knitfold
