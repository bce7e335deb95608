#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace knitfold {

enum class Severity { Warning, Error };

/// A structural finding about a pattern or chart. Carries the offending
/// entity indices so callers can point at the exact edge or vertex.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    std::vector<std::size_t> edges;
    std::vector<std::size_t> vertices;

    bool operator==(const Diagnostic&) const = default;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);
std::string to_string(const Diagnostic& d);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Document does not follow the expected schema (missing key, wrong type).
class SchemaError : public Error {
public:
    using Error::Error;
};

class GeometryError : public Error {
public:
    explicit GeometryError(const std::string& what, std::vector<std::size_t> edges = {},
                           std::vector<std::size_t> vertices = {})
        : Error(what), edges_(std::move(edges)), vertices_(std::move(vertices)) {}

    const std::vector<std::size_t>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }

private:
    std::vector<std::size_t> edges_;
    std::vector<std::size_t> vertices_;
};

class ParamError : public Error {
public:
    using Error::Error;
};

/// A crease lies outside every orientation band and the policy is Reject.
class OffGridError : public Error {
public:
    OffGridError(const std::string& what, double angle_deg)
        : Error(what), angle_deg_(angle_deg) {}
    double angle_deg() const noexcept { return angle_deg_; }

private:
    double angle_deg_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class MissingDirectionError : public Error {
public:
    using Error::Error;
};

class EmitError : public Error {
public:
    using Error::Error;
};

/// Aggregate of every per-edge failure found while compiling one pattern.
class CompileError : public Error {
public:
    explicit CompileError(std::vector<Diagnostic> issues);
    const std::vector<Diagnostic>& issues() const noexcept { return issues_; }

private:
    std::vector<Diagnostic> issues_;
};

}  // namespace knitfold
