#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knitfold/compiler.hpp"

namespace knitfold {

enum class SweepDirection { Forward, Backward };
enum class Material { Acrylic, AcrylicFusible };
enum class FabricPattern { Jersey, Patterned };

/// TableI: R = M_backward / M_forward (matches the published table values).
/// Eq1:    R = M_forward / M_backward (the fraction as literally printed).
enum class RConvention { TableI, Eq1 };

const char* to_string(SweepDirection d);
const char* to_string(Material m);
const char* to_string(FabricPattern p);
const char* to_string(RConvention c);

/// Test condition. Field order fixes the report order.
struct ConditionLabels {
    Material material = Material::Acrylic;
    FabricPattern pattern = FabricPattern::Jersey;
    FoldType fold = FoldType::Mountain;
    Orientation orientation = Orientation::Horizontal;

    auto operator<=>(const ConditionLabels&) const = default;
};

struct SweepSample {
    double angle_deg = 0.0;  // 0..180
    double force_N = 0.0;
};

struct SweepRecord {
    std::vector<SweepSample> samples;
    double d_mm = 0.0;  // moment arm
    double L_mm = 0.0;  // crease length
    SweepDirection direction = SweepDirection::Forward;
    ConditionLabels labels{};
    int replicate = 0;
};

/// Throws DomainError unless d, L > 0, samples non-empty, angles within
/// [0, 180] and non-decreasing.
void check_record(const SweepRecord& r);

/// Folding moment per unit crease length, F·d/L.
double moment_per_length(double force_N, double d_mm, double L_mm);

struct MomentPoint {
    double angle_deg = 0.0;
    double moment = 0.0;  // N·mm/mm
};

std::vector<MomentPoint> sweep_to_moments(const SweepRecord& r);

/// Largest moment over the raw sweep (no interpolation).
double peak_moment(std::span<const MomentPoint> series);

double directionality_ratio(double m_forward, double m_backward,
                            RConvention convention = RConvention::TableI);

struct Envelope {
    double min = 0.0;
    double max = 0.0;
};

struct MomentSummary {
    ConditionLabels labels{};
    double m_forward = 0.0;
    double m_backward = 0.0;
    std::optional<double> r;
    RConvention convention = RConvention::TableI;
    int n_forward = 0;
    int n_backward = 0;
    Envelope forward_envelope{};
    Envelope backward_envelope{};
    bool derived = false;  // filled in from a symmetry rule, not measured
};

/// Reduces one condition's replicates: per-direction mean of replicate
/// peaks, min/max envelope, R on the means. Throws MissingDirectionError
/// when either direction has no record.
MomentSummary aggregate_replicates(std::span<const SweepRecord> records,
                                   RConvention convention = RConvention::TableI);

std::map<ConditionLabels, std::vector<SweepRecord>> group_records(std::span<const SweepRecord> records);

/// One summary per condition, in label order.
std::vector<MomentSummary> summarize_groups(std::span<const SweepRecord> records,
                                            RConvention convention = RConvention::TableI);

struct ReportRow {
    ConditionLabels labels{};
    std::string m_forward;  // 2 significant figures
    std::string m_backward;
    std::string r;  // 3 significant figures, "-" when undefined
    bool derived = false;
};

std::string format_significant(double v, int digits);

std::vector<ReportRow> summarize_table(std::span<const MomentSummary> summaries);

/// Completes the full material × pattern × fold × orientation layout from
/// measured conditions using the unpatterned symmetries: for jersey fabric
/// mountain-forward equals valley-backward (and vice versa); acrylic jersey
/// has one representative value for every orientation; fusible jersey
/// diagonals are interchangeable. Measured rows are never overwritten.
std::vector<MomentSummary> expand_symmetry(std::span<const MomentSummary> summaries);

std::string render_report(std::span<const MomentSummary> summaries, RConvention convention);
std::string render_report_csv(std::span<const MomentSummary> summaries, RConvention convention);

/// `angle_deg,force_N` CSV, one sample per line.
std::vector<SweepSample> parse_sweep_csv(std::string_view text);
std::string write_sweep_csv(std::span<const SweepSample> samples);

/// Per-file metadata for the analyze workflow.
struct SweepInfo {
    double d_mm = 0.0;
    double L_mm = 0.0;
    SweepDirection direction = SweepDirection::Forward;
    ConditionLabels labels{};
    int replicate = 0;
};

/// JSON sidecar. Top-level keys act as defaults for every sweep; the
/// optional "sweeps" object maps a CSV file name to per-file overrides.
class SweepMetadata {
public:
    static SweepMetadata parse(std::string_view text);

    /// Resolved info for `file_name`; `ordinal` numbers replicates when the
    /// metadata does not.
    SweepInfo lookup(const std::string& file_name, int ordinal) const;

    std::optional<RConvention> convention() const { return convention_; }

private:
    nlohmann::json defaults_ = nlohmann::json::object();
    nlohmann::json sweeps_ = nlohmann::json::object();
    std::optional<RConvention> convention_;
};

RConvention parse_convention(const std::string& s);

}  // namespace knitfold
