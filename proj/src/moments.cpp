#include "knitfold/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace knitfold {

const char* to_string(SweepDirection d) { return d == SweepDirection::Forward ? "forward" : "backward"; }
const char* to_string(Material m) { return m == Material::Acrylic ? "acrylic" : "acrylic+fusible"; }
const char* to_string(FabricPattern p) { return p == FabricPattern::Jersey ? "jersey" : "patterned"; }
const char* to_string(RConvention c) { return c == RConvention::TableI ? "TableI" : "Eq1"; }

RConvention parse_convention(const std::string& s) {
    if (s == "TableI" || s == "tablei" || s == "table1") return RConvention::TableI;
    if (s == "Eq1" || s == "eq1") return RConvention::Eq1;
    throw SchemaError("unknown R convention '" + s + "' (expected TableI or Eq1)");
}

void check_record(const SweepRecord& r) {
    if (!(r.d_mm > 0.0) || !(r.L_mm > 0.0)) throw DomainError("moment arm d and crease length L must be > 0");
    if (r.samples.empty()) throw DomainError("sweep has no samples");
    double last = -1.0;
    for (const auto& s : r.samples) {
        if (!(s.angle_deg >= 0.0 && s.angle_deg <= 180.0)) {
            throw DomainError("sweep angle " + format_shortest(s.angle_deg) + " outside [0, 180]");
        }
        if (s.angle_deg < last) throw DomainError("sweep angles must be non-decreasing");
        last = s.angle_deg;
    }
}

double moment_per_length(double force_N, double d_mm, double L_mm) {
    if (!(d_mm > 0.0)) throw DomainError("moment arm d must be > 0");
    if (!(L_mm > 0.0)) throw DomainError("crease length L must be > 0");
    if (!(force_N >= 0.0)) throw DomainError("normal force must be >= 0");
    return force_N * d_mm / L_mm;
}

std::vector<MomentPoint> sweep_to_moments(const SweepRecord& r) {
    check_record(r);
    std::vector<MomentPoint> out;
    out.reserve(r.samples.size());
    for (const auto& s : r.samples) out.push_back({s.angle_deg, moment_per_length(s.force_N, r.d_mm, r.L_mm)});
    return out;
}

double peak_moment(std::span<const MomentPoint> series) {
    if (series.empty()) throw DomainError("cannot take the peak of an empty series");
    return std::max_element(series.begin(), series.end(),
                            [](const MomentPoint& a, const MomentPoint& b) { return a.moment < b.moment; })
        ->moment;
}

double directionality_ratio(double m_forward, double m_backward, RConvention convention) {
    const double num = convention == RConvention::TableI ? m_backward : m_forward;
    const double den = convention == RConvention::TableI ? m_forward : m_backward;
    if (!(den > 0.0)) throw DomainError("directionality ratio denominator must be > 0");
    return num / den;
}

MomentSummary aggregate_replicates(std::span<const SweepRecord> records, RConvention convention) {
    std::vector<double> fwd, bwd;
    for (const auto& r : records) {
        const double peak = peak_moment(sweep_to_moments(r));
        (r.direction == SweepDirection::Forward ? fwd : bwd).push_back(peak);
    }
    MomentSummary s;
    if (!records.empty()) s.labels = records.front().labels;
    if (fwd.empty() || bwd.empty()) {
        throw MissingDirectionError(std::string("condition ") + to_string(s.labels.material) + "/" +
                                    to_string(s.labels.pattern) + "/" + to_string(s.labels.fold) + "/" +
                                    to_string(s.labels.orientation) + " lacks " +
                                    (fwd.empty() ? "forward" : "backward") + " records");
    }
    auto mean = [](const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); };
    auto envelope = [](const std::vector<double>& v) {
        auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return Envelope{*lo, *hi};
    };
    s.m_forward = mean(fwd);
    s.m_backward = mean(bwd);
    s.n_forward = static_cast<int>(fwd.size());
    s.n_backward = static_cast<int>(bwd.size());
    s.forward_envelope = envelope(fwd);
    s.backward_envelope = envelope(bwd);
    s.convention = convention;
    const double den = convention == RConvention::TableI ? s.m_forward : s.m_backward;
    if (den > 0.0) s.r = directionality_ratio(s.m_forward, s.m_backward, convention);
    return s;
}

std::map<ConditionLabels, std::vector<SweepRecord>> group_records(std::span<const SweepRecord> records) {
    std::map<ConditionLabels, std::vector<SweepRecord>> groups;
    for (const auto& r : records) groups[r.labels].push_back(r);
    return groups;
}

std::vector<MomentSummary> summarize_groups(std::span<const SweepRecord> records, RConvention convention) {
    std::vector<MomentSummary> out;
    for (const auto& [labels, group] : group_records(records)) {
        out.push_back(aggregate_replicates(group, convention));
    }
    return out;
}

std::string format_significant(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::vector<ReportRow> summarize_table(std::span<const MomentSummary> summaries) {
    std::vector<ReportRow> rows;
    for (const auto& s : summaries) {
        rows.push_back({s.labels, format_significant(s.m_forward, 2), format_significant(s.m_backward, 2),
                        s.r ? format_significant(*s.r, 3) : "-", s.derived});
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ReportRow& a, const ReportRow& b) { return a.labels < b.labels; });
    return rows;
}

std::vector<MomentSummary> expand_symmetry(std::span<const MomentSummary> summaries) {
    std::map<ConditionLabels, MomentSummary> table;
    for (const auto& s : summaries) table.emplace(s.labels, s);

    auto fill = [&](const ConditionLabels& target, const MomentSummary& source, bool swap) {
        if (table.contains(target)) return;
        MomentSummary s = source;
        s.labels = target;
        s.derived = true;
        if (swap) {
            std::swap(s.m_forward, s.m_backward);
            std::swap(s.n_forward, s.n_backward);
            std::swap(s.forward_envelope, s.backward_envelope);
            s.r.reset();
            const double den = s.convention == RConvention::TableI ? s.m_forward : s.m_backward;
            if (den > 0.0) s.r = directionality_ratio(s.m_forward, s.m_backward, s.convention);
        }
        table.emplace(target, s);
    };

    constexpr Orientation kOrientations[] = {Orientation::Horizontal, Orientation::Vertical,
                                             Orientation::DiagFwd, Orientation::DiagBwd};
    constexpr FoldType kFolds[] = {FoldType::Mountain, FoldType::Valley};

    for (Material m : {Material::Acrylic, Material::AcrylicFusible}) {
        // Orientation symmetries first, within each fold type.
        for (FoldType f : kFolds) {
            if (m == Material::Acrylic) {
                std::optional<MomentSummary> rep;
                for (Orientation o : kOrientations) {
                    auto it = table.find({m, FabricPattern::Jersey, f, o});
                    if (it != table.end() && !it->second.derived) {
                        rep = it->second;
                        break;
                    }
                }
                if (rep) {
                    for (Orientation o : kOrientations) fill({m, FabricPattern::Jersey, f, o}, *rep, false);
                }
            } else {
                for (auto [from, to] : {std::pair{Orientation::DiagFwd, Orientation::DiagBwd},
                                        std::pair{Orientation::DiagBwd, Orientation::DiagFwd}}) {
                    auto it = table.find({m, FabricPattern::Jersey, f, from});
                    if (it != table.end()) fill({m, FabricPattern::Jersey, f, to}, it->second, false);
                }
            }
        }
        // Then mountain forward == valley backward.
        for (Orientation o : kOrientations) {
            for (FoldType f : kFolds) {
                const FoldType other = f == FoldType::Mountain ? FoldType::Valley : FoldType::Mountain;
                auto it = table.find({m, FabricPattern::Jersey, f, o});
                if (it != table.end()) fill({m, FabricPattern::Jersey, other, o}, it->second, true);
            }
        }
    }

    std::vector<MomentSummary> out;
    for (auto& [_, s] : table) out.push_back(s);
    return out;
}

namespace {

std::string pad(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

const char* convention_formula(RConvention c) {
    return c == RConvention::TableI ? "R = M_backward / M_forward" : "R = M_forward / M_backward";
}

}  // namespace

std::string render_report(std::span<const MomentSummary> summaries, RConvention convention) {
    std::ostringstream out;
    out << "Folding moment summary (moments in N*mm/mm, peak over sweep, mean of replicates)\n\n";
    const std::vector<std::pair<std::string, std::size_t>> cols = {
        {"material", 16}, {"pattern", 10}, {"fold", 9}, {"orientation", 12}, {"M_forward", 10},
        {"M_backward", 11}, {"R", 7}, {"n_fwd", 6}, {"n_bwd", 6}, {"fwd_min", 9}, {"fwd_max", 9},
        {"bwd_min", 9}, {"bwd_max", 9}};
    std::string header;
    for (const auto& [name, w] : cols) header += pad(name, w);
    while (!header.empty() && header.back() == ' ') header.pop_back();
    out << header << "\n";

    std::vector<MomentSummary> sorted(summaries.begin(), summaries.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.labels < b.labels; });
    const auto rows = summarize_table(sorted);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& s = sorted[i];
        const auto& r = rows[i];
        std::string line = pad(to_string(s.labels.material), 16) + pad(to_string(s.labels.pattern), 10) +
                           pad(to_string(s.labels.fold), 9) + pad(to_string(s.labels.orientation), 12) +
                           pad(r.m_forward, 10) + pad(r.m_backward, 11) + pad(r.r, 7) +
                           pad(std::to_string(s.n_forward), 6) + pad(std::to_string(s.n_backward), 6) +
                           pad(format_significant(s.forward_envelope.min, 2), 9) +
                           pad(format_significant(s.forward_envelope.max, 2), 9) +
                           pad(format_significant(s.backward_envelope.min, 2), 9) +
                           format_significant(s.backward_envelope.max, 2);
        out << line << "\n";
    }
    out << "\n" << sorted.size() << " conditions\n";

    // Published-table layout: jersey and patterned side by side.
    const auto full = expand_symmetry(sorted);
    std::map<ConditionLabels, ReportRow> by_label;
    for (const auto& row : summarize_table(full)) by_label.emplace(row.labels, row);
    out << "\nTable layout (* = filled from unpatterned symmetry)\n";
    for (Material m : {Material::Acrylic, Material::AcrylicFusible}) {
        out << "\nMaterial: " << (m == Material::Acrylic ? "acrylic on folds and panels"
                                                          : "acrylic on folds, acrylic + fusible on panels")
            << "\n";
        out << pad("fold", 10) << pad("orientation", 13) << "| " << pad("jersey M_fwd", 13)
            << pad("M_bwd", 8) << pad("R", 8) << "| " << pad("patterned M_fwd", 16) << pad("M_bwd", 8)
            << "R\n";
        for (FoldType f : {FoldType::Mountain, FoldType::Valley}) {
            for (Orientation o : {Orientation::Horizontal, Orientation::Vertical, Orientation::DiagFwd,
                                  Orientation::DiagBwd}) {
                auto cell = [&](FabricPattern p, std::size_t w0, bool last) {
                    auto it = by_label.find({m, p, f, o});
                    if (it == by_label.end()) {
                        return pad("-", w0) + pad("-", 8) + (last ? std::string("-") : pad("-", 8));
                    }
                    const auto& row = it->second;
                    const std::string mark = row.derived ? "*" : "";
                    return pad(row.m_forward + mark, w0) + pad(row.m_backward + mark, 8) +
                           (last ? row.r + mark : pad(row.r + mark, 8));
                };
                out << pad(to_string(f), 10) << pad(to_string(o), 13) << "| "
                    << cell(FabricPattern::Jersey, 13, false) << "| "
                    << cell(FabricPattern::Patterned, 16, true) << "\n";
            }
        }
    }
    out << "\nR convention: " << to_string(convention) << " (" << convention_formula(convention) << ")\n";
    return out.str();
}

std::string render_report_csv(std::span<const MomentSummary> summaries, RConvention convention) {
    std::vector<MomentSummary> sorted(summaries.begin(), summaries.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.labels < b.labels; });
    std::ostringstream out;
    out << "material,pattern,fold,orientation,M_forward,M_backward,R,n_forward,n_backward,"
           "forward_min,forward_max,backward_min,backward_max,convention\n";
    for (const auto& s : sorted) {
        out << to_string(s.labels.material) << ',' << to_string(s.labels.pattern) << ','
            << to_string(s.labels.fold) << ',' << to_string(s.labels.orientation) << ','
            << format_shortest(s.m_forward) << ',' << format_shortest(s.m_backward) << ','
            << (s.r ? format_shortest(*s.r) : "") << ',' << s.n_forward << ',' << s.n_backward << ','
            << format_shortest(s.forward_envelope.min) << ',' << format_shortest(s.forward_envelope.max)
            << ',' << format_shortest(s.backward_envelope.min) << ','
            << format_shortest(s.backward_envelope.max) << ',' << to_string(convention) << "\n";
    }
    return out.str();
}

std::vector<SweepSample> parse_sweep_csv(std::string_view text) {
    std::vector<SweepSample> out;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header) {
            if (line != "angle_deg,force_N") {
                throw SchemaError("sweep CSV header must be 'angle_deg,force_N', got '" + line + "'");
            }
            header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw SchemaError("sweep CSV line " + std::to_string(lineno) + " must have two fields");
        }
        try {
            std::size_t used = 0;
            const std::string a = line.substr(0, comma);
            const std::string f = line.substr(comma + 1);
            const double angle = std::stod(a, &used);
            if (used != a.size()) throw std::invalid_argument(a);
            const double force = std::stod(f, &used);
            if (used != f.size()) throw std::invalid_argument(f);
            out.push_back({angle, force});
        } catch (const std::logic_error&) {
            throw SchemaError("sweep CSV line " + std::to_string(lineno) + " is not numeric");
        }
    }
    if (!header) throw SchemaError("sweep CSV is empty");
    return out;
}

std::string write_sweep_csv(std::span<const SweepSample> samples) {
    std::string out = "angle_deg,force_N\n";
    for (const auto& s : samples) out += format_shortest(s.angle_deg) + "," + format_shortest(s.force_N) + "\n";
    return out;
}

namespace {

using nlohmann::json;

template <typename T>
T enum_from(const json& obj, const char* key, std::initializer_list<std::pair<const char*, T>> options) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(std::string("sweep metadata is missing '") + key + "'");
    if (!it->is_string()) throw SchemaError(std::string("sweep metadata '") + key + "' must be a string");
    const auto v = it->get<std::string>();
    for (const auto& [name, value] : options) {
        if (v == name) return value;
    }
    throw SchemaError(std::string("sweep metadata '") + key + "' has unknown value '" + v + "'");
}

double number_from(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number()) {
        throw SchemaError(std::string("sweep metadata needs numeric '") + key + "'");
    }
    return it->get<double>();
}

}  // namespace

SweepMetadata SweepMetadata::parse(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed metadata JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("sweep metadata must be a JSON object");
    SweepMetadata meta;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() == "sweeps") {
            if (!it->is_object()) throw SchemaError("'sweeps' must map file names to objects");
            meta.sweeps_ = *it;
        } else if (it.key() == "r_convention") {
            if (!it->is_string()) throw SchemaError("'r_convention' must be a string");
            meta.convention_ = parse_convention(it->get<std::string>());
        } else {
            meta.defaults_[it.key()] = it.value();
        }
    }
    return meta;
}

SweepInfo SweepMetadata::lookup(const std::string& file_name, int ordinal) const {
    json merged = defaults_;
    if (!sweeps_.empty()) {
        auto it = sweeps_.find(file_name);
        if (it == sweeps_.end()) throw SchemaError("sweep metadata has no entry for '" + file_name + "'");
        if (!it->is_object()) throw SchemaError("sweep metadata entry for '" + file_name + "' must be an object");
        for (auto kv = it->begin(); kv != it->end(); ++kv) merged[kv.key()] = kv.value();
    }
    SweepInfo info;
    info.d_mm = number_from(merged, "d_mm");
    info.L_mm = number_from(merged, "L_mm");
    info.direction = enum_from<SweepDirection>(
        merged, "direction", {{"forward", SweepDirection::Forward}, {"backward", SweepDirection::Backward}});
    info.labels.fold = enum_from<FoldType>(merged, "fold",
                                           {{"mountain", FoldType::Mountain}, {"valley", FoldType::Valley}});
    info.labels.orientation = enum_from<Orientation>(merged, "orientation",
                                                     {{"horizontal", Orientation::Horizontal},
                                                      {"vertical", Orientation::Vertical},
                                                      {"diag_fwd", Orientation::DiagFwd},
                                                      {"diag_bwd", Orientation::DiagBwd}});
    info.labels.material = enum_from<Material>(
        merged, "material", {{"acrylic", Material::Acrylic}, {"acrylic+fusible", Material::AcrylicFusible}});
    info.labels.pattern = enum_from<FabricPattern>(
        merged, "pattern", {{"jersey", FabricPattern::Jersey}, {"patterned", FabricPattern::Patterned}});
    info.replicate = ordinal;
    if (auto it = merged.find("replicate"); it != merged.end()) {
        if (!it->is_number_integer()) throw SchemaError("'replicate' must be an integer");
        info.replicate = it->get<int>();
    }
    return info;
}

}  // namespace knitfold
