#include "fixtures.hpp"

#include <cmath>
#include <numbers>

#include "table1.hpp"

namespace knitfold::test_support {

std::vector<SweepSample> sine_sweep(double peak_force, double step_deg) {
    std::vector<SweepSample> out;
    const int steps = static_cast<int>(std::lround(180.0 / step_deg));
    for (int i = 0; i <= steps; ++i) {
        const double angle = i * step_deg;
        out.push_back({angle, peak_force * std::sin(angle * std::numbers::pi / 360.0)});
    }
    return out;
}

std::vector<SweepRecord> table1_records() {
    std::vector<SweepRecord> out;
    for (const auto& labels : table1_conditions()) {
        const auto& row = table1_row(labels);
        for (SweepDirection dir : {SweepDirection::Forward, SweepDirection::Backward}) {
            const double m = dir == SweepDirection::Forward ? row.m_forward : row.m_backward;
            int replicate = 1;
            for (double scale : kReplicateScales) {
                SweepRecord r;
                r.samples = sine_sweep(m * scale * kFixtureLength / kFixtureArm);
                r.d_mm = kFixtureArm;
                r.L_mm = kFixtureLength;
                r.direction = dir;
                r.labels = labels;
                r.replicate = replicate++;
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::string fixture_file_name(const SweepRecord& r) {
    const auto& l = r.labels;
    return std::string(l.material == Material::Acrylic ? "acrylic" : "fusible") + "_" + to_string(l.pattern) +
           "_" + to_string(l.fold) + "_" + to_string(l.orientation) + "_" +
           (r.direction == SweepDirection::Forward ? "fwd" : "bwd") + "_r" + std::to_string(r.replicate) +
           ".csv";
}

std::vector<FixtureFile> table1_bundle() {
    nlohmann::json meta = {{"d_mm", kFixtureArm}, {"L_mm", kFixtureLength}, {"r_convention", "TableI"}};
    nlohmann::json sweeps = nlohmann::json::object();
    std::vector<FixtureFile> files;
    for (const auto& r : table1_records()) {
        const auto name = fixture_file_name(r);
        sweeps[name] = {{"material", to_string(r.labels.material)},
                        {"pattern", to_string(r.labels.pattern)},
                        {"fold", to_string(r.labels.fold)},
                        {"orientation", to_string(r.labels.orientation)},
                        {"direction", to_string(r.direction)},
                        {"replicate", r.replicate}};
        files.push_back({name, write_sweep_csv(r.samples)});
    }
    meta["sweeps"] = sweeps;
    files.insert(files.begin(), {"metadata.json", meta.dump(1) + "\n"});
    return files;
}

}  // namespace knitfold::test_support
