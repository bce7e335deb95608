#pragma once

#include <string>
#include <vector>

#include "knitfold/moments.hpp"

namespace knitfold::test_support {

inline constexpr double kFixtureArm = 20.0;     // d, mm
inline constexpr double kFixtureLength = 40.0;  // L, mm

/// Replicate force scales; their mean is 1 so the mean peak is exact.
inline constexpr double kReplicateScales[] = {0.95, 1.0, 1.05};

/// F(θ) = peak·sin(θ/2) sampled every `step_deg` over 0..180.
std::vector<SweepSample> sine_sweep(double peak_force, double step_deg = 10.0);

/// Three replicates per direction for every measured table condition, with
/// peak moments pinned to the printed M columns.
std::vector<SweepRecord> table1_records();

struct FixtureFile {
    std::string name;
    std::string content;
};

/// metadata.json plus one CSV per record of table1_records().
std::vector<FixtureFile> table1_bundle();

std::string fixture_file_name(const SweepRecord& r);

}  // namespace knitfold::test_support
