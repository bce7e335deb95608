// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
// usage: knitfold_acceptance <knitfold tool> <fixtures dir> <work dir>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "knitfold/cli.hpp"
#include "knitfold/compiler.hpp"
#include "knitfold/moments.hpp"
#include "knitfold/pattern.hpp"
#include "knitfold/tessellations.hpp"
#include "support/base_pattern.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/table1.hpp"

using namespace knitfold;
using namespace knitfold::test_support;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(std::string why) {
        pass = false;
        notes.push_back(std::move(why));
    }
    void check(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string label(const ConditionLabels& l) {
    return std::string(to_string(l.material)) + " " + to_string(l.pattern) + " " + to_string(l.fold) + " " +
           to_string(l.orientation);
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

int shell(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome table_regression() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    int eq1_misses = 0;
    for (const auto& labels : table1_conditions()) {
        const auto& row = table1_row(labels);
        const double r = directionality_ratio(row.m_forward, row.m_backward, RConvention::TableI);
        if (std::abs(r - row.r_printed) > 0.1) {
            std::ostringstream s;
            s << label(labels) << ": " << row.m_backward << "/" << row.m_forward << " = " << r << " vs printed "
              << row.r_printed;
            o.fail(s.str());
        }
        eq1_misses += std::abs(directionality_ratio(row.m_forward, row.m_backward, RConvention::Eq1) -
                               row.r_printed) > 0.1;
    }
    o.check(table1_conditions().size() == 20, "expected 20 conditions");
    o.check(eq1_misses > 0, "Eq1 convention unexpectedly reproduces the table");
    const double dt = seconds_since(t0);
    o.check(dt < 1.0, "runtime " + std::to_string(dt) + " s");
    return o;
}

Outcome rule_table() {
    Outcome o;
    const RuleConfig cfg;
    struct Case {
        Orientation orient;
        FoldType fold;
        StitchType stitch;
    };
    const Case cases[] = {
        {Orientation::Horizontal, FoldType::Mountain, StitchType::Purl},
        {Orientation::Vertical, FoldType::Valley, StitchType::Purl},
        {Orientation::Horizontal, FoldType::Valley, StitchType::Tuck},
        {Orientation::Vertical, FoldType::Mountain, StitchType::Tuck},
        {Orientation::DiagFwd, FoldType::Mountain, cfg.twist_map.at(Orientation::DiagFwd, FoldType::Mountain)},
        {Orientation::DiagFwd, FoldType::Valley, cfg.twist_map.at(Orientation::DiagFwd, FoldType::Valley)},
        {Orientation::DiagBwd, FoldType::Mountain, cfg.twist_map.at(Orientation::DiagBwd, FoldType::Mountain)},
        {Orientation::DiagBwd, FoldType::Valley, cfg.twist_map.at(Orientation::DiagBwd, FoldType::Valley)},
    };
    for (const auto& c : cases) {
        const auto plan = stitch_rule(c.orient, c.fold, cfg);
        const std::string name = std::string(to_string(c.orient)) + " " + to_string(c.fold);
        o.check(plan.stitch == c.stitch, name + " gives " + to_string(plan.stitch));
        o.check(!is_twist(plan.stitch) || is_twist(c.stitch), name + " should not twist");
        if (is_twist(c.stitch)) o.check(plan.footprint.width == 2, name + " twist not 2 wide");
        if (c.stitch == StitchType::Tuck) o.check(plan.footprint.height == 2, name + " tuck not 2 rows");
    }
    return o;
}

Outcome base_pattern_chart() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto chart = compile(base_pattern(), kBaseGauge);
    for (const auto& v : base_chart_violations(chart)) o.fail(v);
    const double dt = seconds_since(t0);
    o.check(dt < 1.0, "runtime " + std::to_string(dt) + " s");
    return o;
}

Outcome rasterization() {
    Outcome o;
    const auto report = run_rasterization_oracle(rasterization_cases(200, 20240601u));
    o.check(report.cases == 200, std::to_string(report.cases) + " cases");
    o.check(report.mismatches == 0, std::to_string(report.mismatches) + " mismatches");
    return o;
}

Outcome tessellations(const fs::path& tool, const fs::path& work) {
    Outcome o;
    for (int rows = 1; rows <= 4; ++rows) {
        for (int cols = 1; cols <= 4; ++cols) {
            for (double gamma : {30.0, 45.0, 60.0, 75.0}) {
                const auto p = gen_miura({.rows = rows, .cols = cols, .gamma_deg = gamma, .snap45 = gamma == 45.0});
                const std::string name =
                    "miura " + std::to_string(rows) + "x" + std::to_string(cols) + " gamma " + std::to_string(gamma);
                o.check(validate_pattern(p).empty(), name + ": validate diagnostics");
                o.check(maekawa_lint(p).empty(), name + ": maekawa warnings");
            }
        }
    }
    const fs::path dir = work / "tessellations";
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> shapes = {{"kresling", "--n 6"},
                                                                     {"kaleidocycle", "--units 8"}};
    for (const auto& [kind, args] : shapes) {
        const fs::path fold = dir / (kind + ".fold");
        const std::string quiet = " >/dev/null 2>" + quote(dir / (kind + ".err"));
        int code = shell(quote(tool) + " generate " + kind + " " + args + " --out " + quote(fold) + quiet);
        o.check(code == 0, kind + " generate exit " + std::to_string(code));
        code = shell(quote(tool) + " compile " + quote(fold) + " --stitch-w 2.5 --stitch-h 2.5 --out-chart " +
                     quote(dir / (kind + ".txt")) + quiet);
        o.check(code == 0, kind + " compile exit " + std::to_string(code));
    }
    return o;
}

/// A 20 mm square crossed by one valley crease 17 degrees off horizontal.
CreasePattern slanted_square() {
    CreasePattern p;
    const double t = std::tan(17.0 * std::numbers::pi / 180.0);
    const auto a = p.add_vertex({0, 0});
    const auto b = p.add_vertex({20, 0});
    const auto c = p.add_vertex({20, 10 + 10 * t});
    const auto d = p.add_vertex({20, 20});
    const auto e = p.add_vertex({0, 20});
    const auto f = p.add_vertex({0, 10 - 10 * t});
    for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, d}, {d, e}, {e, f}, {f, a}}) {
        p.add_edge(u, v, CreaseAssignment::boundary());
    }
    p.add_edge(f, c, CreaseAssignment::fold(FoldType::Valley));
    return p;
}

Outcome determinism(const fs::path& tool, const fs::path& fixtures, const fs::path& work) {
    Outcome o;
    const fs::path inputs = work / "determinism_inputs";
    fs::create_directories(inputs);
    write_file_atomic(inputs / "slant.fold", serialize_pattern(slanted_square()));
    const fs::path bundle = fixtures / "table1";

    const std::vector<std::string> outputs = {"m.fold", "m.txt", "m.svg", "m.prog", "slant.err",
                                              "report.txt", "report.csv"};
    const std::vector<int> expected_exit = {0, 0, 1, 0, 0};
    for (const char* run : {"run1", "run2"}) {
        const fs::path d = work / run;
        fs::remove_all(d);
        fs::create_directories(d);
        const std::string t = quote(tool);
        const std::vector<std::string> commands = {
            t + " generate miura --rows 2 --cols 2 --a 20 --b 20 --gamma 45 --out " + quote(d / "m.fold") +
                " >/dev/null",
            t + " compile " + quote(d / "m.fold") + " --stitch-w 5 --stitch-h 5 --out-chart " + quote(d / "m.txt") +
                " --out-svg " + quote(d / "m.svg") + " --out-machine " + quote(d / "m.prog") + " >/dev/null",
            t + " compile " + quote(inputs / "slant.fold") + " --stitch-w 1 --stitch-h 1 --out-chart " +
                quote(d / "slant.txt") + " 2>" + quote(d / "slant.err"),
            t + " analyze " + quote(bundle / "metadata.json") + " " + quote(bundle) + " --out " +
                quote(d / "report.txt") + " >/dev/null",
            t + " analyze " + quote(bundle / "metadata.json") + " " + quote(bundle) + " --csv --out " +
                quote(d / "report.csv") + " >/dev/null",
        };
        for (std::size_t i = 0; i < commands.size(); ++i) {
            const int code = shell(commands[i]);
            o.check(code == expected_exit[i],
                    std::string(run) + " example " + std::to_string(i + 1) + " exit " + std::to_string(code));
        }
        o.check(!fs::exists(d / "slant.txt"), std::string(run) + ": rejected compile left a chart");
    }
    for (const auto& name : outputs) {
        const fs::path a = work / "run1" / name, b = work / "run2" / name;
        if (!fs::exists(a) || !fs::exists(b)) {
            o.fail(name + " missing");
            continue;
        }
        o.check(read_file(a) == read_file(b), name + " differs between runs");
        o.check(fs::file_size(a) > 0, name + " is empty");
    }
    return o;
}

Outcome closed_form() {
    Outcome o;
    const double k = 0.8, d = 17.5, L = 42.0;
    SweepRecord r;
    r.samples = sine_sweep(k, 1.0);
    r.d_mm = d;
    r.L_mm = L;
    const auto series = sweep_to_moments(r);
    double worst = 0;
    for (const auto& p : series) {
        const double expected = k * d / L * std::sin(p.angle_deg * std::numbers::pi / 360.0);
        if (expected != 0) worst = std::max(worst, std::abs(p.moment - expected) / expected);
        else o.check(p.moment == 0, "nonzero moment at 0 degrees");
    }
    o.check(worst <= 1e-12, "relative error " + std::to_string(worst));
    o.check(!series.empty() && series.back().angle_deg == 180.0, "sweep does not end at 180 degrees");
    o.check(!series.empty() && peak_moment(series) == series.back().moment, "peak is not the 180 degree sample");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: knitfold_acceptance <tool> <fixtures dir> <work dir>\n";
        return 2;
    }
    const fs::path tool = fs::absolute(argv[1]);
    const fs::path fixtures = fs::absolute(argv[2]);
    const fs::path work = fs::absolute(argv[3]);
    fs::create_directories(work);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Table I regression, TableI convention, 20 conditions", table_regression},
        {"stitch rule table, 8 cases", rule_table},
        {"base pattern chart conformance", base_pattern_chart},
        {"rasterization oracle, 200 cases", rasterization},
        {"tessellation validity and end-to-end compile", [&] { return tessellations(tool, work); }},
        {"determinism of CLI examples", [&] { return determinism(tool, fixtures, work); }},
        {"moment pipeline closed form", closed_form},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << "\n";
        for (const auto& n : o.notes) std::cout << "       " << n << "\n";
        failures += !o.pass;
    }
    std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
