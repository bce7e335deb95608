#include "knitfold/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

#include "knitfold/emit.hpp"
#include "knitfold/tessellations.hpp"

namespace knitfold {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

class IoError : public Error {
public:
    using Error::Error;
};

double config_number(const json& v, const char* key) {
    if (!v.is_number()) throw SchemaError(std::string("config '") + key + "' must be a number");
    return v.get<double>();
}

std::string config_string(const json& v, const char* key) {
    if (!v.is_string()) throw SchemaError(std::string("config '") + key + "' must be a string");
    return v.get<std::string>();
}

OffGridPolicy parse_policy(const std::string& s) {
    if (s == "reject") return OffGridPolicy::Reject;
    if (s == "snap") return OffGridPolicy::Snap;
    if (s == "staircase") return OffGridPolicy::Staircase;
    throw SchemaError("unknown offgrid policy '" + s + "' (expected reject, snap or staircase)");
}

ChartFormat parse_format(const std::string& s) {
    if (s == "text") return ChartFormat::Text;
    if (s == "svg") return ChartFormat::Svg;
    if (s == "machine") return ChartFormat::Machine;
    throw SchemaError("unknown chart format '" + s + "' (expected text, svg or machine)");
}

StitchType parse_twist(const std::string& s) {
    if (s == "twist_left") return StitchType::TwistLeft;
    if (s == "twist_right") return StitchType::TwistRight;
    throw SchemaError("twist_map entries must be twist_left or twist_right, got '" + s + "'");
}

TwistMap parse_twist_map(const json& v) {
    if (!v.is_object()) throw SchemaError("config 'twist_map' must be an object");
    TwistMap map;
    for (Orientation o : {Orientation::DiagFwd, Orientation::DiagBwd}) {
        auto row = v.find(to_string(o));
        if (row == v.end() || !row->is_object()) {
            throw SchemaError(std::string("twist_map needs an object for '") + to_string(o) + "'");
        }
        for (FoldType f : {FoldType::Mountain, FoldType::Valley}) {
            auto entry = row->find(to_string(f));
            if (entry == row->end()) {
                throw SchemaError(std::string("twist_map is missing ") + to_string(o) + "." + to_string(f));
            }
            map.set(o, f, parse_twist(config_string(*entry, "twist_map")));
        }
        if (row->size() != 2) throw SchemaError(std::string("twist_map.") + to_string(o) + " has unknown keys");
    }
    if (v.size() != 2) throw SchemaError("twist_map has unknown keys");
    return map;
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<fs::path> out;
    for (const auto& in : inputs) {
        const fs::path p(in);
        if (fs::is_directory(p)) {
            std::vector<fs::path> found;
            for (const auto& entry : fs::directory_iterator(p)) {
                if (entry.is_regular_file() && entry.path().extension() == ".csv") found.push_back(entry.path());
            }
            std::sort(found.begin(), found.end());
            out.insert(out.end(), found.begin(), found.end());
        } else {
            out.push_back(p);
        }
    }
    return out;
}

fs::path sibling_with_extension(const fs::path& p, const char* ext) {
    fs::path out = p;
    out.replace_extension(ext);
    return out;
}

struct CompileArgs {
    std::string pattern;
    std::string config;
    std::string out_chart;
    std::string out_svg;
    std::string out_machine;
    std::optional<double> stitch_w;
    std::optional<double> stitch_h;
    std::optional<double> tol;
    std::optional<std::string> policy;
    std::optional<int> wale_buffer;
};

struct AnalyzeArgs {
    std::string metadata;
    std::vector<std::string> sweeps;
    std::string out;
    std::string config;
    std::optional<std::string> convention;
    bool csv = false;
};

struct LintArgs {
    std::string pattern;
    bool maekawa = false;
};

struct GenerateArgs {
    std::string out;
    bool no_snap45 = false;
    std::string polarity = "normal";
    MiuraParams miura;
    YoshimuraParams yoshimura;
    KreslingParams kresling;
    KaleidocycleParams kaleidocycle;
};

Polarity parse_polarity(const std::string& s) {
    return s == "flipped" ? Polarity::Flipped : Polarity::Normal;
}

int do_compile(const CompileArgs& a, std::ostream& out, std::ostream& err) {
    ToolConfig cfg = a.config.empty() ? ToolConfig{} : parse_tool_config(read_file(a.config));
    if (a.stitch_w) cfg.gauge.stitch_w = *a.stitch_w;
    if (a.stitch_h) cfg.gauge.stitch_h = *a.stitch_h;
    if (a.tol) cfg.rules.orientation_tol_deg = *a.tol;
    if (a.policy) cfg.rules.offgrid_policy = parse_policy(*a.policy);
    if (a.wale_buffer) cfg.rules.wale_buffer = *a.wale_buffer;

    const CreasePattern pattern = parse_pattern(read_file(a.pattern));
    const StitchChart chart = compile(pattern, cfg.gauge, cfg.rules);
    for (const auto& w : chart.warnings) err << to_string(w) << "\n";

    auto wants = [&](ChartFormat f) {
        return std::find(cfg.chart_formats.begin(), cfg.chart_formats.end(), f) != cfg.chart_formats.end();
    };
    const fs::path chart_path(a.out_chart);
    std::vector<std::pair<fs::path, std::string>> artifacts;
    artifacts.emplace_back(chart_path, render_text_chart(chart));
    if (!a.out_svg.empty() || wants(ChartFormat::Svg)) {
        const fs::path p = a.out_svg.empty() ? sibling_with_extension(chart_path, ".svg") : fs::path(a.out_svg);
        artifacts.emplace_back(p, render_svg_chart(chart));
    }
    if (!a.out_machine.empty() || wants(ChartFormat::Machine)) {
        const fs::path p =
            a.out_machine.empty() ? sibling_with_extension(chart_path, ".prog") : fs::path(a.out_machine);
        artifacts.emplace_back(p, render_machine_program(emit_machine_program(chart)));
    }
    for (const auto& [path, content] : artifacts) {
        write_file_atomic(path, content);
        out << "wrote " << path.string() << "\n";
    }
    out << "chart " << chart.grid.rows << "x" << chart.grid.cols << ", " << chart.trace.size()
        << " fold traces, " << chart.warnings.size() << " warnings\n";
    return kExitOk;
}

int do_generate(const std::string& kind, GenerateArgs a, std::ostream& out) {
    const bool snap = !a.no_snap45;
    const Polarity polarity = parse_polarity(a.polarity);
    CreasePattern p;
    if (kind == "miura") {
        a.miura.snap45 = snap;
        a.miura.polarity = polarity;
        p = gen_miura(a.miura);
    } else if (kind == "yoshimura") {
        a.yoshimura.snap45 = snap;
        a.yoshimura.polarity = polarity;
        p = gen_yoshimura(a.yoshimura);
    } else if (kind == "kresling") {
        a.kresling.snap45 = snap;
        a.kresling.polarity = polarity;
        p = gen_kresling(a.kresling);
    } else {
        a.kaleidocycle.snap45 = snap;
        a.kaleidocycle.polarity = polarity;
        p = gen_kaleidocycle(a.kaleidocycle);
    }
    write_file_atomic(a.out, serialize_pattern(p));
    out << "wrote " << a.out << " (" << p.vertices.size() << " vertices, " << p.edges.size() << " edges)\n";
    return kExitOk;
}

int do_lint(const LintArgs& a, std::ostream& out) {
    const CreasePattern p = parse_pattern(read_file(a.pattern));
    std::size_t warnings = 0;
    if (a.maekawa) {
        for (const auto& d : maekawa_lint(p)) {
            out << to_string(d) << "\n";
            ++warnings;
        }
    }
    out << a.pattern << ": " << p.vertices.size() << " vertices, " << p.edges.size() << " edges, "
        << warnings << " warnings\n";
    return kExitOk;
}

int do_analyze(const AnalyzeArgs& a, std::ostream& out) {
    RConvention convention = RConvention::TableI;
    const SweepMetadata meta = SweepMetadata::parse(read_file(a.metadata));
    if (meta.convention()) convention = *meta.convention();
    if (!a.config.empty()) {
        const ToolConfig cfg = parse_tool_config(read_file(a.config));
        if (cfg.convention_set) convention = cfg.convention;
    }
    if (a.convention) convention = parse_convention(*a.convention);

    const auto files = expand_inputs(a.sweeps);
    if (files.empty()) throw SchemaError("no sweep CSV files given");
    std::vector<SweepRecord> records;
    records.reserve(files.size());
    for (std::size_t i = 0; i < files.size(); ++i) {
        const auto name = files[i].filename().string();
        SweepRecord r;
        try {
            r.samples = parse_sweep_csv(read_file(files[i]));
        } catch (const SchemaError& e) {
            throw SchemaError(files[i].string() + ": " + e.what());
        }
        const SweepInfo info = meta.lookup(name, static_cast<int>(i));
        r.d_mm = info.d_mm;
        r.L_mm = info.L_mm;
        r.direction = info.direction;
        r.labels = info.labels;
        r.replicate = info.replicate;
        try {
            check_record(r);
        } catch (const DomainError& e) {
            throw DomainError(files[i].string() + ": " + e.what());
        }
        records.push_back(std::move(r));
    }
    const auto summaries = summarize_groups(records, convention);
    const std::string report =
        a.csv ? render_report_csv(summaries, convention) : render_report(summaries, convention);
    write_file_atomic(a.out, report);
    out << "wrote " << a.out << " (" << summaries.size() << " conditions from " << records.size()
        << " sweeps)\n";
    return kExitOk;
}

}  // namespace

ToolConfig parse_tool_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed config JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("config must be a JSON object");
    ToolConfig cfg;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        const json& v = it.value();
        if (key == "stitch_w_mm") {
            cfg.gauge.stitch_w = config_number(v, "stitch_w_mm");
        } else if (key == "stitch_h_mm") {
            cfg.gauge.stitch_h = config_number(v, "stitch_h_mm");
        } else if (key == "orientation_tol_deg") {
            cfg.rules.orientation_tol_deg = config_number(v, "orientation_tol_deg");
        } else if (key == "offgrid_policy") {
            cfg.rules.offgrid_policy = parse_policy(config_string(v, "offgrid_policy"));
        } else if (key == "wale_buffer") {
            if (!v.is_number_integer()) throw SchemaError("config 'wale_buffer' must be an integer");
            cfg.rules.wale_buffer = v.get<int>();
        } else if (key == "twist_map") {
            cfg.rules.twist_map = parse_twist_map(v);
        } else if (key == "fusible_fraction") {
            cfg.rules.fusible_fraction = config_number(v, "fusible_fraction");
        } else if (key == "chart_formats") {
            if (!v.is_array() || v.empty()) throw SchemaError("config 'chart_formats' must be a non-empty array");
            cfg.chart_formats.clear();
            for (const auto& f : v) cfg.chart_formats.push_back(parse_format(config_string(f, "chart_formats")));
        } else if (key == "r_convention") {
            cfg.convention = parse_convention(config_string(v, "r_convention"));
            cfg.convention_set = true;
        } else {
            throw SchemaError("unknown config key '" + key + "'");
        }
    }
    check_config(cfg.rules);
    if (cfg.gauge.stitch_w != 0.0 || cfg.gauge.stitch_h != 0.0) check_gauge(cfg.gauge);
    return cfg;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_atomic(const fs::path& path, std::string_view content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw IoError("failed writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
    }
}

const char* version() { return "knitfold 0.1.0"; }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compile origami crease patterns into knitting charts and analyze fold moments", "knitfold"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    CompileArgs ca;
    auto* compile_cmd = app.add_subcommand("compile", "Compile a crease pattern into a stitch chart");
    compile_cmd->add_option("pattern", ca.pattern, "Crease pattern (.fold JSON)")->required();
    compile_cmd->add_option("--config", ca.config, "Tool config JSON");
    compile_cmd->add_option("--out-chart", ca.out_chart, "Text chart output")->required();
    compile_cmd->add_option("--out-svg", ca.out_svg, "SVG chart output");
    compile_cmd->add_option("--out-machine", ca.out_machine, "Machine program output");
    compile_cmd->add_option("--stitch-w", ca.stitch_w, "Stitch width in mm");
    compile_cmd->add_option("--stitch-h", ca.stitch_h, "Row height in mm");
    compile_cmd->add_option("--tol", ca.tol, "Orientation tolerance in degrees");
    compile_cmd->add_option("--offgrid", ca.policy, "Off-grid crease policy")
        ->check(CLI::IsMember({"reject", "snap", "staircase"}));
    compile_cmd->add_option("--wale-buffer", ca.wale_buffer, "Acrylic rows kept beside each fold");

    GenerateArgs ga;
    auto* generate_cmd = app.add_subcommand("generate", "Generate a parametric tessellation");
    generate_cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", ga.out, "Output pattern (.fold JSON)")->required();
        cmd->add_flag("--no-snap45", ga.no_snap45, "Allow creases off the 45 degree grid");
        cmd->add_option("--polarity", ga.polarity, "Fold polarity")
            ->check(CLI::IsMember({"normal", "flipped"}));
    };
    auto* miura = generate_cmd->add_subcommand("miura", "Miura-ori");
    miura->add_option("--rows", ga.miura.rows);
    miura->add_option("--cols", ga.miura.cols);
    miura->add_option("--a", ga.miura.a, "Parallelogram base in mm");
    miura->add_option("--b", ga.miura.b, "Parallelogram height in mm");
    miura->add_option("--gamma", ga.miura.gamma_deg, "Zigzag angle in degrees");
    add_common(miura);
    auto* yoshimura = generate_cmd->add_subcommand("yoshimura", "Yoshimura");
    yoshimura->add_option("--rows", ga.yoshimura.rows);
    yoshimura->add_option("--cols", ga.yoshimura.cols);
    yoshimura->add_option("--width", ga.yoshimura.w, "Diamond width in mm");
    yoshimura->add_option("--height", ga.yoshimura.h, "Diamond height in mm");
    add_common(yoshimura);
    auto* kresling = generate_cmd->add_subcommand("kresling", "Kresling strip");
    kresling->add_option("--n", ga.kresling.n, "Panel count");
    kresling->add_option("--panel-w", ga.kresling.panel_w);
    kresling->add_option("--panel-h", ga.kresling.panel_h);
    kresling->add_option("--shear", ga.kresling.shear);
    add_common(kresling);
    auto* kaleido = generate_cmd->add_subcommand("kaleidocycle", "Kaleidocycle strip");
    kaleido->add_option("--units", ga.kaleidocycle.units);
    kaleido->add_option("--unit-w", ga.kaleidocycle.unit_w);
    kaleido->add_option("--unit-h", ga.kaleidocycle.unit_h);
    add_common(kaleido);

    LintArgs la;
    auto* lint_cmd = app.add_subcommand("lint", "Validate a crease pattern");
    lint_cmd->add_option("pattern", la.pattern, "Crease pattern (.fold JSON)")->required();
    lint_cmd->add_flag("--maekawa", la.maekawa, "Report flat-foldability warnings");

    AnalyzeArgs aa;
    auto* analyze_cmd = app.add_subcommand("analyze", "Summarize fold moment sweeps");
    analyze_cmd->add_option("metadata", aa.metadata, "Sweep metadata JSON")->required();
    analyze_cmd->add_option("sweeps", aa.sweeps, "Sweep CSV files or directories")->required();
    analyze_cmd->add_option("--out", aa.out, "Report output")->required();
    analyze_cmd->add_option("--config", aa.config, "Tool config JSON");
    analyze_cmd->add_option("--r-convention", aa.convention, "TableI or Eq1")
        ->check(CLI::IsMember({"TableI", "Eq1"}));
    analyze_cmd->add_flag("--csv", aa.csv, "Write CSV instead of the text report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compile_cmd) return do_compile(ca, out, err);
        if (*generate_cmd) {
            for (const char* kind : {"miura", "yoshimura", "kresling", "kaleidocycle"}) {
                if (generate_cmd->got_subcommand(kind)) return do_generate(kind, ga, out);
            }
        }
        if (*lint_cmd) return do_lint(la, out);
        if (*analyze_cmd) return do_analyze(aa, out);
    } catch (const CompileError& e) {
        err << "error: compile failed\n";
        for (const auto& d : e.issues()) err << "  " << to_string(d) << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("knitfold");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace knitfold
