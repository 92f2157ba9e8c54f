// Command-line front end: analytic spectra, detector optimization, the
// homodyne quantum-limit point, stochastic simulation summaries, and preset
// reference datasets (figure subcommand).
//
// Exit codes: 0 success, 1 argument/configuration error, 2 numerical failure.
// All CSV numbers are printed with %.17g (lossless for float64); files use
// comma separators, LF line endings, a "# schema <name>" line, and a header
// row. Nothing time- or host-dependent is ever written, so reruns with equal
// flags are byte-identical.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "synodyne/covariance.hpp"
#include "synodyne/detection.hpp"
#include "synodyne/errors.hpp"
#include "synodyne/optimize.hpp"
#include "synodyne/params.hpp"
#include "synodyne/sim/demod.hpp"
#include "synodyne/sim/record_io.hpp"
#include "synodyne/sim/simulate.hpp"
#include "synodyne/sim/state_space.hpp"
#include "synodyne/sim/welch.hpp"
#include "synodyne/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace synodyne;

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Output plumbing

void write_text(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + *path);
    f << text;
    f.flush();
    if (!f) throw IoError("write failed: " + *path);
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string csv_text(const std::string& schema, const std::vector<std::string>& comments,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& cells) {
    std::string out = "# schema " + schema + "\n";
    for (const auto& c : comments) out += "# " + c + "\n";
    out += join(columns, ',') + "\n";
    std::vector<std::string> row;
    for (const auto& cell_row : cells) {
        row.clear();
        for (double v : cell_row) row.push_back(g17(v));
        out += join(row, ',') + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Options

struct Options {
    // shared
    std::optional<std::string> output;
    std::string format = "csv";

    // system parameters
    double omega_m = 0.2;
    double gamma_m = 0.002;
    double nbar = 0.0;
    std::optional<double> coop;
    std::optional<double> g;

    // spectrum grid
    std::optional<double> omega_lo;
    std::optional<double> omega_hi;
    int spectrum_points = 401;

    // optimize sweep
    std::string objective = "noise";
    double coop_lo = 1e-2;
    double coop_hi = 1e2;
    int sweep_points = 33;

    // simulate
    double dt = 0.01;
    double duration = 50000.0;
    std::uint64_t seed = 0;
    int segments = 8;
    double warmup = -1.0;
    std::optional<double> omega_s;
    std::optional<std::string> dump_record;

    // figure
    std::string which;
};

SystemParams params_from(const Options& o) {
    return make_params(o.omega_m, o.gamma_m, o.nbar, o.g, o.coop);
}

json coupling_json(const Options& o) {
    json c{{"omega-m", o.omega_m}, {"gamma-m", o.gamma_m}, {"nbar", o.nbar}};
    if (o.g)
        c["g"] = *o.g;
    else if (o.coop)
        c["coop"] = *o.coop;
    return c;
}

// Table emission shared by the spectrum and optimize subcommands: CSV with a
// schema line, or a JSON document whose "config" block holds exactly the
// key = value pairs (flag names sans dashes) that reproduce the run.
void emit_table(const Options& o, const std::string& schema,
                const std::vector<std::string>& comments, const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& cells, const json& config) {
    if (o.format == "json") {
        json doc{{"schema", schema}, {"config", config}, {"columns", columns}, {"rows", cells}};
        write_text(o.output, doc.dump(2) + "\n");
    } else {
        write_text(o.output, csv_text(schema, comments, columns, cells));
    }
}

// ---------------------------------------------------------------------------
// Subcommand bodies

const std::vector<std::string> kSpectrumColumns{"omega",     "c11",       "re_c12",
                                                "im_c12",    "c22",       "eig_minus",
                                                "eig_plus",  "hom_theta_star", "hom_min"};

std::vector<std::vector<double>> spectrum_cells(const std::vector<SpectrumRow>& rows) {
    std::vector<std::vector<double>> cells;
    cells.reserve(rows.size());
    for (const auto& r : rows)
        cells.push_back({r.omega, r.c11, r.re_c12, r.im_c12, r.c22, r.eig_minus, r.eig_plus,
                         r.hom_theta, r.hom_min});
    return cells;
}

const std::vector<std::string> kSweepColumns{"c_om", "pow_am", "pow_pm", "objective",
                                             "reference"};

std::vector<std::vector<double>> sweep_cells(const std::vector<SweepRow>& rows) {
    std::vector<std::vector<double>> cells;
    cells.reserve(rows.size());
    for (const auto& r : rows)
        cells.push_back({r.c_om, r.pow_am, r.pow_pm, r.objective, r.reference});
    return cells;
}

void run_spectrum(const Options& o) {
    const SystemParams p = params_from(o);
    const double lo = o.omega_lo.value_or(0.5 * p.omega_m);
    const double hi = o.omega_hi.value_or(1.5 * p.omega_m);
    const auto rows = spectrum_table(p, linear_grid(lo, hi, o.spectrum_points));

    json config = coupling_json(o);
    config["omega-lo"] = lo;
    config["omega-hi"] = hi;
    config["points"] = o.spectrum_points;
    config["format"] = o.format;
    emit_table(o, "synodyne.spectrum.v1", {}, kSpectrumColumns, spectrum_cells(rows), config);
}

void run_optimize(const Options& o) {
    SystemParams base = make_params(o.omega_m, o.gamma_m, o.nbar, std::nullopt, 1.0);
    const Objective obj = o.objective == "force" ? Objective::force : Objective::noise;
    const auto rows = sweep(base, log_grid(o.coop_lo, o.coop_hi, o.sweep_points), obj);

    json config{{"omega-m", o.omega_m}, {"gamma-m", o.gamma_m}, {"nbar", o.nbar},
                {"objective", o.objective}, {"coop-lo", o.coop_lo}, {"coop-hi", o.coop_hi},
                {"points", o.sweep_points}, {"format", o.format}};
    emit_table(o, "synodyne.sweep.v1", {"objective " + o.objective}, kSweepColumns,
               sweep_cells(rows), config);
}

void run_sql(const Options& o) {
    SystemParams tmpl = make_params(o.omega_m, o.gamma_m, o.nbar, 0.0, std::nullopt);
    const SqlPoint pt = sql(tmpl);

    json config{{"omega-m", o.omega_m}, {"gamma-m", o.gamma_m}, {"nbar", o.nbar},
                {"format", o.format}};
    if (o.format == "json") {
        json doc{{"schema", "synodyne.sql.v1"},
                 {"c_om_star", pt.c_om_star},
                 {"s_sql", pt.s_sql},
                 {"config", config}};
        write_text(o.output, doc.dump(2) + "\n");
    } else {
        write_text(o.output, csv_text("synodyne.sql.v1", {}, {"c_om_star", "s_sql"},
                                      {{pt.c_om_star, pt.s_sql}}));
    }
}

void run_simulate(const Options& o) {
    const SystemParams p = params_from(o);
    const double ws = o.omega_s.value_or(p.omega_m);
    if (!(ws > 0.0) || !std::isfinite(ws)) throw InvalidParameter("omega-s must be > 0");

    sim::SimConfig cfg;
    cfg.dt = o.dt;
    cfg.duration = o.duration;
    cfg.seed = o.seed;
    cfg.segments = o.segments;
    cfg.warmup = o.warmup;
    cfg.validate();

    // The detector under test: noise-optimal two-tone weights for the
    // covariance at the sideband frequency.
    const LoSpinor spinor = optimal_noise_spinor(covariance_at(p, ws)).spinor;
    const LoTones tones = tones_from_spinor(spinor, 2.0, ws);

    const sim::StateSpace ss = sim::build_state_space(p);
    const sim::TimeSeries ts = sim::simulate(ss, cfg);

    if (o.dump_record) {
        json meta{{"seed", o.seed},
                  {"params",
                   {{"omega_m", p.omega_m},
                    {"kappa", p.kappa},
                    {"gamma_m", p.gamma_m},
                    {"nbar", p.nbar},
                    {"g", p.g},
                    {"delta", p.delta}}},
                  {"lo",
                   {{"upper_re", tones.upper.real()},
                    {"upper_im", tones.upper.imag()},
                    {"lower_re", tones.lower.real()},
                    {"lower_im", tones.lower.imag()},
                    {"omega_s", tones.omega_s}}}};
        sim::write_record(*o.dump_record, ts, meta);
    }

    const sim::TimeSeries xi = sim::demodulate_synodyne(ts, tones);
    const std::vector<double>& rec = xi.channel("Xi");

    // Largest even segment length that still yields >= cfg.segments Welch
    // segments at 50% overlap.
    const std::size_t seg_len =
        2 * (rec.size() / (static_cast<std::size_t>(cfg.segments) + 1));
    const sim::Spectrum spec = sim::psd_welch(rec, cfg.dt, seg_len, 0.5);

    const double psd_dc = spec.dc();
    const double se = spec.dc_se();
    const double analytic = synodyne_psd_dc(covariance_at(p, ws), spinor);
    const double z = (psd_dc - analytic) / se;

    json config = coupling_json(o);
    config["omega-s"] = ws;
    config["dt"] = cfg.dt;
    config["duration"] = cfg.duration;
    config["seed"] = cfg.seed;
    config["segments"] = o.segments;
    config["warmup"] = cfg.warmup;

    json doc{{"schema", "synodyne.summary.v1"},
             {"psd_dc", psd_dc},
             {"stderr", se},
             {"analytic_reference", analytic},
             {"z_score", z},
             {"seed", cfg.seed},
             {"segments", spec.segments},
             {"n_eff", spec.n_eff},
             {"segment_length", seg_len},
             {"frames", rec.size()},
             {"config", config}};
    write_text(o.output, doc.dump(2) + "\n");
}

// Preset datasets. All use the reference system omega_m = 0.2, gamma_m =
// 0.002, nbar = 0 (rates in cavity-linewidth units).
std::filesystem::path insets_path(const std::string& output) {
    std::filesystem::path p(output);
    p.replace_extension();
    p += ".insets.csv";
    return p;
}

void run_figure(const Options& o) {
    const SystemParams base = make_params(0.2, 0.002, 0.0, std::nullopt, 0.9);
    const auto coop_grid = log_grid(1e-2, 1e2, 201);

    if (o.which == "fig2a") {
        // Covariance entries, eigenvalues, and optimized homodyne floor
        // across the mechanical resonance at cooperativity 0.9.
        const auto rows = spectrum_table(base, resonance_grid(base.omega_m, 0.5, 401));
        write_text(o.output, csv_text("synodyne.spectrum.v1", {"preset fig2a: cooperativity 0.9"},
                                      kSpectrumColumns, spectrum_cells(rows)));
    } else if (o.which == "fig2b") {
        // Noise-optimal detector across cooperativity: dc density (equals the
        // minimal covariance eigenvalue) and the tone power split.
        const auto rows = sweep(base, coop_grid, Objective::noise);
        write_text(o.output, csv_text("synodyne.sweep.v1", {"preset fig2b: objective noise"},
                                      kSweepColumns, sweep_cells(rows)));
    } else if (o.which == "fig3a") {
        // Force-measurement imprecision of the force-optimal two-tone
        // detector and of the phase-quadrature homodyne, both normalized by
        // the homodyne minimum over cooperativity (the standard quantum
        // limit). The homodyne column is the fixed phase quadrature, not the
        // per-frequency-optimized angle; the spectrum subcommand provides the
        // optimized-angle curve when that variant is wanted.
        const auto rows = sweep(base, coop_grid, Objective::force);
        const double s_sql = sql(base).s_sql;
        std::vector<std::vector<double>> cells;
        cells.reserve(rows.size());
        for (const auto& r : rows)
            cells.push_back({r.c_om, r.objective / s_sql, r.reference / s_sql});
        write_text(o.output,
                   csv_text("synodyne.force_imprecision.v1",
                            {"preset fig3a: normalization s_sql " + g17(s_sql)},
                            {"c_om", "synodyne_imprecision", "homodyne_imprecision"}, cells));
    } else {  // fig3b
        if (!o.output)
            throw InvalidArgument("figure fig3b writes a companion file; --output is required");
        // Tone power split of the force-optimal detector across
        // cooperativity, plus the local-oscillator waveform over one
        // mechanical cycle at two representative cooperativities.
        const auto rows = sweep(base, coop_grid, Objective::force);
        write_text(o.output, csv_text("synodyne.sweep.v1", {"preset fig3b: objective force"},
                                      kSweepColumns, sweep_cells(rows)));

        std::vector<std::vector<double>> cells;
        const double period = kTwoPi / base.omega_m;
        for (double c_om : {0.08, 2.0}) {
            const LoSpinor s = optimal_force_spinor(with_cooperativity(base, c_om)).spinor;
            const LoTones tones = tones_from_spinor(s, 1.0, base.omega_m);
            for (int k = 0; k <= 200; ++k) {
                const double t = period * k / 200.0;
                const cplx a = lo_amplitude(tones, t);
                cells.push_back({c_om, t, a.real(), a.imag()});
            }
        }
        write_text(insets_path(*o.output).string(),
                   csv_text("synodyne.lo_waveform.v1",
                            {"preset fig3b: force-optimal waveform, one mechanical cycle"},
                            {"c_om", "t", "re_alpha", "im_alpha"}, cells));
    }
}

// ---------------------------------------------------------------------------
// Flat key = value config files. The file's pairs become --key value tokens
// inserted right after the subcommand name; every option uses take-last
// multi-option policy, so explicit command-line flags win. Unknown keys fail
// parsing (exit code 1).

std::vector<std::string> load_config_tokens(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read config file: " + path);
    std::vector<std::string> tokens;
    std::string line;
    int lineno = 0;
    auto trim = [](const std::string& s) {
        const char* ws = " \t\r";
        const auto b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };
    while (std::getline(f, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        const std::string where = path + ":" + std::to_string(lineno);
        if (eq == std::string::npos)
            throw InvalidArgument("config " + where + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw InvalidArgument("config " + where + ": expected key = value");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        tokens.push_back("--" + key);
        tokens.push_back(value);
    }
    return tokens;
}

std::vector<std::string> expand_argv(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> config_path;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) throw InvalidArgument("--config expects a file path");
            if (config_path) throw InvalidArgument("--config given twice");
            config_path = args[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            if (config_path) throw InvalidArgument("--config given twice");
            config_path = a.substr(9);
        } else {
            out.push_back(a);
        }
    }
    if (config_path) {
        const auto extra = load_config_tokens(*config_path);
        const auto sub = std::find_if(out.begin(), out.end(), [](const std::string& s) {
            return !s.empty() && s[0] != '-';
        });
        if (sub == out.end())
            throw InvalidArgument("a subcommand is required when --config is used");
        out.insert(sub + 1, extra.begin(), extra.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// CLI wiring

template <typename T>
CLI::Option* opt(CLI::App* sub, const std::string& name, T& var, const std::string& desc) {
    return sub->add_option(name, var, desc)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void add_param_flags(CLI::App* sub, Options& o, bool coupling) {
    opt(sub, "--omega-m", o.omega_m, "mechanical frequency (units of kappa)")
        ->capture_default_str();
    opt(sub, "--gamma-m", o.gamma_m, "mechanical linewidth")->capture_default_str();
    opt(sub, "--nbar", o.nbar, "thermal occupation of the mechanical bath")
        ->capture_default_str();
    if (coupling) {
        opt(sub, "--coop", o.coop, "measurement cooperativity 2 g^2 / (kappa gamma_m)");
        opt(sub, "--g", o.g, "linearized coupling rate (alternative to --coop)");
    }
}

void add_output_flags(CLI::App* sub, Options& o, bool with_format) {
    opt(sub, "--output", o.output, "write to this file instead of stdout");
    if (with_format)
        opt(sub, "--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Two-tone (synodyne) detection for a resonantly pumped optomechanical cavity:\n"
        "closed-form output spectra, detector optimization, and stochastic validation.\n"
        "A flat key = value config file may supply any option of the chosen subcommand\n"
        "(--config FILE); explicit flags override the file, unknown keys are rejected."};
    app.require_subcommand(1);
    Options o;

    // --config is handled before CLI11 sees the tokens; register the flag so
    // it appears in help output.
    std::string config_dummy;
    app.add_option("--config", config_dummy, "flat key = value option file")
        ->group("Configuration");

    CLI::App* sc_spectrum = app.add_subcommand(
        "spectrum", "Covariance entries, eigenvalues, and homodyne floor over a frequency grid");
    add_param_flags(sc_spectrum, o, true);
    opt(sc_spectrum, "--omega-lo", o.omega_lo, "grid start (default 0.5 * omega_m)");
    opt(sc_spectrum, "--omega-hi", o.omega_hi, "grid end (default 1.5 * omega_m)");
    opt(sc_spectrum, "--points", o.spectrum_points, "grid size")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    add_output_flags(sc_spectrum, o, true);

    CLI::App* sc_optimize = app.add_subcommand(
        "optimize", "Optimal two-tone detector over a cooperativity grid");
    add_param_flags(sc_optimize, o, false);
    opt(sc_optimize, "--objective", o.objective, "minimize dc noise or force imprecision")
        ->check(CLI::IsMember({"noise", "force"}))
        ->capture_default_str();
    opt(sc_optimize, "--coop-lo", o.coop_lo, "grid start")->capture_default_str();
    opt(sc_optimize, "--coop-hi", o.coop_hi, "grid end")->capture_default_str();
    opt(sc_optimize, "--points", o.sweep_points, "grid size (log-spaced)")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    add_output_flags(sc_optimize, o, true);

    CLI::App* sc_sql = app.add_subcommand(
        "sql", "Cooperativity minimizing the phase-homodyne force imprecision, and the minimum");
    add_param_flags(sc_sql, o, false);
    add_output_flags(sc_sql, o, true);

    CLI::App* sc_simulate = app.add_subcommand(
        "simulate",
        "Integrate the Langevin dynamics, demodulate with the noise-optimal two-tone detector, "
        "and report the dc density of the demodulated record against the closed form");
    add_param_flags(sc_simulate, o, true);
    opt(sc_simulate, "--omega-s", o.omega_s, "detector sideband frequency (default omega_m)");
    opt(sc_simulate, "--dt", o.dt, "integration step")->capture_default_str();
    opt(sc_simulate, "--duration", o.duration, "recorded span (excludes warmup)")
        ->capture_default_str();
    opt(sc_simulate, "--seed", o.seed, "noise seed; equal seeds give identical records")
        ->capture_default_str();
    opt(sc_simulate, "--segments", o.segments, "Welch segment count")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    opt(sc_simulate, "--warmup", o.warmup, "discarded pre-roll; negative = automatic")
        ->capture_default_str();
    opt(sc_simulate, "--dump-record", o.dump_record,
        "also write the raw two-quadrature record (float64 + JSON sidecar) here");
    add_output_flags(sc_simulate, o, false);

    CLI::App* sc_figure = app.add_subcommand(
        "figure", "Preset datasets (reference system omega_m = 0.2, gamma_m = 0.002, nbar = 0)");
    sc_figure->add_option("which", o.which, "fig2a | fig2b | fig3a | fig3b")
        ->required()
        ->check(CLI::IsMember({"fig2a", "fig2b", "fig3a", "fig3b"}));
    add_output_flags(sc_figure, o, false);

    try {
        std::vector<std::string> tokens = expand_argv(argc, argv);
        std::vector<const char*> cargv;
        cargv.push_back(argv[0]);
        for (const auto& t : tokens) cargv.push_back(t.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());

        if (*sc_spectrum)
            run_spectrum(o);
        else if (*sc_optimize)
            run_optimize(o);
        else if (*sc_sql)
            run_sql(o);
        else if (*sc_simulate)
            run_simulate(o);
        else if (*sc_figure)
            run_figure(o);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
