#include "smearlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "smearlab/errors.hpp"
#include "smearlab/measurement_stats.hpp"
#include "smearlab/phase_space.hpp"
#include "smearlab/report.hpp"
#include "smearlab/smeared_spin_one.hpp"

namespace smearlab {

namespace {

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (config.out.empty()) {
        out << text;
        out.flush();
        return;
    }
    std::ofstream f(config.out, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write '" + config.out + "'");
    f << text;
    f.close();
    if (!f) throw ConfigError("cannot write '" + config.out + "'");
}

void require_tolerance(double tol) {
    if (!(tol > 0) || !std::isfinite(tol)) throw ConfigError("tolerance must be positive and finite");
}

std::vector<std::string> deltas_or_default(const RunConfig& config) {
    return config.deltas.empty() ? default_deltas(config.backend) : config.deltas;
}

}  // namespace

std::vector<std::string> default_deltas(Backend backend) {
    if (backend == Backend::exact) return {"0", "1/4", "1"};
    return {"0", "1e-6", "0.25", "1"};
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    require_tolerance(config.tol);
    const auto suites = run_verify(config.backend, deltas_or_default(config), config.tol);
    const ReportOptions opts{config.timing};
    const auto format = config.format.value_or(OutputFormat::json);
    emit(config, format == OutputFormat::csv ? suites_csv(suites) : dump(verify_document(config.backend, config.tol, suites, opts)),
         out);
    return all_pass(suites) ? kExitPass : kExitFail;
}

int cmd_measure(const RunConfig& config, std::ostream& out) {
    if (config.backend != Backend::floating) throw ConfigError("measure samples outcomes and needs the float backend");
    if (config.deltas.size() > 1) throw ConfigError("measure takes a single --delta");
    const std::string delta_text = config.deltas.empty() ? "0.25" : config.deltas.front();
    const double delta = parse_float_delta(delta_text);
    if (config.shots == 0) throw ConfigError("shots must be positive");
    const auto ops = build_one_particle(SmearingParams<Complex>::from_delta(delta));
    const auto psi = parse_state(config.state, ops);
    const auto axes = parse_axes(config.axes);
    const auto stats = sequential_measurement(psi, ops, axes, config.shots, config.seed);
    const auto format = config.format.value_or(OutputFormat::json);
    emit(config, format == OutputFormat::csv ? measurement_csv(stats) : dump(measurement_json(stats, config.state, delta_text)),
         out);
    return kExitPass;
}

int cmd_curve(const RunConfig& config, std::ostream& out) {
    if (!(config.alpha >= 0) || !(config.eta >= 0) || !std::isfinite(config.alpha) || !std::isfinite(config.eta))
        throw ConfigError("alpha and eta must be nonnegative and finite");
    if (!(config.hbar > 0) || !std::isfinite(config.hbar)) throw ConfigError("hbar must be positive and finite");
    if (!(config.dx_min > 0) || !(config.dx_max >= config.dx_min) || !std::isfinite(config.dx_max))
        throw ConfigError("need 0 < dx-min <= dx-max");
    if (config.samples == 0) throw ConfigError("samples must be positive");
    const auto curve =
        egup_bound(config.alpha, config.eta, config.hbar, linear_samples(config.dx_min, config.dx_max, config.samples));
    const auto format = config.format.value_or(OutputFormat::csv);
    emit(config, format == OutputFormat::csv ? curve_csv(curve) : dump(curve_json(curve)), out);
    return kExitPass;
}

int cmd_report(const RunConfig& config, std::ostream& out) {
    require_tolerance(config.tol);
    if (config.format.value_or(OutputFormat::json) != OutputFormat::json)
        throw ConfigError("report is emitted as JSON only");
    auto suites = run_verify(config.backend, deltas_or_default(config), config.tol);
    suites.push_back(run_phase_space_suite(config.tol));
    const auto doc = assemble_report(derive_constants(RawConstants{}), suites, ReportOptions{config.timing});
    emit(config, dump(doc), out);
    return doc["overall_pass"].get<bool>() ? kExitPass : kExitFail;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smeared-space spin algebra verification and phase-space tools", "smearlab"};
    app.require_subcommand(1);
    RunConfig config;
    std::string backend = "float";
    std::string format;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--delta", config.deltas, "smearing ratio delta = beta/hbar (repeatable)");
        sub->add_option("--backend", backend, "float or exact")->capture_default_str();
        sub->add_option("--tol", config.tol, "float residual tolerance")->capture_default_str();
        sub->add_option("--seed", config.seed, "Monte Carlo seed")->capture_default_str();
        sub->add_option("--shots", config.shots, "Monte Carlo shots")->capture_default_str();
        sub->add_option("--out", config.out, "output file (default: stdout)");
        sub->add_option("--format", format, "json or csv");
        sub->add_flag("--timing", config.timing, "include wall times (output no longer byte-reproducible)");
    };
    auto* verify = app.add_subcommand("verify", "run the verification suites for each delta");
    common(verify);
    auto* measure = app.add_subcommand("measure", "sequential measurement statistics");
    common(measure);
    measure->add_option("--state", config.state, "named state (up_z, down_prime_x, ...) or four amplitudes")
        ->capture_default_str();
    measure->add_option("--axes", config.axes, "comma-separated axis sequence")->capture_default_str();
    auto* curve = app.add_subcommand("curve", "EGUP lower bound on dp over a dx range");
    common(curve);
    curve->add_option("--alpha", config.alpha)->capture_default_str();
    curve->add_option("--eta", config.eta)->capture_default_str();
    curve->add_option("--hbar", config.hbar)->capture_default_str();
    curve->add_option("--dx-min", config.dx_min)->capture_default_str();
    curve->add_option("--dx-max", config.dx_max)->capture_default_str();
    curve->add_option("--samples", config.samples)->capture_default_str();
    auto* report = app.add_subcommand("report", "constants, delta check and every suite as one JSON document");
    common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        config.backend = parse_backend(backend);
        if (format == "json")
            config.format = OutputFormat::json;
        else if (format == "csv")
            config.format = OutputFormat::csv;
        else if (!format.empty())
            throw ConfigError("format must be 'json' or 'csv', got '" + format + "'");
        if (verify->parsed()) return cmd_verify(config, out);
        if (measure->parsed()) return cmd_measure(config, out);
        if (curve->parsed()) return cmd_curve(config, out);
        return cmd_report(config, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace smearlab
