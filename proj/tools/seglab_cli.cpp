// seglab: solve, analyze and sweep segregation fields from INI configs.
//
// Exit status: 0 success, 1 analysis failure, 2 input error, 3 solver nonconvergence.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "seglab/checks.hpp"
#include "seglab/claims.hpp"
#include "seglab/config.hpp"
#include "seglab/error.hpp"
#include "seglab/excess.hpp"
#include "seglab/frequency.hpp"
#include "seglab/interface.hpp"
#include "seglab/measures.hpp"
#include "seglab/profile1d.hpp"
#include "seglab/snapshot.hpp"
#include "seglab/sweep.hpp"

using namespace seglab;
namespace fs = std::filesystem;

namespace {

enum Exit : int { kOk = 0, kAnalysis = 1, kInput = 2, kNonconvergence = 3 };

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const fs::path& dir, const char* name) {
    fs::create_directories(dir);
    std::ofstream os(dir / name);
    if (!os) throw Error(ErrorCode::Io, "cannot write " + (dir / name).string());
    return os;
}

fs::path output_dir(const RunConfig& cfg, const std::string& flag) { return flag.empty() ? cfg.output_dir : fs::path(flag); }

template <class T>
const T& require(const std::optional<T>& section, const char* name) {
    if (!section) throw Error(ErrorCode::ConfigParse, std::string(name) + ": section missing");
    return *section;
}

int cmd_solve(const std::string& config_path, const std::string& out_flag) {
    const RunConfig cfg = load_config(config_path);
    SolveConfig sc = require(cfg.solve, "solve");
    require(cfg.data, "data");
    const BoundaryData bd = cfg.boundary_data();
    Domain domain = cfg.domain ? *cfg.domain
                               : (cfg.data->kind == BoundaryKind::CustomSnapshot
                                      ? read_snapshot(cfg.data->snapshot).domain()
                                      : throw Error(ErrorCode::ConfigParse, "domain: section missing"));
    const SolveResult res = solve_system(domain, bd, sc);
    const fs::path dir = output_dir(cfg, out_flag);
    fs::create_directories(dir);
    write_snapshot(dir / "snapshot.seg", res.field);

    std::ofstream report = open_out(dir, "report.txt");
    report << "data=" << bd.description << '\n' << "beta=" << num(sc.beta) << '\n' << res.report.to_text();
    const AnalysisSettings settings = cfg.analysis ? cfg.analysis->settings : AnalysisSettings{};
    try {
        const auto curve = extract_interface(res.field.difference(), Region::disk(settings.center, settings.interface_radius));
        const PointValue pv = interface_min_sum(res.field, curve);
        report << "interface_min_sum=" << num(pv.value) << '\n'
               << "interface_min_sum_x=" << num(pv.at.x) << '\n'
               << "interface_min_sum_y=" << num(pv.at.y) << '\n';
    } catch (const Error& e) {
        report << "interface_min_sum=nan\n" << "interface_note=" << e.what() << '\n';
    }
    open_out(dir, "timing.txt") << "wall_seconds=" << num(res.report.wall_seconds) << '\n';

    std::printf("%s: %zu sweeps, residual %.3g, %s\n", (dir / "snapshot.seg").c_str(), res.report.iterations,
                res.report.residual, res.report.converged ? "converged" : "NOT converged");
    if (res.report.under_resolved) std::fprintf(stderr, "warning: grid does not resolve the layer beta^{-1/4}\n");
    return res.report.converged ? kOk : kNonconvergence;
}

int cmd_analyze(const std::string& config_path, const std::string& snapshot_path, const std::string& out_flag) {
    const RunConfig cfg = load_config(config_path);
    const AnalysisSection& an = require(cfg.analysis, "analysis");
    if (an.tasks.empty()) throw Error(ErrorCode::ConfigParse, "analysis.tasks: nothing to run");
    const MultiField mf = read_snapshot(snapshot_path);
    const AnalysisSettings& s = an.settings;
    const fs::path dir = output_dir(cfg, out_flag);

    for (AnalysisTask task : an.tasks) {
        switch (task) {
            case AnalysisTask::Frequency: {
                const FrequencyProfile p =
                    frequency_profile(mf, s.center, s.freq_rmin, s.freq_rmax, s.freq_samples, s.freq_slack);
                std::ofstream os = open_out(dir, "frequency.csv");
                os << "r,N\n";
                for (std::size_t k = 0; k < p.radii.size(); ++k) os << num(p.radii[k]) << ',' << num(p.values[k]) << '\n';
                std::printf("frequency: N(%.3g)=%.6g, N(%.3g)=%.6g, %s\n", p.radii.front(), p.values.front(),
                            p.radii.back(), p.values.back(), p.monotone() ? "monotone" : "NOT monotone");
                break;
            }
            case AnalysisTask::Excess: {
                std::size_t kmax = s.kmax;
                if (kmax == 0)
                    while (s.excess_base_radius * std::pow(s.theta, static_cast<double>(kmax + 1)) >= 2.0 * mf.domain().h())
                        ++kmax;
                const ExcessSequence seq =
                    dyadic_excess_sequence(mf.difference(), s.center, s.theta, kmax, mf.beta(), s.excess_base_radius);
                std::ofstream os = open_out(dir, "excess.csv");
                os << "k,scale,E,ex,ey,drift\n";
                for (std::size_t k = 0; k < seq.E.size(); ++k)
                    os << k << ',' << num(seq.scales[k]) << ',' << num(seq.E[k]) << ',' << num(seq.e[k].x) << ','
                       << num(seq.e[k].y) << ',' << num(seq.drift[k]) << '\n';
                std::printf("excess: %zu scales, E0=%.6g, r_beta/beta^{-1/4}=%.4g\n", seq.E.size(), seq.E.front(),
                            seq.r_beta_ratio());
                break;
            }
            case AnalysisTask::Interface: {
                const InterfaceCurve c =
                    extract_interface(mf.difference(), Region::disk(s.center, s.interface_radius), an.direction);
                const Vec2 e = c.graph_direction;
                const Vec2 t{e.y, -e.x};
                std::ofstream os = open_out(dir, "interface.csv");
                os << "idx,x,y,xp,h\n";
                for (std::size_t k = 0; k < c.vertices.size(); ++k) {
                    const Vec2 v = c.vertices[k];
                    os << k << ',' << num(v.x) << ',' << num(v.y) << ',' << num(dot(v, t)) << ',' << num(dot(v, e)) << '\n';
                }
                std::printf("interface: %zu vertices, %s, Lipschitz %.6g\n", c.vertices.size(),
                            c.is_graph ? "graph" : "not a graph", c.lipschitz_constant);
                break;
            }
        }
    }
    return kOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_flag, std::size_t jobs) {
    const RunConfig cfg = load_config(config_path);
    SweepPlan plan = require(cfg.sweep, "sweep");
    if (jobs > 0) plan.jobs = jobs;
    const auto records = run_sweep(plan);
    const auto fits = fit_records(records);
    const fs::path dir = output_dir(cfg, out_flag);
    emit_report(records, fits, dir);
    std::ifstream summary(dir / "summary.txt");
    std::cout << summary.rdbuf();
    const bool all_converged = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.converged; });
    return all_converged ? kOk : kNonconvergence;
}

int cmd_profile(const std::string& config_path, const std::string& out_flag) {
    ProfileSection ps;
    fs::path dir = "out";
    if (!config_path.empty()) {
        const RunConfig cfg = load_config(config_path);
        if (cfg.profile) ps = *cfg.profile;
        dir = cfg.output_dir;
    }
    if (!out_flag.empty()) dir = out_flag;
    const Profile1D p = solve_profile_1d(ps.half_length, ps.npoints, ps.tol, ps.max_iters);
    std::ofstream os = open_out(dir, "profile.csv");
    os << "t,g1,g2\n";
    for (std::size_t k = 0; k < p.t.size(); ++k) os << num(p.t[k]) << ',' << num(p.g1[k]) << ',' << num(p.g2[k]) << '\n';
    const auto mid = p.at(0.0);
    open_out(dir, "report.txt") << "half_length=" << num(ps.half_length) << "\nnpoints=" << ps.npoints
                                << "\ng1_at_0=" << num(mid.first) << '\n'
                                << p.report.to_text();
    open_out(dir, "timing.txt") << "wall_seconds=" << num(p.report.wall_seconds) << '\n';
    std::printf("profile: g1(0)=%.10g after %zu sweeps\n", mid.first, p.report.iterations);
    return kOk;
}

int cmd_check(const std::string& fault) {
    CheckOptions opt;
    if (fault == "quadrature-weight") opt.quadrature_weight_scale = 1.001;
    else if (!fault.empty()) throw Error(ErrorCode::InvalidArgument, "unknown fault '" + fault + "'");
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const CheckResult& c : run_checks(opt)) {
        std::printf("%s %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
        ok = ok && c.pass;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::fprintf(stderr, "check runtime %.2f s\n", secs);
    return ok ? kOk : kAnalysis;
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::ConfigParse:
        case ErrorCode::SnapshotParse:
        case ErrorCode::PlanInvalid:
        case ErrorCode::InvalidParams:
        case ErrorCode::InvalidArgument:
        case ErrorCode::NegativeBoundaryData:
        case ErrorCode::Io:
            return kInput;
        case ErrorCode::MaxIterationsExceeded:
            return kNonconvergence;
        default:
            return kAnalysis;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Segregated interface solver and analysis toolkit"};
    app.require_subcommand(1);
    std::string config, snapshot, out, fault;
    std::size_t jobs = 0;

    auto* solve = app.add_subcommand("solve", "Solve the competition system and write a snapshot");
    solve->add_option("--config", config, "INI config")->required()->check(CLI::ExistingFile);
    solve->add_option("--out", out, "Output directory (overrides [output])");

    auto* analyze = app.add_subcommand("analyze", "Run frequency / excess / interface analyses on a snapshot");
    analyze->add_option("--config", config, "INI config")->required()->check(CLI::ExistingFile);
    analyze->add_option("--snapshot", snapshot, "SEGFIELD snapshot")->required()->check(CLI::ExistingFile);
    analyze->add_option("--out", out, "Output directory");

    auto* sweep = app.add_subcommand("sweep", "Run a beta sweep, fit power laws and check claims");
    sweep->add_option("--config", config, "INI config")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out, "Output directory");
    sweep->add_option("--jobs", jobs, "Concurrent per-beta jobs")->check(CLI::PositiveNumber);

    auto* profile = app.add_subcommand("profile1d", "Solve the one-dimensional profile");
    profile->add_option("--config", config, "INI config with a [profile] section")->check(CLI::ExistingFile);
    profile->add_option("--out", out, "Output directory");

    auto* check = app.add_subcommand("check", "Run the fast invariant suite");
    check->add_option("--inject-fault", fault, "Corrupt a component on purpose")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*solve) return cmd_solve(config, out);
        if (*analyze) return cmd_analyze(config, snapshot, out);
        if (*sweep) return cmd_sweep(config, out, jobs);
        if (*profile) return cmd_profile(config, out);
        if (*check) return cmd_check(fault);
    } catch (const Error& e) {
        std::fprintf(stderr, "seglab: %s\n", e.what());
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "seglab: %s\n", e.what());
        return kAnalysis;
    }
    return kOk;
}
