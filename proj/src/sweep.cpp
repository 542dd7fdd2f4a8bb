#include "seglab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <sstream>

#include "seglab/claims.hpp"
#include "seglab/error.hpp"
#include "seglab/excess.hpp"
#include "seglab/frequency.hpp"
#include "seglab/interface.hpp"
#include "seglab/measures.hpp"
#include "seglab/snapshot.hpp"

namespace seglab {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double layer_width(double beta) { return std::pow(beta, -0.25); }

std::size_t auto_points(double beta, double half_width) {
    for (std::size_t n = 129;; n = 2 * n - 1)
        if (2.0 * half_width / static_cast<double>(n - 1) <= layer_width(beta) / 8.0) return n;
}

Vec2 interface_point_nearest(const ScalarField& w, const AnalysisSettings& s) {
    const InterfaceCurve curve = extract_interface(w, Region::disk(s.center, s.interface_radius));
    Vec2 best = curve.vertices.front();
    for (const Vec2& v : curve.vertices)
        if (norm(v - s.center) < norm(best - s.center)) best = v;
    return best;
}

struct Solved {
    MultiField field;
    SolveReport report;
};

std::filesystem::path cache_path(const SweepPlan& plan, double beta, std::size_t n, const char* ext) {
    char name[160];
    std::snprintf(name, sizeof name, "%s_beta%.6g_n%zu_a%.6g%s", std::string(to_string(plan.kind)).c_str(), beta, n,
                  plan.half_width, ext);
    return plan.snapshot_dir / name;
}

std::string cache_key(const BoundaryData& bd, const SolveConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    os << "data=" << bd.description << "\ntol=" << cfg.tol << "\nmax_iters=" << cfg.max_iters << "\nomega=" << cfg.omega
       << '\n';
    return os.str();
}

std::optional<Solved> load_cached(const SweepPlan& plan, double beta, std::size_t n, const std::string& key) {
    const auto snap = cache_path(plan, beta, n, ".seg");
    const auto side = cache_path(plan, beta, n, ".report");
    if (!std::filesystem::exists(snap) || !std::filesystem::exists(side)) return std::nullopt;
    std::ifstream is(side);
    std::stringstream buf;
    buf << is.rdbuf();
    const std::string text = buf.str();
    if (text.rfind(key, 0) != 0) return std::nullopt;
    SolveReport rep;
    std::istringstream lines(text.substr(key.size()));
    std::string line;
    while (std::getline(lines, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string k = line.substr(0, eq), v = line.substr(eq + 1);
        if (k == "converged") rep.converged = v == "1";
        else if (k == "iterations") rep.iterations = std::stoull(v);
        else if (k == "residual") rep.residual = std::stod(v);
    }
    return Solved{read_snapshot(snap), rep};
}

Solved solve_job(const SweepPlan& plan, std::size_t k, const BoundaryData& bd) {
    const double beta = plan.betas[k];
    const std::size_t n = plan.points_for(k);
    SolveConfig cfg = plan.solve;
    cfg.beta = beta;
    const std::string key = cache_key(bd, cfg);
    if (!plan.snapshot_dir.empty())
        if (auto hit = load_cached(plan, beta, n, key)) return std::move(*hit);

    SolveResult res = solve_system(Domain::centered_square(plan.half_width, n), bd, cfg);
    if (!plan.snapshot_dir.empty()) {
        std::filesystem::create_directories(plan.snapshot_dir);
        write_snapshot(cache_path(plan, beta, n, ".seg"), res.field);
        std::ofstream os(cache_path(plan, beta, n, ".report"));
        os << key << res.report.to_text();
        if (!os) throw Error(ErrorCode::Io, "cannot write sweep cache report");
    }
    return Solved{std::move(res.field), std::move(res.report)};
}

std::vector<SweepRecord> run_job(const SweepPlan& plan, std::size_t k, const BoundaryData& bd) {
    Solved s = solve_job(plan, k, bd);
    std::vector<SweepRecord> out;
    for (Measurement m : plan.measurements) {
        SweepRecord r;
        try {
            r = measure(s.field, bd, m, plan.analysis);
        } catch (const Error&) {
            // An unconverged field is still reported; its measurements may not exist.
            if (s.report.converged) throw;
            r.beta = plan.betas[k];
            r.measurement = std::string(to_string(m));
            r.value = r.aux1 = r.aux2 = kNaN;
        }
        r.converged = s.report.converged;
        r.iterations = s.report.iterations;
        r.residual = s.report.residual;
        r.wall_seconds = s.report.wall_seconds;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::string_view to_string(Measurement m) {
    switch (m) {
        case Measurement::InterfaceMinSum: return "interface_min_sum";
        case Measurement::MinGradient: return "min_gradient";
        case Measurement::MixedTerms: return "mixed_terms";
        case Measurement::Nondominant: return "nondominant";
        case Measurement::Lipschitz: return "lipschitz";
        case Measurement::Frequency: return "frequency";
        case Measurement::Excess: return "excess";
    }
    return "unknown";
}

Measurement parse_measurement(std::string_view name) {
    for (auto m : {Measurement::InterfaceMinSum, Measurement::MinGradient, Measurement::MixedTerms,
                   Measurement::Nondominant, Measurement::Lipschitz, Measurement::Frequency, Measurement::Excess})
        if (to_string(m) == name) return m;
    throw Error(ErrorCode::PlanInvalid, "unknown measurement '" + std::string(name) + "'");
}

std::size_t SweepPlan::points_for(std::size_t k) const {
    return points.empty() ? auto_points(betas.at(k), half_width) : points.at(k);
}

void SweepPlan::validate() const {
    if (betas.empty()) throw Error(ErrorCode::PlanInvalid, "no beta values");
    if (measurements.empty()) throw Error(ErrorCode::PlanInvalid, "no measurements requested");
    if (!points.empty() && points.size() != betas.size())
        throw Error(ErrorCode::PlanInvalid, "points list must match the beta list");
    if (!(half_width > 0.0)) throw Error(ErrorCode::PlanInvalid, "half_width must be positive");
    if (kind == BoundaryKind::CustomSnapshot) throw Error(ErrorCode::PlanInvalid, "sweeps need a closed-form data kind");
    for (std::size_t k = 0; k < betas.size(); ++k) {
        const double beta = betas[k];
        if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::PlanInvalid, "betas must be positive");
        const std::size_t n = points_for(k);
        if (n < 3) throw Error(ErrorCode::PlanInvalid, "need at least 3 points per axis");
        const double h = 2.0 * half_width / static_cast<double>(n - 1);
        if (h > layer_width(beta) / 8.0)
            throw Error(ErrorCode::PlanInvalid, "resolution rule h <= beta^{-1/4}/8 fails at beta=" + num(beta) +
                                                    " (h=" + num(h) + ")");
    }
}

SweepRecord measure(const MultiField& field, const BoundaryData& bd, Measurement m, const AnalysisSettings& s) {
    SweepRecord r;
    r.beta = field.beta();
    r.measurement = std::string(to_string(m));
    r.aux1 = r.aux2 = kNaN;
    const ScalarField w = field.difference();
    switch (m) {
        case Measurement::InterfaceMinSum: {
            const InterfaceCurve curve = extract_interface(w, Region::disk(s.center, s.interface_radius));
            const PointValue pv = interface_min_sum(field, curve);
            r.value = pv.value;
            r.aux1 = pv.value * std::pow(field.beta(), 0.25);
            r.aux2 = norm(pv.at - s.center);
            break;
        }
        case Measurement::MinGradient:
            r.value = min_gradient_norm(w, Region::disk(s.center, s.interface_radius));
            break;
        case Measurement::MixedTerms: {
            const MixedTerms mt = mixed_term_integrals(field, Region::disk(s.center, s.mixed_radius));
            r.value = mt.reaction;
            r.aux1 = mt.gradient;
            break;
        }
        case Measurement::Nondominant: {
            const PointValue pv = nondominant_sup(field, Region::disk(s.center, s.interface_radius));
            r.value = pv.value;
            r.aux1 = pv.at.x;
            r.aux2 = pv.at.y;
            break;
        }
        case Measurement::Lipschitz: {
            const InterfaceCurve curve = extract_interface(w, Region::disk(s.center, s.lipschitz_radius));
            if (!curve.is_graph) throw Error(ErrorCode::NonGraphCurve, "extracted interface is not a graph");
            r.value = curve.lipschitz_constant;
            if (bd.limit_w) {
                std::vector<double> xp, guess;
                for (const GraphSample& g : curve.graph_samples) {
                    xp.push_back(g.xp);
                    guess.push_back(g.h);
                }
                const auto limit = zero_set_graph(bd.limit_w, curve.graph_direction, xp, guess);
                r.aux1 = InterfaceCurve::from_polyline(limit, curve.grid_h, curve.graph_direction).lipschitz_constant;
                r.aux2 = hausdorff_distance(curve.vertices, limit);
            }
            break;
        }
        case Measurement::Frequency: {
            const Vec2 c = interface_point_nearest(w, s);
            const FrequencyProfile prof =
                frequency_profile(field, c, s.freq_rmin, s.freq_rmax, s.freq_samples, s.freq_slack);
            r.value = prof.values.back();
            r.aux1 = prof.worst_drop();
            r.aux2 = prof.values.front();
            break;
        }
        case Measurement::Excess: {
            const Vec2 c = interface_point_nearest(w, s);
            const double h = field.domain().h();
            std::size_t kmax = s.kmax;
            if (kmax == 0)
                while (s.excess_base_radius * std::pow(s.theta, static_cast<double>(kmax + 1)) >= 2.0 * h) ++kmax;
            const ExcessSequence seq = dyadic_excess_sequence(w, c, s.theta, kmax, field.beta(), s.excess_base_radius);
            // Largest E_k / E_{k-1} among scales above the layer (0 when there are none).
            double ratio = 0.0;
            const double layer = thresholds::kExcessLayerMultiple * layer_width(field.beta());
            for (std::size_t k = 1; k < seq.E.size() && seq.scales[k] >= layer; ++k)
                ratio = std::max(ratio, seq.E[k] / seq.E[k - 1]);
            r.value = ratio;
            r.aux1 = seq.r_beta_ratio();
            r.aux2 = seq.max_drift() / std::sqrt(seq.E.front());
            break;
        }
    }
    return r;
}

std::vector<SweepRecord> run_sweep(const SweepPlan& plan) {
    plan.validate();
    const BoundaryData bd = harmonic_limit_data(plan.kind, plan.params);
    std::vector<SweepRecord> records;
    const std::size_t jobs = std::max<std::size_t>(1, plan.jobs);
    for (std::size_t first = 0; first < plan.betas.size(); first += jobs) {
        std::vector<std::future<std::vector<SweepRecord>>> batch;
        for (std::size_t k = first; k < std::min(plan.betas.size(), first + jobs); ++k)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                       [&plan, &bd, k] { return run_job(plan, k, bd); }));
        for (auto& f : batch) {
            auto part = f.get();
            records.insert(records.end(), part.begin(), part.end());
        }
    }
    std::stable_sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return a.beta != b.beta ? a.beta < b.beta : a.measurement < b.measurement;
    });
    return records;
}

std::vector<NamedFit> fit_records(const std::vector<SweepRecord>& records) {
    std::map<std::string, std::vector<std::pair<double, double>>> columns;
    for (const SweepRecord& r : records) {
        columns[r.measurement].emplace_back(r.beta, r.value);
        if (r.measurement == to_string(Measurement::MixedTerms)) columns["mixed_terms_gradient"].emplace_back(r.beta, r.aux1);
    }
    std::vector<NamedFit> fits;
    for (auto& [name, pts] : columns) {
        std::sort(pts.begin(), pts.end());
        const bool positive = std::all_of(pts.begin(), pts.end(), [](const auto& p) { return p.second > 0.0; });
        if (pts.size() < 3 || !positive) continue;
        fits.push_back({name, fit_power_law(pts)});
    }
    return fits;
}

void emit_report(const std::vector<SweepRecord>& records, const std::vector<NamedFit>& fits,
                 const std::filesystem::path& dir) {
    if (records.empty()) throw Error(ErrorCode::InvalidArgument, "no records to report");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    auto open = [&](const char* name) {
        std::ofstream os(dir / name);
        if (!os) throw Error(ErrorCode::Io, "cannot write " + (dir / name).string());
        return os;
    };

    std::ofstream sweep = open("sweep.csv");
    sweep << "beta,measurement,value,aux1,aux2,converged,iters,residual\n";
    for (const SweepRecord& r : records)
        sweep << num(r.beta) << ',' << r.measurement << ',' << num(r.value) << ',' << num(r.aux1) << ',' << num(r.aux2)
              << ',' << (r.converged ? 1 : 0) << ',' << r.iterations << ',' << num(r.residual) << '\n';

    std::ofstream fitcsv = open("fits.csv");
    fitcsv << "measurement,exponent,intercept,r2,npoints\n";
    for (const NamedFit& f : fits)
        fitcsv << f.name << ',' << num(f.fit.exponent) << ',' << num(f.fit.intercept) << ',' << num(f.fit.r2) << ','
               << f.fit.npoints << '\n';

    std::ofstream timing = open("timing.csv");
    timing << "beta,measurement,wall_seconds\n";
    for (const SweepRecord& r : records) timing << num(r.beta) << ',' << r.measurement << ',' << num(r.wall_seconds) << '\n';

    std::ofstream summary = open("summary.txt");
    summary << "records: " << records.size() << '\n';
    for (const NamedFit& f : fits)
        summary << "fit " << f.name << ": exponent=" << num(f.fit.exponent) << " r2=" << num(f.fit.r2)
                << " npoints=" << f.fit.npoints << '\n';
    for (const ClaimResult& c : evaluate_claims(records, fits))
        summary << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    for (auto* os : {&sweep, &fitcsv, &timing, &summary})
        if (!*os) throw Error(ErrorCode::Io, "write failed in " + dir.string());
}

}  // namespace seglab
