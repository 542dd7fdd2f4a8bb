#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "seglab/boundary.hpp"
#include "seglab/powerlaw.hpp"
#include "seglab/solver.hpp"

namespace seglab {

enum class Measurement { InterfaceMinSum, MinGradient, MixedTerms, Nondominant, Lipschitz, Frequency, Excess };

std::string_view to_string(Measurement m);
Measurement parse_measurement(std::string_view name);

/// Radii and scales used by the per-beta measurements; balls are centered at `center`.
struct AnalysisSettings {
    Vec2 center{0.0, 0.0};
    double interface_radius = 0.5;   // interface_min_sum, min_gradient, nondominant, frequency/excess centering
    double mixed_radius = 0.75;
    double lipschitz_radius = 0.75;
    double freq_rmin = 0.1;
    double freq_rmax = 0.9;
    std::size_t freq_samples = 12;
    double freq_slack = 2e-2;
    double theta = 0.3;
    std::size_t kmax = 0;            // 0: deepest scale above 2h
    double excess_base_radius = 1.0;
};

struct SweepPlan {
    std::vector<double> betas;
    std::vector<std::size_t> points;  // per beta; empty selects the smallest 2^m + 1 >= 129 obeying the rule
    double half_width = 1.0;          // grids are [-half_width, half_width]^2
    BoundaryKind kind = BoundaryKind::FlatLinear;
    DataParams params;
    std::vector<Measurement> measurements;
    AnalysisSettings analysis;
    SolveConfig solve;                // beta is overwritten per job
    std::filesystem::path snapshot_dir;  // when set, solved fields are cached/reloaded here
    std::size_t jobs = 1;

    /// Throws PlanInvalid unless every beta has h <= beta^{-1/4} / 8 and the plan is complete.
    void validate() const;
    std::size_t points_for(std::size_t k) const;
};

struct SweepRecord {
    double beta = 0.0;
    std::string measurement;
    double value = 0.0;
    double aux1 = 0.0;
    double aux2 = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
    double residual = 0.0;
    double wall_seconds = 0.0;
};

struct NamedFit {
    std::string name;
    PowerLawFit fit;
};

std::vector<SweepRecord> run_sweep(const SweepPlan& plan);

/// Fits every measurement column that has >= 3 positive values across beta.
std::vector<NamedFit> fit_records(const std::vector<SweepRecord>& records);

/// Writes sweep.csv, fits.csv, summary.txt and timing.csv into `dir`.
void emit_report(const std::vector<SweepRecord>& records, const std::vector<NamedFit>& fits,
                 const std::filesystem::path& dir);

/// Measures one solved field.
SweepRecord measure(const MultiField& field, const BoundaryData& bd, Measurement m, const AnalysisSettings& settings);

}  // namespace seglab
