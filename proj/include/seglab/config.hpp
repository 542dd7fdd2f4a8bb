#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seglab/boundary.hpp"
#include "seglab/profile1d.hpp"
#include "seglab/solver.hpp"
#include "seglab/sweep.hpp"

namespace seglab {

// INI document with sections [domain] [solve] [data] [analysis] [sweep] [output] [profile].
// Lists are comma separated; vectors are "x,y". Unknown sections and keys are rejected.

struct DataSection {
    BoundaryKind kind = BoundaryKind::FlatLinear;
    DataParams params;
    std::filesystem::path snapshot;  // custom-snapshot source
};

enum class AnalysisTask { Frequency, Excess, Interface };

struct AnalysisSection {
    std::vector<AnalysisTask> tasks;
    AnalysisSettings settings;
    std::optional<Vec2> direction;  // graph direction for interface extraction
};

struct ProfileSection {
    double half_length = 10.0;
    std::size_t npoints = 2049;
    double tol = 1e-10;
    std::size_t max_iters = 5'000'000;
};

struct RunConfig {
    std::optional<Domain> domain;
    std::optional<SolveConfig> solve;
    std::optional<DataSection> data;
    std::optional<AnalysisSection> analysis;
    std::optional<SweepPlan> sweep;  // kind, params and solve settings are filled from [data] and [solve]
    std::optional<ProfileSection> profile;
    std::filesystem::path output_dir = "out";

    /// Resolves [data] into traces; the custom-snapshot kind reads its snapshot file.
    BoundaryData boundary_data() const;
};

/// Throws ConfigParse on syntax errors, unknown keys or bad values.
RunConfig parse_config(std::istream& is);
RunConfig load_config(const std::filesystem::path& path);

std::string_view to_string(AnalysisTask t);

}  // namespace seglab
