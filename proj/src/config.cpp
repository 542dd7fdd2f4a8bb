#include "seglab/config.hpp"

#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <map>
#include <set>

#include "seglab/error.hpp"
#include "seglab/snapshot.hpp"

namespace seglab {
namespace {

namespace pt = boost::property_tree;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ConfigParse, where + ": " + what);
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        boost::algorithm::trim(item);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

double to_double(const std::string& where, const std::string& s) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v)) fail(where, "expected a number, got '" + s + "'");
    return v;
}

std::size_t to_size(const std::string& where, const std::string& s) {
    // Accept integral values written as doubles (2e6).
    const double v = to_double(where, s);
    if (v < 0.0 || v != std::floor(v) || v > 1e15) fail(where, "expected a nonnegative integer, got '" + s + "'");
    return static_cast<std::size_t>(v);
}

// Typed access to one section with tracking of unknown keys.
class Section {
public:
    Section(std::string name, const pt::ptree& tree, std::set<std::string> allowed) : name_(std::move(name)) {
        for (const auto& [key, node] : tree) {
            if (!node.empty()) fail(name_, "nested keys are not supported");
            if (!allowed.count(key)) fail(name_ + "." + key, "unknown key");
            values_[key] = boost::algorithm::trim_copy(node.data());
        }
    }

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::string where(const std::string& key) const { return name_ + "." + key; }
    const std::string& str(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) fail(where(key), "missing required key");
        return it->second;
    }
    double num(const std::string& key) const { return to_double(where(key), str(key)); }
    std::size_t size(const std::string& key) const { return to_size(where(key), str(key)); }
    void get(const std::string& key, double& out) const { if (has(key)) out = num(key); }
    void get(const std::string& key, std::size_t& out) const { if (has(key)) out = size(key); }
    std::vector<double> nums(const std::string& key) const {
        std::vector<double> out;
        for (const auto& item : split(str(key))) out.push_back(to_double(where(key), item));
        return out;
    }
    Vec2 vec(const std::string& key) const {
        const auto v = nums(key);
        if (v.size() != 2) fail(where(key), "expected two components");
        return {v[0], v[1]};
    }

private:
    std::string name_;
    std::map<std::string, std::string> values_;
};

Domain parse_domain(const Section& s) {
    try {
        if (s.has("half_width") || s.has("n")) {
            if (s.has("x0") || s.has("y0") || s.has("h") || s.has("nx") || s.has("ny"))
                fail("domain", "use either half_width/n or x0/y0/h/nx/ny");
            return Domain::centered_square(s.num("half_width"), s.size("n"));
        }
        return Domain(s.num("x0"), s.num("y0"), s.num("h"), s.size("nx"), s.size("ny"));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigParse) throw;
        fail("domain", e.what());
    }
}

SolveConfig parse_solve(const Section& s) {
    SolveConfig c;
    s.get("beta", c.beta);
    s.get("tol", c.tol);
    s.get("max_iters", c.max_iters);
    s.get("report_every", c.report_every);
    s.get("omega", c.omega);
    if (c.beta < 0.0) fail(s.where("beta"), "must be nonnegative");
    if (!(c.tol > 0.0)) fail(s.where("tol"), "must be positive");
    if (c.max_iters == 0) fail(s.where("max_iters"), "must be positive");
    if (c.omega != 0.0 && !(c.omega > 0.0 && c.omega < 2.0)) fail(s.where("omega"), "must lie in (0, 2), or 0 for auto");
    return c;
}

DataSection parse_data(const Section& s, const std::filesystem::path& base) {
    DataSection d;
    try {
        d.kind = parse_boundary_kind(s.str("kind"));
    } catch (const Error& e) {
        fail(s.where("kind"), e.what());
    }
    if (s.has("e")) d.params.e = s.vec("e");
    if (s.has("poly")) {
        const auto c = s.nums("poly");
        if (c.size() != 6) fail(s.where("poly"), "expected c0,cx,cy,cxx,cxy,cyy");
        d.params.poly = {c[0], c[1], c[2], c[3], c[4], c[5]};
    }
    s.get("amplitude", d.params.amplitude);
    s.get("arc_x", d.params.arc_x);
    s.get("ramp", d.params.ramp);
    if (s.has("snapshot")) {
        d.snapshot = s.str("snapshot");
        if (d.snapshot.is_relative()) d.snapshot = base / d.snapshot;
    }
    if (d.kind == BoundaryKind::CustomSnapshot && d.snapshot.empty())
        fail(s.where("snapshot"), "custom-snapshot data needs a snapshot path");
    return d;
}

AnalysisTask parse_task(const std::string& where, const std::string& name) {
    for (auto t : {AnalysisTask::Frequency, AnalysisTask::Excess, AnalysisTask::Interface})
        if (to_string(t) == name) return t;
    fail(where, "unknown task '" + name + "'");
}

AnalysisSection parse_analysis(const Section& s) {
    AnalysisSection a;
    if (s.has("tasks"))
        for (const auto& t : split(s.str("tasks"))) a.tasks.push_back(parse_task(s.where("tasks"), t));
    AnalysisSettings& st = a.settings;
    if (s.has("center")) st.center = s.vec("center");
    if (s.has("direction")) a.direction = s.vec("direction");
    s.get("theta", st.theta);
    s.get("kmax", st.kmax);
    s.get("base_radius", st.excess_base_radius);
    s.get("rmin", st.freq_rmin);
    s.get("rmax", st.freq_rmax);
    s.get("samples", st.freq_samples);
    s.get("slack", st.freq_slack);
    s.get("interface_radius", st.interface_radius);
    s.get("mixed_radius", st.mixed_radius);
    s.get("lipschitz_radius", st.lipschitz_radius);
    if (!(st.theta > 0.0 && st.theta < 0.5)) fail(s.where("theta"), "must lie in (0, 1/2)");
    if (!(st.freq_rmin > 0.0 && st.freq_rmin < st.freq_rmax)) fail(s.where("rmin"), "need 0 < rmin < rmax");
    if (st.freq_samples < 2) fail(s.where("samples"), "need at least 2 radii");
    for (const char* k : {"interface_radius", "mixed_radius", "lipschitz_radius", "base_radius"})
        if (s.has(k) && !(s.num(k) > 0.0)) fail(s.where(k), "must be positive");
    return a;
}

SweepPlan parse_sweep(const Section& s, const std::filesystem::path& base) {
    SweepPlan p;
    p.betas = s.nums("betas");
    if (s.has("points"))
        for (const auto& item : split(s.str("points"))) p.points.push_back(to_size(s.where("points"), item));
    s.get("half_width", p.half_width);
    for (const auto& m : split(s.str("measurements"))) {
        try {
            p.measurements.push_back(parse_measurement(m));
        } catch (const Error& e) {
            fail(s.where("measurements"), e.what());
        }
    }
    if (s.has("snapshot_dir")) {
        p.snapshot_dir = s.str("snapshot_dir");
        if (p.snapshot_dir.is_relative()) p.snapshot_dir = base / p.snapshot_dir;
    }
    s.get("jobs", p.jobs);
    return p;
}

ProfileSection parse_profile(const Section& s) {
    ProfileSection p;
    s.get("half_length", p.half_length);
    s.get("npoints", p.npoints);
    s.get("tol", p.tol);
    s.get("max_iters", p.max_iters);
    return p;
}

RunConfig parse_tree(const pt::ptree& tree, const std::filesystem::path& base) {
    static const std::map<std::string, std::set<std::string>> kAllowed = {
        {"domain", {"x0", "y0", "h", "nx", "ny", "half_width", "n"}},
        {"solve", {"beta", "tol", "max_iters", "report_every", "omega"}},
        {"data", {"kind", "e", "poly", "amplitude", "arc_x", "ramp", "snapshot"}},
        {"analysis",
         {"tasks", "center", "direction", "theta", "kmax", "base_radius", "rmin", "rmax", "samples", "slack",
          "interface_radius", "mixed_radius", "lipschitz_radius"}},
        {"sweep", {"betas", "points", "half_width", "measurements", "snapshot_dir", "jobs"}},
        {"output", {"directory"}},
        {"profile", {"half_length", "npoints", "tol", "max_iters"}},
    };
    std::map<std::string, Section> sections;
    for (const auto& [name, node] : tree) {
        const auto it = kAllowed.find(name);
        if (it == kAllowed.end()) fail(name, node.empty() ? "keys must live inside a section" : "unknown section");
        sections.emplace(name, Section(name, node, it->second));
    }

    RunConfig c;
    if (auto it = sections.find("domain"); it != sections.end()) c.domain = parse_domain(it->second);
    if (auto it = sections.find("solve"); it != sections.end()) c.solve = parse_solve(it->second);
    if (auto it = sections.find("data"); it != sections.end()) c.data = parse_data(it->second, base);
    if (auto it = sections.find("analysis"); it != sections.end()) c.analysis = parse_analysis(it->second);
    if (auto it = sections.find("profile"); it != sections.end()) c.profile = parse_profile(it->second);
    if (auto it = sections.find("output"); it != sections.end()) {
        c.output_dir = it->second.str("directory");
        if (c.output_dir.is_relative()) c.output_dir = base / c.output_dir;
    }
    if (auto it = sections.find("sweep"); it != sections.end()) {
        SweepPlan p = parse_sweep(it->second, base);
        if (c.data) {
            p.kind = c.data->kind;
            p.params = c.data->params;
        }
        if (c.solve) p.solve = *c.solve;
        if (c.analysis) p.analysis = c.analysis->settings;
        c.sweep = std::move(p);
    }
    return c;
}

}  // namespace

std::string_view to_string(AnalysisTask t) {
    switch (t) {
        case AnalysisTask::Frequency: return "frequency";
        case AnalysisTask::Excess: return "excess";
        case AnalysisTask::Interface: return "interface";
    }
    return "unknown";
}

BoundaryData RunConfig::boundary_data() const {
    if (!data) throw Error(ErrorCode::ConfigParse, "data: section missing");
    if (data->kind == BoundaryKind::CustomSnapshot) return snapshot_data(read_snapshot(data->snapshot));
    return harmonic_limit_data(data->kind, data->params);
}

RunConfig parse_config(std::istream& is) {
    pt::ptree tree;
    try {
        pt::read_ini(is, tree);
    } catch (const pt::ini_parser_error& e) {
        throw Error(ErrorCode::ConfigParse, e.message() + " (line " + std::to_string(e.line()) + ")");
    }
    return parse_tree(tree, std::filesystem::current_path());
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorCode::ConfigParse, "cannot open " + path.string());
    pt::ptree tree;
    try {
        pt::read_ini(is, tree);
    } catch (const pt::ini_parser_error& e) {
        throw Error(ErrorCode::ConfigParse, path.string() + ":" + std::to_string(e.line()) + ": " + e.message());
    }
    // Relative paths inside the file resolve against its directory.
    return parse_tree(tree, std::filesystem::absolute(path).parent_path());
}

}  // namespace seglab
