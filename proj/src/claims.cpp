#include "seglab/claims.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

namespace seglab {
namespace {

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[200];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::vector<SweepRecord> select(const std::vector<SweepRecord>& records, Measurement m) {
    std::vector<SweepRecord> out;
    for (const SweepRecord& r : records)
        if (r.measurement == to_string(m)) out.push_back(r);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.beta < b.beta; });
    return out;
}

const PowerLawFit* find_fit(const std::vector<NamedFit>& fits, std::string_view name) {
    for (const NamedFit& f : fits)
        if (f.name == name) return &f.fit;
    return nullptr;
}

bool all_converged(const std::vector<SweepRecord>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const SweepRecord& r) { return r.converged; });
}

ClaimResult unconverged(std::string name) { return {std::move(name), false, "solver did not converge for every beta"}; }

std::optional<ClaimResult> interface_scaling(const std::vector<SweepRecord>& records, const std::vector<NamedFit>& fits) {
    using namespace thresholds;
    const auto rs = select(records, Measurement::InterfaceMinSum);
    if (rs.empty()) return std::nullopt;
    const std::string name = "interface_scaling";
    if (!all_converged(rs)) return unconverged(name);
    const PowerLawFit* fit = find_fit(fits, to_string(Measurement::InterfaceMinSum));
    if (!fit) return ClaimResult{name, false, "no power-law fit (need >= 3 positive values)"};
    double lo = INFINITY, hi = 0.0;
    for (const SweepRecord& r : rs) {
        lo = std::min(lo, r.aux1);
        hi = std::max(hi, r.aux1);
    }
    const double spread = hi / lo;
    const bool pass = fit->exponent >= kInterfaceExponentLo && fit->exponent <= kInterfaceExponentHi &&
                      fit->r2 >= kInterfaceR2 && spread <= kInterfaceSpread;
    return ClaimResult{name, pass,
                       fmt("exponent=%.4f in [-0.30,-0.20], r2=%.4f >= 0.98, spread of value*beta^{1/4}=%.3f <= 2",
                           fit->exponent, fit->r2, spread)};
}

std::optional<ClaimResult> gradient_nondegeneracy(const std::vector<SweepRecord>& records) {
    const auto rs = select(records, Measurement::MinGradient);
    if (rs.empty()) return std::nullopt;
    const std::string name = "gradient_nondegeneracy";
    if (!all_converged(rs)) return unconverged(name);
    double lo = INFINITY;
    for (const SweepRecord& r : rs) lo = std::min(lo, r.value);
    return ClaimResult{name, lo >= thresholds::kGradientFloor, fmt("min |grad w|=%.4f >= 0.5 over all beta", lo)};
}

std::optional<ClaimResult> mixed_terms(const std::vector<SweepRecord>& records, const std::vector<NamedFit>& fits) {
    const auto rs = select(records, Measurement::MixedTerms);
    if (rs.empty()) return std::nullopt;
    const std::string name = "mixed_terms";
    if (!all_converged(rs)) return unconverged(name);
    const PowerLawFit* a = find_fit(fits, to_string(Measurement::MixedTerms));
    const PowerLawFit* b = find_fit(fits, "mixed_terms_gradient");
    if (!a || !b) return ClaimResult{name, false, "no power-law fit (need >= 3 positive values)"};
    const bool pass = a->exponent <= thresholds::kMixedExponentCeiling && b->exponent <= thresholds::kMixedExponentCeiling;
    return ClaimResult{name, pass,
                       fmt("reaction exponent=%.4f, gradient exponent=%.4f, both <= %.3f", a->exponent, b->exponent,
                           thresholds::kMixedExponentCeiling)};
}

std::optional<ClaimResult> frequency_monotone(const std::vector<SweepRecord>& records) {
    const auto rs = select(records, Measurement::Frequency);
    if (rs.empty()) return std::nullopt;
    const std::string name = "frequency_monotone";
    if (!all_converged(rs)) return unconverged(name);
    double drop = 0.0, top = 0.0;
    for (const SweepRecord& r : rs) {
        drop = std::max(drop, r.aux1);
        top = std::max(top, r.value);
    }
    const bool pass = drop <= thresholds::kFrequencySlack && top <= thresholds::kFrequencyCeiling;
    return ClaimResult{name, pass, fmt("worst relative drop=%.3g <= 0.02, max N(rmax)=%.4f <= 1.1", drop, top)};
}

std::optional<ClaimResult> excess_decay(const std::vector<SweepRecord>& records) {
    using namespace thresholds;
    const auto rs = select(records, Measurement::Excess);
    if (rs.empty()) return std::nullopt;
    const std::string name = "excess_decay";
    if (!all_converged(rs)) return unconverged(name);
    double ratio = 0.0, drift = 0.0, rlo = INFINITY, rhi = -INFINITY;
    bool finite = true;
    for (const SweepRecord& r : rs) {
        ratio = std::max(ratio, r.value);
        drift = std::max(drift, r.aux2);
        finite = finite && std::isfinite(r.aux1);
        rlo = std::min(rlo, r.aux1);
        rhi = std::max(rhi, r.aux1);
    }
    const bool pass = ratio < 1.0 && finite && rlo >= kRbetaLo && rhi <= kRbetaHi && drift <= kDriftMultiple;
    std::string detail = ratio > 0.0 ? fmt("max E_k/E_{k-1} above 10 beta^{-1/4}=%.4f < 1", ratio)
                                     : std::string("no scale pair above 10 beta^{-1/4} (decay holds vacuously)");
    detail += fmt(", drift/sqrt(E0)=%.3f <= 10", drift);
    detail += finite ? fmt(", r_beta/beta^{-1/4} in [%.3f, %.3f] within [1, 50]", rlo, rhi)
                     : std::string(", no r_beta transition found");
    return ClaimResult{name, pass, detail};
}

std::optional<ClaimResult> lipschitz_uniform(const std::vector<SweepRecord>& records) {
    using namespace thresholds;
    const auto rs = select(records, Measurement::Lipschitz);
    if (rs.empty()) return std::nullopt;
    const std::string name = "lipschitz_uniform";
    if (!all_converged(rs)) return unconverged(name);
    bool pass = true;
    double rel = 0.0, haus_ratio = 0.0;
    for (std::size_t k = 0; k < rs.size(); ++k) {
        const SweepRecord& r = rs[k];
        if (!std::isfinite(r.aux1) || !std::isfinite(r.aux2)) return ClaimResult{name, false, "no closed-form limit curve"};
        rel = std::max(rel, std::abs(r.value - r.aux1) / r.aux1);
        haus_ratio = std::max(haus_ratio, r.aux2 / std::pow(r.beta, -0.25));
        if (k > 0 && !(r.aux2 < rs[k - 1].aux2)) pass = false;
    }
    const bool decreasing = pass;
    pass = pass && rel <= kLipschitzRelTol && haus_ratio <= kHausdorffMultiple;
    return ClaimResult{name, pass,
                       fmt("max relative Lipschitz gap=%.4f <= 0.2, max Hausdorff/beta^{-1/4}=%.3f <= 5", rel,
                           haus_ratio) +
                           (decreasing ? ", Hausdorff strictly decreasing" : ", Hausdorff NOT strictly decreasing")};
}

std::optional<ClaimResult> nondominant_decay(const std::vector<SweepRecord>& records) {
    const auto rs = select(records, Measurement::Nondominant);
    if (rs.empty()) return std::nullopt;
    const std::string name = "nondominant_decay";
    if (!all_converged(rs)) return unconverged(name);
    if (rs.size() < 3) return ClaimResult{name, false, "need >= 3 beta values"};
    bool decreasing = true, convex = true;
    for (std::size_t k = 1; k < rs.size(); ++k) {
        decreasing = decreasing && rs[k].value < rs[k - 1].value && rs[k].value > 0.0;
        if (k >= 2) convex = convex && rs[k].value / rs[k - 1].value < rs[k - 1].value / rs[k - 2].value;
    }
    const double first = rs.front().value, last = rs.back().value;
    return ClaimResult{name, decreasing && convex,
                       fmt("s from %.3g to %.3g", first, last) + (decreasing ? ", strictly decreasing" : ", NOT decreasing") +
                           (convex ? ", successive ratios shrinking" : ", successive ratios NOT shrinking")};
}

}  // namespace

std::vector<ClaimResult> evaluate_claims(const std::vector<SweepRecord>& records, const std::vector<NamedFit>& fits) {
    std::vector<ClaimResult> out;
    for (auto c : {frequency_monotone(records), interface_scaling(records, fits), gradient_nondegeneracy(records),
                   mixed_terms(records, fits), excess_decay(records), lipschitz_uniform(records),
                   nondominant_decay(records)})
        if (c) out.push_back(std::move(*c));
    return out;
}

}  // namespace seglab
