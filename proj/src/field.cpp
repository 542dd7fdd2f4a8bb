#include "seglab/field.hpp"

#include <algorithm>
#include <cmath>

#include "seglab/error.hpp"

namespace seglab {

ScalarField::ScalarField(Domain d) : domain_(d), values_(d.size(), 0.0) {}

ScalarField::ScalarField(Domain d, std::vector<double> values) : domain_(d), values_(std::move(values)) {
    if (values_.size() != domain_.size())
        throw Error(ErrorCode::InvalidArgument, "field length does not match nx*ny");
}

MultiField::MultiField(Domain d, std::size_t nspecies, double beta) : domain_(d), beta_(beta) {
    if (nspecies < 2) throw Error(ErrorCode::InvalidArgument, "need at least two species");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::InvalidArgument, "beta must be finite and >= 0");
    species_.assign(nspecies, ScalarField(d));
}

MultiField::MultiField(std::vector<ScalarField> species, double beta)
    : domain_(species.empty() ? Domain(0, 0, 1, 3, 3) : species.front().domain()),
      species_(std::move(species)),
      beta_(beta) {
    if (species_.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two species");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::InvalidArgument, "beta must be finite and >= 0");
    for (const auto& s : species_)
        if (!(s.domain() == domain_)) throw Error(ErrorCode::InvalidArgument, "species live on different domains");
}

ScalarField MultiField::difference() const {
    ScalarField w(domain_);
    auto a = species_[0].values();
    auto b = species_[1].values();
    auto out = w.values();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
    return w;
}

double MultiField::sup_sum() const {
    double best = 0.0;
    for (std::size_t k = 0; k < domain_.size(); ++k) {
        double s = 0.0;
        for (const auto& f : species_) s += f.values()[k];
        best = std::max(best, s);
    }
    return best;
}

void MultiField::validate() const {
    for (const auto& f : species_)
        for (double v : f.values())
            if (!std::isfinite(v) || v < 0.0)
                throw Error(ErrorCode::InvalidArgument, "species values must be finite and nonnegative");
}

}  // namespace seglab
