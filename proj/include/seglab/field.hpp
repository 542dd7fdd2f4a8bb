#pragma once

#include <span>
#include <vector>

#include "seglab/geometry.hpp"

namespace seglab {

/// Nodal values on a Domain, row-major with x varying fastest.
class ScalarField {
public:
    explicit ScalarField(Domain d);
    ScalarField(Domain d, std::vector<double> values);

    template <class F>
    static ScalarField from_function(const Domain& d, F&& f) {
        ScalarField out(d);
        for (std::size_t j = 0; j < d.ny(); ++j)
            for (std::size_t i = 0; i < d.nx(); ++i)
                out.values_[d.index(i, j)] = f(d.point(i, j));
        return out;
    }

    const Domain& domain() const { return domain_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[domain_.index(i, j)]; }
    double& operator()(std::size_t i, std::size_t j) { return values_[domain_.index(i, j)]; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    friend bool operator==(const ScalarField&, const ScalarField&) = default;

private:
    Domain domain_;
    std::vector<double> values_;
};

/// The species u_1..u_N of the competition system together with its coupling beta.
class MultiField {
public:
    MultiField(Domain d, std::size_t nspecies, double beta);
    MultiField(std::vector<ScalarField> species, double beta);

    const Domain& domain() const { return domain_; }
    std::size_t nspecies() const { return species_.size(); }
    double beta() const { return beta_; }
    const ScalarField& species(std::size_t i) const { return species_.at(i); }
    ScalarField& species(std::size_t i) { return species_.at(i); }

    /// u_1 - u_2, whose zero set is the interface.
    ScalarField difference() const;
    /// sup over the grid of sum_i u_i.
    double sup_sum() const;
    /// Throws InvalidArgument unless every value is finite and nonnegative.
    void validate() const;

    friend bool operator==(const MultiField&, const MultiField&) = default;

private:
    Domain domain_;
    std::vector<ScalarField> species_;
    double beta_;
};

}  // namespace seglab
