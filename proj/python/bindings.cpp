#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>

#include "seglab/checks.hpp"
#include "seglab/error.hpp"
#include "seglab/excess.hpp"
#include "seglab/frequency.hpp"
#include "seglab/interface.hpp"
#include "seglab/measures.hpp"
#include "seglab/powerlaw.hpp"
#include "seglab/profile1d.hpp"
#include "seglab/snapshot.hpp"
#include "seglab/solver.hpp"

namespace py = pybind11;
using namespace seglab;

namespace {

py::array_t<double> to_array(const MultiField& mf) {
    const Domain& d = mf.domain();
    py::array_t<double> out({mf.nspecies(), d.ny(), d.nx()});
    auto v = out.mutable_unchecked<3>();
    for (std::size_t s = 0; s < mf.nspecies(); ++s)
        for (std::size_t j = 0; j < d.ny(); ++j)
            for (std::size_t i = 0; i < d.nx(); ++i) v(s, j, i) = mf.species(s)(i, j);
    return out;
}

MultiField from_array(py::array_t<double, py::array::c_style | py::array::forcecast> a, double x0, double y0, double h,
                      double beta) {
    if (a.ndim() != 3) throw Error(ErrorCode::InvalidArgument, "expected an array of shape (nspecies, ny, nx)");
    const Domain d(x0, y0, h, static_cast<std::size_t>(a.shape(2)), static_cast<std::size_t>(a.shape(1)));
    auto v = a.unchecked<3>();
    std::vector<ScalarField> species;
    for (py::ssize_t s = 0; s < a.shape(0); ++s) {
        ScalarField f(d);
        for (std::size_t j = 0; j < d.ny(); ++j)
            for (std::size_t i = 0; i < d.nx(); ++i) f(i, j) = v(s, j, i);
        species.push_back(std::move(f));
    }
    MultiField mf(std::move(species), beta);
    mf.validate();
    return mf;
}

py::dict report_dict(const SolveReport& r) {
    py::dict d;
    d["iterations"] = r.iterations;
    d["residual"] = r.residual;
    d["max_update"] = r.max_update;
    d["converged"] = r.converged;
    d["under_resolved"] = r.under_resolved;
    d["omega"] = r.omega;
    d["wall_seconds"] = r.wall_seconds;
    d["sup_sum"] = r.sup_sum;
    return d;
}

}  // namespace

PYBIND11_MODULE(_seglab, m) {
    m.doc() = "Segregated two-species interface solver and analysis";

    py::register_exception<Error>(m, "SeglabError", PyExc_ValueError);

    py::class_<MultiField>(m, "Field")
        .def(py::init(&from_array), py::arg("values"), py::arg("x0"), py::arg("y0"), py::arg("h"), py::arg("beta"))
        .def_property_readonly("beta", &MultiField::beta)
        .def_property_readonly("nspecies", &MultiField::nspecies)
        .def_property_readonly("h", [](const MultiField& f) { return f.domain().h(); })
        .def_property_readonly("origin", [](const MultiField& f) { return py::make_tuple(f.domain().x0(), f.domain().y0()); })
        .def_property_readonly("values", &to_array)
        .def("frequency", [](const MultiField& f, std::pair<double, double> c, double r) {
            return almgren_frequency(f, {c.first, c.second}, r);
        }, py::arg("center"), py::arg("r"))
        .def("frequency_profile", [](const MultiField& f, std::pair<double, double> c, double rmin, double rmax,
                                     std::size_t n) {
            const FrequencyProfile p = frequency_profile(f, {c.first, c.second}, rmin, rmax, n);
            return py::make_tuple(p.radii, p.values);
        }, py::arg("center"), py::arg("rmin"), py::arg("rmax"), py::arg("n") = 12)
        .def("excess_sequence", [](const MultiField& f, std::pair<double, double> c, double theta, std::size_t kmax,
                                   double base_radius) {
            const ExcessSequence s = dyadic_excess_sequence(f.difference(), {c.first, c.second}, theta, kmax, f.beta(),
                                                            base_radius);
            py::dict d;
            d["scales"] = s.scales;
            d["E"] = s.E;
            d["drift"] = s.drift;
            d["r_beta_ratio"] = s.r_beta_ratio();
            return d;
        }, py::arg("center"), py::arg("theta") = 0.3, py::arg("kmax") = 3, py::arg("base_radius") = 1.0)
        .def("interface", [](const MultiField& f, std::pair<double, double> c, double r) {
            const InterfaceCurve curve = extract_interface(f.difference(), Region::disk({c.first, c.second}, r));
            std::vector<std::pair<double, double>> pts;
            for (const Vec2& v : curve.vertices) pts.emplace_back(v.x, v.y);
            py::dict d;
            d["vertices"] = pts;
            d["is_graph"] = curve.is_graph;
            d["lipschitz"] = curve.lipschitz_constant;
            d["min_sum"] = interface_min_sum(f, curve).value;
            return d;
        }, py::arg("center") = std::pair<double, double>{0.0, 0.0}, py::arg("r") = 0.5);

    m.def("solve", [](double beta, std::size_t n, double half_width, const std::string& kind, double tol,
                      std::size_t max_iters) {
        SolveConfig cfg;
        cfg.beta = beta;
        cfg.tol = tol;
        cfg.max_iters = max_iters;
        const BoundaryData bd = harmonic_limit_data(parse_boundary_kind(kind), {});
        std::optional<SolveResult> r;
        {
            py::gil_scoped_release release;
            r.emplace(solve_system(Domain::centered_square(half_width, n), bd, cfg));
        }
        return py::make_tuple(std::move(r->field), report_dict(r->report));
    }, py::arg("beta"), py::arg("n") = 129, py::arg("half_width") = 1.0, py::arg("kind") = "flat-linear",
          py::arg("tol") = 1e-10, py::arg("max_iters") = 2'000'000);

    m.def("profile_1d", [](double half_length, std::size_t npoints, double tol) {
        const Profile1D p = solve_profile_1d(half_length, npoints, tol);
        return py::make_tuple(p.t, p.g1, p.g2);
    }, py::arg("half_length") = 10.0, py::arg("npoints") = 2049, py::arg("tol") = 1e-10);

    m.def("fit_power_law", [](const std::vector<double>& betas, const std::vector<double>& values) {
        if (betas.size() != values.size()) throw Error(ErrorCode::InvalidArgument, "betas and values differ in length");
        std::vector<std::pair<double, double>> pts;
        for (std::size_t k = 0; k < betas.size(); ++k) pts.emplace_back(betas[k], values[k]);
        const PowerLawFit f = fit_power_law(pts);
        py::dict d;
        d["exponent"] = f.exponent;
        d["intercept"] = f.intercept;
        d["r2"] = f.r2;
        d["npoints"] = f.npoints;
        return d;
    }, py::arg("betas"), py::arg("values"));

    m.def("read_snapshot", [](const std::filesystem::path& p) { return read_snapshot(p); });
    m.def("write_snapshot", [](const std::filesystem::path& p, const MultiField& f) { write_snapshot(p, f); });

    m.def("run_checks", [] {
        std::vector<py::tuple> out;
        for (const CheckResult& c : run_checks()) out.push_back(py::make_tuple(c.name, c.pass, c.detail));
        return out;
    });
}
