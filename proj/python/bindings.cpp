#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "whphase/algebra.hpp"
#include "whphase/bellmub.hpp"
#include "whphase/depolarizer.hpp"
#include "whphase/errors.hpp"
#include "whphase/phase.hpp"

namespace py = pybind11;
using namespace whphase;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexArray to_numpy(const Matrix& m) {
    const auto d = static_cast<py::ssize_t>(m.dim());
    ComplexArray out({d, d});
    auto buf = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < d; ++i)
        for (py::ssize_t j = 0; j < d; ++j) buf(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return out;
}

ComplexArray to_numpy(const StateVector& v) {
    ComplexArray out(static_cast<py::ssize_t>(v.size()));
    auto buf = out.mutable_unchecked<1>();
    for (py::ssize_t i = 0; i < buf.shape(0); ++i) buf(i) = v[static_cast<std::size_t>(i)];
    return out;
}

Matrix from_numpy(const ComplexArray& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw ValidationError("expected a square 2-D array");
    const auto d = static_cast<std::size_t>(a.shape(0));
    Matrix m(d);
    auto buf = a.unchecked<2>();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = buf(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
    return m;
}

StateVector vector_from_numpy(const ComplexArray& a) {
    if (a.ndim() != 1) throw ValidationError("expected a 1-D array");
    auto buf = a.unchecked<1>();
    StateVector v(static_cast<std::size_t>(buf.shape(0)));
    for (py::ssize_t i = 0; i < buf.shape(0); ++i) v[static_cast<std::size_t>(i)] = buf(i);
    return v;
}

py::dict report_dict(const depolarizer::DepolarizerReport& r) {
    py::list witnesses;
    for (const auto& w : r.aliasing_witnesses) witnesses.append(py::make_tuple(w.n, w.n_prime, w.k));
    py::dict out;
    out["defect_hs"] = r.defect_hs;
    out["exact"] = r.exact;
    out["basis_orthogonal"] = r.basis_orthogonal;
    out["aliasing_witnesses"] = witnesses;
    return out;
}

depolarizer::CyclicStructureFunction cyclic(const std::vector<double>& values) {
    return depolarizer::CyclicStructureFunction(values);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-dimensional extended Weyl-Heisenberg algebras, phase operators, depolarizers, Bell states and MUBs";

    auto base = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InvalidDimension>(m, "InvalidDimension", PyExc_ValueError);
    py::register_exception<UnsupportedConfiguration>(m, "UnsupportedConfiguration", PyExc_ValueError);
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
    (void)base;

    py::class_<algebra::AlgebraSpec>(m, "AlgebraSpec")
        .def_readonly("two_s", &algebra::AlgebraSpec::two_s)
        .def_readonly("f", &algebra::AlgebraSpec::f)
        .def_readonly("phi", &algebra::AlgebraSpec::phi)
        .def_readonly("F", &algebra::AlgebraSpec::structure)
        .def_property_readonly("dim", &algebra::AlgebraSpec::dim)
        .def("__repr__", [](const algebra::AlgebraSpec& s) {
            return "AlgebraSpec(two_s=" + std::to_string(s.two_s) + ", phi=" + std::to_string(s.phi) + ")";
        });

    // algebra
    m.def("build_spec", &algebra::build_spec, py::arg("two_s"), py::arg("f"), py::arg("phi") = 0.0);
    m.def("multiphoton_f", &algebra::multiphoton_f, py::arg("two_s"), py::arg("m"));
    m.def("g_from_F", &algebra::g_from_F);
    m.def("ladder_matrices", [](const algebra::AlgebraSpec& s) {
        const auto p = algebra::ladder_matrices(s);
        return py::make_tuple(to_numpy(p.lowering), to_numpy(p.raising), to_numpy(p.number));
    }, "(a_minus, a_plus, N)");
    m.def("check_commutators", [](const algebra::AlgebraSpec& s) {
        return algebra::check_commutators(s, algebra::ladder_matrices(s));
    });
    m.def("hamiltonian", [](const algebra::AlgebraSpec& s) { return to_numpy(algebra::hamiltonian(s)); });
    m.def("boson_realization", [](const algebra::AlgebraSpec& s) {
        const auto p = algebra::boson_realization(s);
        return py::make_tuple(to_numpy(p.lowering), to_numpy(p.raising));
    });
    m.def("stokes_operators", [](const algebra::AlgebraSpec& s) {
        const auto o = algebra::stokes_operators(s);
        return py::make_tuple(to_numpy(o.plus), to_numpy(o.minus), to_numpy(o.s3));
    }, "(s_plus, s_minus, s_3)");
    m.def("su2_residual", [](const algebra::AlgebraSpec& s) {
        return algebra::su2_residual(algebra::stokes_operators(s));
    });

    // phase
    m.def("phase_operator", [](const algebra::AlgebraSpec& s) { return to_numpy(phase::phase_operator(s)); });
    m.def("phase_state", [](const algebra::AlgebraSpec& s, int mm) { return to_numpy(phase::phase_state(s, mm)); });
    m.def("phase_basis", [](const algebra::AlgebraSpec& s) {
        const auto b = phase::phase_basis(s);
        Matrix cols(static_cast<std::size_t>(b.dim));
        for (std::size_t j = 0; j < b.states.size(); ++j)
            for (std::size_t i = 0; i < b.states[j].size(); ++i) cols(i, j) = b.states[j][i];
        return py::make_tuple(to_numpy(cols), b.angles);
    }, "(columns |m,phi>, angles theta_m)");
    m.def("evolve_phase_state", [](const algebra::AlgebraSpec& s, int mm, double t) {
        return to_numpy(phase::evolve_phase_state(s, mm, t));
    });
    m.def("overlap_closed_form", &phase::overlap_closed_form, py::arg("spec"), py::arg("m"), py::arg("m_prime"),
          py::arg("phi"), py::arg("phi_prime"));
    m.def("hermitian_theta", [](const algebra::AlgebraSpec& s) { return to_numpy(phase::hermitian_theta(s)); });
    m.def("exp_i_theta", [](const algebra::AlgebraSpec& s) { return to_numpy(phase::exp_i_theta(s)); });
    m.def("theta_kernel", [](const algebra::AlgebraSpec& s, int n, int np) {
        const auto k = phase::theta_kernel(s, n, np);
        py::dict out;
        out["value"] = k.value;
        out["closed_form"] = k.closed_form;
        out["discrepancy"] = k.discrepancy;
        return out;
    });
    m.def("phase_number_commutator", [](const algebra::AlgebraSpec& s) {
        return to_numpy(phase::phase_number_commutator(s));
    });
    m.def("phase_distribution", [](const algebra::AlgebraSpec& s, std::vector<double> coeffs, double alpha) {
        return phase::phase_distribution(phase::make_partial_phase_state(std::move(coeffs), alpha, s.phi), s);
    }, py::arg("spec"), py::arg("coeffs"), py::arg("alpha"));
    m.def("theta_expectation", [](const algebra::AlgebraSpec& s, std::vector<double> coeffs, double alpha) {
        const auto e = phase::theta_expectation(phase::make_partial_phase_state(std::move(coeffs), alpha, s.phi), s);
        py::dict out;
        out["total"] = e.total;
        out["diag"] = e.diag;
        out["nondiag"] = e.nondiag;
        out["nondiag_closed_form"] = e.nondiag_closed_form;
        return out;
    }, py::arg("spec"), py::arg("coeffs"), py::arg("alpha"));

    // depolarizer; structure functions are plain lists F(0..d-1)
    m.def("e_power", [](const std::vector<double>& F, double phi, int k) {
        return to_numpy(depolarizer::e_power(cyclic(F), phi, k));
    });
    m.def("v_operator", [](const std::vector<double>& F, double phi) {
        return to_numpy(depolarizer::v_operator(cyclic(F), phi));
    });
    m.def("twirl_phase_basis", [](const ComplexArray& O, const algebra::AlgebraSpec& s) {
        return to_numpy(depolarizer::twirl_phase_basis(from_numpy(O), s));
    });
    m.def("depolarize_discrete", [](const ComplexArray& O, const std::vector<double>& F) {
        const auto r = depolarizer::depolarize_discrete(from_numpy(O), cyclic(F));
        return py::make_tuple(to_numpy(r.output), report_dict(r.report));
    });
    m.def("depolarize_continuous", [](const ComplexArray& O, const std::vector<double>& F) {
        const auto r = depolarizer::depolarize_continuous(from_numpy(O), cyclic(F));
        return py::make_tuple(to_numpy(r.output), report_dict(r.report));
    });
    m.def("error_basis_orthogonality", [](const std::vector<double>& F) {
        return report_dict(depolarizer::error_basis_orthogonality(cyclic(F)));
    });
    m.def("structure_daoud", [](int d) { return depolarizer::CyclicStructureFunction::daoud(d).values(); });
    m.def("structure_linear", [](int d) { return depolarizer::CyclicStructureFunction::linear(d).values(); });

    // Bell / MUB
    m.def("mes", [](int d) { return to_numpy(bellmub::mes(d).amps); });
    m.def("bell_state", [](int d, int k, int p) { return to_numpy(bellmub::bell_state(d, {k, p}).amps); });
    m.def("bell_from_phase_op", [](int d, int k, int p) {
        const auto g = bellmub::bell_from_phase_op(d, {k, p});
        py::dict out;
        out["state"] = to_numpy(g.generated.amps);
        out["predicted_phase"] = g.predicted_phase;
        out["phi"] = g.phi;
        out["residual"] = g.residual;
        return out;
    });
    m.def("schmidt", [](const ComplexArray& amps, int d) {
        const auto r = bellmub::schmidt({d, vector_from_numpy(amps)});
        return py::make_tuple(r.coeffs, r.entropy);
    }, py::arg("amps"), py::arg("d"), "(coeffs descending, entropy)");
    m.def("superpose_all", [](int d) { return to_numpy(bellmub::superpose_all(d).amps); });
    m.def("superpose_diagonal", [](int d) {
        const auto r = bellmub::superpose_diagonal(d);
        return py::make_tuple(to_numpy(r.state.amps), r.raw_norm);
    }, "(normalized state, raw norm)");
    m.def("mub_vector", [](int d, int p, int mm) { return to_numpy(bellmub::mub_vector(d, p, mm).amps); });
    m.def("twist_superposition", [](int d, int p) { return to_numpy(bellmub::twist_superposition(d, p).amps); });
    m.def("unbiasedness_check", [](int d) {
        const auto r = bellmub::unbiasedness_check(d);
        py::dict out;
        out["max_deviation"] = r.max_deviation;
        out["prime"] = r.prime;
        out["status"] = r.status;
        return out;
    });
    m.def("identity_checks", [](int d) {
        py::list out;
        for (const auto& c : bellmub::identity_checks(d)) {
            py::dict item;
            item["identity"] = c.identity;
            item["d"] = c.d;
            py::dict params;
            for (const auto& [k, v] : c.params) params[py::str(k)] = v;
            item["params"] = params;
            item["residual"] = c.residual;
            item["pass"] = c.pass;
            out.append(item);
        }
        return out;
    });
}
