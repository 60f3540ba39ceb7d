#include "svet/correlation_tensor.hpp"
#include "svet/density_operator.hpp"
#include "svet/errors.hpp"
#include "svet/oracle.hpp"
#include "svet/spacetime.hpp"
#include "svet/svetlichny.hpp"
#include "svet/sweep.hpp"
#include "svet/xtype.hpp"

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;

namespace {

svet::DensityOperator as_density(const svet::Matrix16c& entries) {
    svet::DensityOperator rho;
    rho.entries = entries;
    return rho;
}

py::array_t<double> tensor_array(const svet::CorrelationTensor& t) {
    py::array_t<double> out({4, 4, 4, 4});
    std::copy(t.t.begin(), t.t.end(), out.mutable_data());
    return out;
}

}  // namespace

PYBIND11_MODULE(svet, m) {
    m.doc() =
        "Maximal Svetlichny-inequality violation for four-qubit states: exact "
        "closed forms for X-type states, a multistart numeric maximizer, and "
        "one- and two-horizon scenario constructors";

    py::register_exception<svet::Error>(m, "SvetError");

    py::class_<svet::ValidationReport>(m, "ValidationReport")
        .def_readonly("hermiticity_defect", &svet::ValidationReport::hermiticity_defect)
        .def_readonly("trace_defect", &svet::ValidationReport::trace_defect)
        .def_readonly("min_eigenvalue", &svet::ValidationReport::min_eigenvalue)
        .def_readonly("hermitian_ok", &svet::ValidationReport::hermitian_ok)
        .def_readonly("trace_ok", &svet::ValidationReport::trace_ok)
        .def_readonly("psd_ok", &svet::ValidationReport::psd_ok)
        .def("passed", &svet::ValidationReport::passed);

    py::class_<svet::XTypeState>(m, "XTypeState")
        .def(py::init<>())
        .def_readwrite("diag", &svet::XTypeState::diag)
        .def_readwrite("pair_index", &svet::XTypeState::pair_index)
        .def_readwrite("pair_value", &svet::XTypeState::pair_value);

    py::class_<svet::MeasurementSettings>(m, "MeasurementSettings")
        .def(py::init<>())
        .def_readwrite("a", &svet::MeasurementSettings::a)
        .def_readwrite("a_prime", &svet::MeasurementSettings::a_prime)
        .def_readwrite("b", &svet::MeasurementSettings::b)
        .def_readwrite("b_prime", &svet::MeasurementSettings::b_prime)
        .def_readwrite("c", &svet::MeasurementSettings::c)
        .def_readwrite("c_prime", &svet::MeasurementSettings::c_prime)
        .def_readwrite("d", &svet::MeasurementSettings::d)
        .def_readwrite("d_prime", &svet::MeasurementSettings::d_prime);

    py::class_<svet::SvetlichnyResult>(m, "SvetlichnyResult")
        .def_readonly("value", &svet::SvetlichnyResult::value)
        .def_readonly("measure", &svet::SvetlichnyResult::measure)
        .def_property_readonly("branch",
                               [](const svet::SvetlichnyResult& r) {
                                   return svet::to_string(r.branch);
                               })
        .def_readonly("certificate", &svet::SvetlichnyResult::certificate);

    py::class_<svet::OracleConfig>(m, "OracleConfig")
        .def(py::init<>())
        .def_readwrite("restarts", &svet::OracleConfig::restarts)
        .def_readwrite("max_iterations", &svet::OracleConfig::max_iterations)
        .def_readwrite("step_tolerance", &svet::OracleConfig::step_tolerance)
        .def_readwrite("value_tolerance", &svet::OracleConfig::value_tolerance)
        .def_readwrite("rng_seed", &svet::OracleConfig::rng_seed);

    py::class_<svet::OracleOutcome>(m, "OracleOutcome")
        .def_readonly("value", &svet::OracleOutcome::value)
        .def_readonly("settings", &svet::OracleOutcome::settings)
        .def_readonly("iterations_used", &svet::OracleOutcome::iterations_used)
        .def_readonly("converged", &svet::OracleOutcome::converged);

    py::class_<svet::SchwarzschildScenario>(m, "SchwarzschildScenario")
        .def(py::init<>())
        .def_readwrite("alpha", &svet::SchwarzschildScenario::alpha)
        .def_readwrite("omega", &svet::SchwarzschildScenario::omega)
        .def_readwrite("temperature", &svet::SchwarzschildScenario::temperature)
        .def_readwrite("mass", &svet::SchwarzschildScenario::mass)
        .def_readwrite("n", &svet::SchwarzschildScenario::n)
        .def_readwrite("p", &svet::SchwarzschildScenario::p)
        .def_readwrite("q", &svet::SchwarzschildScenario::q);

    py::class_<svet::SdSScenario>(m, "SdSScenario")
        .def(py::init<>())
        .def_readwrite("alpha", &svet::SdSScenario::alpha)
        .def_readwrite("omega", &svet::SdSScenario::omega)
        .def_readwrite("mass", &svet::SdSScenario::mass)
        .def_readwrite("lambda_cosmo", &svet::SdSScenario::lambda_cosmo)
        .def_readwrite("n", &svet::SdSScenario::n)
        .def_readwrite("m", &svet::SdSScenario::m);

    py::class_<svet::SdSThermo>(m, "SdSThermo")
        .def_readonly("r_H", &svet::SdSThermo::r_H)
        .def_readonly("r_C", &svet::SdSThermo::r_C)
        .def_readonly("k_H", &svet::SdSThermo::k_H)
        .def_readonly("k_C", &svet::SdSThermo::k_C)
        .def_readonly("T_H", &svet::SdSThermo::T_H)
        .def_readonly("T_C", &svet::SdSThermo::T_C)
        .def_readonly("cos_r", &svet::SdSThermo::cos_r)
        .def_readonly("sin_r", &svet::SdSThermo::sin_r)
        .def_readonly("cos_w", &svet::SdSThermo::cos_w)
        .def_readonly("sin_w", &svet::SdSThermo::sin_w);

    m.def("validate", [](const svet::Matrix16c& rho) { return svet::validate(as_density(rho)); },
          py::arg("rho"), "Hermiticity / trace / positivity report for a 16x16 matrix");
    m.def("pauli_tensor",
          [](const svet::Matrix16c& rho) { return tensor_array(svet::pauli_tensor(as_density(rho))); },
          py::arg("rho"), "4x4x4x4 Pauli coefficient tensor t[i,j,k,l]");
    m.def("classify_xtype",
          [](const svet::Matrix16c& rho, double tol) {
              return svet::classify_xtype(as_density(rho), tol);
          },
          py::arg("rho"), py::arg("tol") = svet::kXTypeTol,
          "Extract the X-type representation or raise SvetError");
    m.def("xtype_to_matrix",
          [](const svet::XTypeState& x) { return svet::to_density(x).entries; },
          py::arg("state"), "Embed an X-type state back into a dense 16x16 matrix");
    m.def("svetlichny_operator", [](const svet::MeasurementSettings& s) {
              return svet::Matrix16c(svet::svetlichny_operator(s));
          },
          py::arg("settings"), "16x16 observable for the given directions");
    m.def("expectation",
          [](const svet::Matrix16c& rho, const svet::MeasurementSettings& s) {
              return svet::expectation(as_density(rho), s);
          },
          py::arg("rho"), py::arg("settings"));
    m.def("inner_max",
          [](const svet::Vector3& l0, const svet::Vector3& l1) {
              return svet::inner_max({l0, l1});
          },
          py::arg("lambda0"), py::arg("lambda1"),
          "Exact maximum of <c+c', l0> + <c-c', l1> over unit c, c'");
    m.def("upper_bound",
          [](const svet::Vector3& l0, const svet::Vector3& l1) {
              return svet::upper_bound({l0, l1});
          },
          py::arg("lambda0"), py::arg("lambda1"));
    m.def("svetlichny_xtype", &svet::svetlichny_xtype, py::arg("state"),
          "Closed-form maximal Svetlichny value for an X-type state");
    m.def("nonlocality_measure", &svet::nonlocality_measure, py::arg("value"));
    m.def("maximize",
          [](const svet::Matrix16c& rho, const svet::OracleConfig& cfg) {
              return svet::maximize(as_density(rho), cfg);
          },
          py::arg("rho"), py::arg("config") = svet::OracleConfig{},
          "Multistart numeric maximization over all measurement settings");
    m.def("svetlichny_value",
          [](const svet::Matrix16c& rho, const svet::OracleConfig& cfg) {
              return svet::svetlichny_value(as_density(rho), cfg);
          },
          py::arg("rho"), py::arg("config") = svet::OracleConfig{},
          "Analytic fast path for X-type states, numeric maximizer otherwise");

    m.def("hawking_temperature", &svet::hawking_temperature, py::arg("mass"));
    m.def("squeeze_coeffs",
          [](double omega, double temperature) {
              const svet::SqueezeCoeffs c = svet::squeeze_coeffs(omega, temperature);
              return std::pair<double, double>{c.cos_sq, c.sin_sq};
          },
          py::arg("omega"), py::arg("temperature"));
    m.def("reduce_schwarzschild",
          [](const svet::SchwarzschildScenario& s) {
              return svet::reduce_schwarzschild(s).entries;
          },
          py::arg("scenario"), "Reduced 16x16 state for a one-horizon scenario");
    m.def("svetlichny_schwarzschild", &svet::svetlichny_schwarzschild, py::arg("scenario"));
    m.def("sds_horizons",
          [](double mass, double lambda_cosmo) {
              const svet::HorizonRadii r = svet::sds_horizons(mass, lambda_cosmo);
              return std::pair<double, double>{r.r_H, r.r_C};
          },
          py::arg("mass"), py::arg("lambda_cosmo"));
    m.def("sds_thermo", &svet::sds_thermo, py::arg("mass"), py::arg("lambda_cosmo"),
          py::arg("omega"));
    m.def("build_sds_state",
          [](const svet::SdSScenario& s) { return svet::build_sds_state(s).entries; },
          py::arg("scenario"), "Reduced 16x16 state for a two-horizon scenario");
    m.def("svetlichny_sds", &svet::svetlichny_sds, py::arg("scenario"));
    m.def("region_report", &svet::region_report, py::arg("csv_path"),
          "JSON report of connected S > 8 regions in a sweep CSV");
}
