#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xychain/analysis.hpp"
#include "xychain/cli.hpp"
#include "xychain/config.hpp"
#include "xychain/csv.hpp"
#include "xychain/disorder.hpp"
#include "xychain/dynamics.hpp"
#include "xychain/effective.hpp"
#include "xychain/eigensolve.hpp"
#include "xychain/ensemble.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"
#include "xychain/lattice.hpp"
#include "xychain/validate.hpp"

namespace py = pybind11;
using namespace xychain;

namespace {

DisorderKind kind_of(const std::string& name) { return disorder_kind_from_string(name); }

Tridiagonal tridiagonal(std::vector<double> diagonal, std::vector<double> off_diagonal) {
    Tridiagonal m;
    m.diagonal = std::move(diagonal);
    m.off_diagonal = std::move(off_diagonal);
    return m;
}

SweepConfig sweep_config(const std::string& text) { return sweep_from_json(json::parse(text)); }

template <class Points>
std::string to_csv(const Points& pts) {
    std::ostringstream out;
    if constexpr (std::is_same_v<Points, std::vector<AlphaPoint>>)
        write_alpha_sweep_csv(out, pts);
    else
        write_grid_csv(out, pts);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Disordered XY-chain state transfer and entanglement";
    m.attr("__version__") = XYCHAIN_VERSION;

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    m.def("generate_sequence",
          [](double alpha, std::size_t length, std::uint64_t seed, const std::string& kind, double shift) {
              DisorderParams p{alpha, length, seed, kind_of(kind), shift};
              return generate_sequence(p).values;
          },
          py::arg("alpha"), py::arg("length"), py::arg("seed"), py::arg("kind") = "onsite",
          py::arg("shift") = 4.5);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("eigenvalues", &Spectrum::eigenvalues)
        .def_readonly("edge_s", &Spectrum::edge_s)
        .def_readonly("edge_r", &Spectrum::edge_r)
        .def_readonly("degenerate", &Spectrum::degenerate)
        .def("has_vectors", &Spectrum::has_vectors)
        .def("mode", [](const Spectrum& s, std::size_t k) {
            const auto v = s.mode(k);
            return std::vector<double>(v.begin(), v.end());
        })
        .def("__len__", &Spectrum::size);

    m.def("diagonalize",
          [](std::vector<double> diagonal, std::vector<double> off_diagonal, bool edges_only) {
              return diagonalize(tridiagonal(std::move(diagonal), std::move(off_diagonal)),
                                 edges_only ? Vectors::EdgesOnly : Vectors::Full);
          },
          py::arg("diagonal"), py::arg("off_diagonal"), py::arg("edges_only") = false);

    m.def("disordered_channel",
          [](const std::string& kind, double alpha, std::size_t n_sites, std::uint64_t seed, double shift,
             std::size_t max_redraws) {
              const auto c = disordered_channel(kind_of(kind), alpha, n_sites, seed, shift, max_redraws, nullptr);
              return py::make_tuple(c.onsite, c.couplings);
          },
          py::arg("kind"), py::arg("alpha"), py::arg("n_sites"), py::arg("seed"), py::arg("shift") = 4.5,
          py::arg("max_redraws") = 0, "Returns (onsite, couplings).");

    py::class_<TwoLevelEffective>(m, "TwoLevelEffective")
        .def_readonly("h_s", &TwoLevelEffective::h_s)
        .def_readonly("h_r", &TwoLevelEffective::h_r)
        .def_readonly("j_eff", &TwoLevelEffective::j_eff)
        .def_readonly("delta", &TwoLevelEffective::delta)
        .def_readonly("rabi", &TwoLevelEffective::rabi)
        .def_readonly("min_gap", &TwoLevelEffective::min_gap);

    py::class_<ThreeLevelEffective>(m, "ThreeLevelEffective")
        .def_readonly("mode_index", &ThreeLevelEffective::mode_index)
        .def_readonly("mode_energy", &ThreeLevelEffective::mode_energy)
        .def_readonly("eta", &ThreeLevelEffective::eta)
        .def_readonly("coupling_s", &ThreeLevelEffective::coupling_s)
        .def_readonly("coupling_r", &ThreeLevelEffective::coupling_r);

    m.def("two_level", &two_level, py::arg("spectrum"), py::arg("omega_s"), py::arg("omega_r"),
          py::arg("g_s"), py::arg("g_r"));
    m.def("three_level", &three_level, py::arg("spectrum"), py::arg("mode_index"), py::arg("g_s"),
          py::arg("g_r"));
    m.def("select_mode", &select_mode, py::arg("spectrum"), py::arg("target") = 0.0);

    m.def("concurrence_two_level",
          [](double delta, double j_eff) { return concurrence_two_level(delta, j_eff).value; },
          py::arg("delta"), py::arg("j_eff"));
    m.def("concurrence_three_level", &concurrence_three_level, py::arg("eta"));
    m.def("concurrence_pair",
          [](const PureState& state, std::size_t i, std::size_t j) { return concurrence_pair(state, i, j); },
          py::arg("state"), py::arg("i"), py::arg("j"));

    py::class_<DynamicsTrace>(m, "DynamicsTrace")
        .def_readonly("times", &DynamicsTrace::times)
        .def_readonly("amp_s", &DynamicsTrace::amp_s)
        .def_readonly("amp_r", &DynamicsTrace::amp_r)
        .def_readonly("concurrence_sr", &DynamicsTrace::concurrence_sr)
        .def_readonly("population_leak", &DynamicsTrace::population_leak)
        .def_readonly("norm", &DynamicsTrace::norm);

    m.def("evolve",
          [](const std::string& system_json, const std::vector<double>& times, const std::string& initial) {
              const auto spec = system_from_json(json::parse(system_json));
              const std::size_t site = initial == "r" ? spec.size() - 1 : 0;
              if (initial != "s" && initial != "r") throw Error("initial must be 's' or 'r'");
              return evolve(spec, basis_state(spec.size(), site), times);
          },
          py::arg("system_json"), py::arg("times"), py::arg("initial") = "s");
    m.def("dominant_frequency",
          [](const std::vector<double>& t, const std::vector<double>& y) { return dominant_frequency(t, y); },
          py::arg("times"), py::arg("signal"));

    m.def("participation_ratio",
          [](const std::vector<double>& p) { return participation_ratio(p); }, py::arg("probabilities"));
    m.def("wavefunction_profile",
          [](const std::string& kind, double alpha, std::size_t n_sites, std::uint64_t seed, double target) {
              return wavefunction_profile(kind_of(kind), alpha, n_sites, seed, target).probabilities;
          },
          py::arg("kind"), py::arg("alpha"), py::arg("n_sites"), py::arg("seed"), py::arg("target") = 0.0);

    m.def("sweep_alpha_csv",
          [](const std::string& config_json) {
              const auto cfg = sweep_config(config_json);
              py::gil_scoped_release release;
              return to_csv(run_alpha_sweep(cfg));
          },
          py::arg("config_json"));
    m.def("grid_omega_alpha_csv",
          [](const std::string& config_json) {
              const auto cfg = sweep_config(config_json);
              py::gil_scoped_release release;
              return to_csv(run_omega_alpha_grid(cfg));
          },
          py::arg("config_json"));
    m.def("normalize_sweep_config",
          [](const std::string& config_json) { return to_json(sweep_config(config_json)).dump(); },
          py::arg("config_json"), "Validated config with every default filled in, as JSON text.");

    m.def("validate",
          [](bool quick) {
              std::vector<py::tuple> out;
              for (const auto& c : run_validation(quick)) out.push_back(py::make_tuple(c.name, c.passed, c.detail));
              return out;
          },
          py::arg("quick") = true);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = dispatch(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Runs a subcommand in-process and returns (exit_code, stdout, stderr).");
}
