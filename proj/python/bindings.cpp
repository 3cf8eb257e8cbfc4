// Python module menhir._core: thin wrappers over the C++ library and the
// command line entry point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "commands.hpp"
#include "menhir/calculus.hpp"
#include "menhir/error.hpp"
#include "menhir/golden.hpp"
#include "menhir/notation.hpp"
#include "menhir/verify.hpp"

namespace py = pybind11;
using namespace menhir;

namespace {

Space space_for(const std::string& algebra, std::size_t dim, const std::string& sample) {
    const auto model = Space::parse_model(algebra);
    if (!model) throw Error(ErrorCode::Parse, "unknown algebra '" + algebra + "'");
    if (*model != Model::Clifford) return Space(*model);
    if (dim == 0) {
        const auto len = list_length(sample);
        dim = len && *len > 0 ? *len : 3;
    }
    return Space::clifford(dim);
}

std::tuple<int, std::string, std::string> run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"menhir"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string menhir_of_text(const std::string& v, const std::string& algebra, std::size_t dim) {
    const Space space = space_for(algebra, dim, v);
    return format_element(menhir_of(Velocity(parse_element(v, space))).value());
}

py::dict compose(const std::string& v, const std::string& w, const std::string& algebra, std::size_t dim) {
    const Space space = space_for(algebra, dim, v);
    const Velocity vv(parse_element(v, space)), ww(parse_element(w, space));
    const VelocityComposition c = compose_velocities(vv, ww);
    py::dict d;
    d["menhir_v"] = format_element(menhir_of(vv).value());
    d["menhir_w"] = format_element(menhir_of(ww).value());
    d["composite_menhir"] = format_element(c.menhir.value());
    d["composite_velocity"] = format_element(c.velocity.value());
    d["speed"] = c.velocity.speed();
    d["velocity_components"] = space.extract(c.velocity.value());
    d["rotation_angle"] = c.rotation.angle(space);
    if (const auto rho = c.rotation.rho()) d["rho"] = format_element(*rho);
    return d;
}

py::dict verify(const std::string& algebra, std::size_t trials, std::uint64_t seed, const std::string& tier,
                std::size_t dim) {
    const Space space = space_for(algebra, dim, "");
    Tier t = Tier::Normal;
    if (tier == "stress") {
        t = Tier::Stress;
    } else if (tier != "normal") {
        throw Error(ErrorCode::Parse, "tier must be normal or stress");
    }
    const RunReport r = verify_oracle(space, trials, seed, t, default_tolerance(t));
    py::dict d;
    d["space"] = r.space;
    d["trials"] = r.trials;
    d["tolerance"] = r.tolerance;
    d["max_velocity_error"] = r.max_velocity_error;
    d["max_rotation_error"] = r.max_rotation_error;
    d["failures"] = r.failures.size();
    d["ok"] = r.ok();
    return d;
}

py::dict golden(std::size_t steps) {
    const GoldenScan s = golden_scan(steps);
    py::dict d;
    d["argmax"] = s.argmax;
    d["menhir_at_argmax"] = s.menhir_at_argmax;
    d["max_gap"] = s.max_gap;
    d["ratio"] = s.ratio;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Menhir calculus for relativistic velocity composition";
    m.attr("__version__") = "0.1.0";
    m.attr("schema_version") = cli::schema_version;
    py::register_exception<Error>(m, "MenhirError", PyExc_ValueError);

    m.def("run", &run_cli, py::arg("args"),
          "Runs the command line tool in process; returns (exit_code, stdout, stderr).");
    m.def("menhir_of", &menhir_of_text, py::arg("v"), py::arg("algebra") = "complex", py::arg("dim") = 0,
          "Menhir of a velocity written in element notation.");
    m.def("compose", &compose, py::arg("v"), py::arg("w"), py::arg("algebra") = "complex", py::arg("dim") = 0,
          "Composes the boost v followed by w.");
    m.def("verify", &verify, py::arg("algebra") = "complex", py::arg("trials") = 1000, py::arg("seed") = 42,
          py::arg("tier") = "normal", py::arg("dim") = 0, "Checks the calculus against the Lorentz-matrix oracle.");
    m.def("golden_scan", &golden, py::arg("steps") = 1000, "Maximiser of v - e(v) on [0, 1].");
}
