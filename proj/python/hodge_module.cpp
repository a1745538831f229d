#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hodge/cli.hpp"
#include "hodge/lie.hpp"
#include "hodge/suites.hpp"

namespace py = pybind11;
using namespace hodge;

namespace {

py::dict diamond_dict(const HodgeDiamond& d) {
  py::dict out;
  for (const auto& [b, n] : d.entries()) out[py::make_tuple(b.p, b.q)] = n;
  return out;
}

HodgeDiamond diamond_of(const FixtureFile& f, const std::string& which) {
  if (which == "H") return deligne_split(h_structure(f)).diamond();
  if (f.space != FixtureSpace::source) throw Error("diamond '" + which + "' needs a source fixture");
  const auto& v = f.fixture.v;
  if (which == "V") return deligne_split(v.mhs()).diamond();
  if (which == "g") return lie_deligne_split(lie_algebra(v.q), v.mhs()).diamond();
  throw Error("unknown diamond '" + which + "' (V, g or H)");
}

py::dict markers_of(const FixtureFile& f) {
  const auto s = orbit_spec(f);
  py::dict out;
  out["m"] = s.markers.m;
  out["e0"] = s.markers.e0;
  out["einf"] = s.markers.einf;
  out["ed"] = s.markers.ed;
  out["lambda"] = py::make_tuple(to_string(s.markers.lambda.re()), to_string(s.markers.lambda.im()));
  return out;
}

py::dict lie_of(const FixtureFile& f) {
  if (f.space != FixtureSpace::source) throw Error("lie needs a source fixture");
  const auto& v = f.fixture.v;
  const auto l = lie_algebra(v.q);
  const auto g = lie_deligne_split(l, v.mhs());
  py::dict out;
  out["dim"] = l.dim();
  out["s_F"] = g.s_f.dim();
  out["s_W"] = g.s_w.dim();
  out["s_inf"] = g.s_inf.dim();
  out["m_X"] = g.m_x.dim();
  out["s_F_perp"] = g.s_f_perp.dim();
  out["hermitian"] = hermitian_test(g).pass;
  out["smooth"] = smoothness_test(g).pass;
  return out;
}

py::tuple eval_at(const FixtureFile& f, const std::vector<Complex>& t, const std::vector<long>& branch) {
  const auto s = orbit_spec(f);
  if (t.size() != s.r) throw Error("expected " + std::to_string(s.r) + " coordinates");
  FloatPoint p;
  p.t = t;
  p.branch = branch;
  const auto fr = eval_frame(s, p);
  return py::make_tuple(fr.h_tilde, fr.q0inf);
}

py::list check(const FixtureFile& f, const std::vector<std::string>& suites, unsigned seed, double tol) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.tol = tol;
  std::vector<std::string> names = suites;
  if (names.empty()) {
    for (const auto& n : suite_names()) {
      if (!suite_unavailable(f, n)) names.push_back(n);
    }
  }
  py::list out;
  for (const auto& n : names) {
    for (const auto& r : run_suite(f, n, opt)) {
      py::dict d;
      d["suite"] = r.suite;
      d["claim"] = r.claim;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      out.append(d);
    }
  }
  return out;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<std::string> all = {"hodge"};
  all.insert(all.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : all) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and numeric invariants of degenerating polarized Hodge structures";

  auto base = py::register_exception<Error>(m, "HodgeError");
  py::register_exception<ParseError>(m, "FixtureParseError", base.ptr());

  py::class_<FixtureFile>(m, "Fixture")
      .def_property_readonly("name", [](const FixtureFile& f) { return f.fixture.name; })
      .def_property_readonly("dim", [](const FixtureFile& f) { return f.fixture.v.dim(); })
      .def_property_readonly("weight", [](const FixtureFile& f) { return f.fixture.v.weight; })
      .def_property_readonly("induced", [](const FixtureFile& f) { return f.space == FixtureSpace::induced; })
      .def_property_readonly("cone_size", [](const FixtureFile& f) { return f.fixture.v.cone.size(); })
      .def(
          "diamond", [](const FixtureFile& f, const std::string& which) { return diamond_dict(diamond_of(f, which)); },
          py::arg("which") = "H", "Hodge diamond of V, g or H as {(p, q): dim}")
      .def("markers", &markers_of)
      .def("lie", &lie_of)
      .def("eval", &eval_at, py::arg("t"), py::arg("branch") = std::vector<long>{},
           "(h_tilde, Q(eta_0, conj eta_inf)) at the point t")
      .def("check", &check, py::arg("suites") = std::vector<std::string>{}, py::arg("seed") = 1U,
           py::arg("tol") = 1e-6)
      .def("to_json", [](const FixtureFile& f) { return write_fixture(f); })
      .def("induce", [](const FixtureFile& f) { return induced_fixture(f); })
      .def("__repr__", [](const FixtureFile& f) { return "<hodge.Fixture " + f.fixture.name + ">"; });

  m.def("catalog_names", &catalog_names);
  m.def("catalog", [](const std::string& name) {
    FixtureFile f;
    f.fixture = catalog_fixture(name);
    return f;
  });
  m.def("loads", &read_fixture, py::arg("text"));
  m.def("load", &read_fixture_file, py::arg("path"));
  m.def("suite_names", &suite_names);
  m.def("run_cli", &cli, py::arg("args"), "Runs the hodge command; returns (exit_code, stdout, stderr)");
}
