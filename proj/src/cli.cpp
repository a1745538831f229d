#include "hodge/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodge/lie.hpp"
#include "hodge/suites.hpp"

namespace hodge {

namespace {

using Json = nlohmann::ordered_json;

/// Input that is well-formed JSON but cannot be used for the requested command.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string file;
  std::string report;
};

struct Outcome {
  Json data = Json::object();
  std::vector<CheckResult> checks;
};

Json diamond_json(const HodgeDiamond& d) {
  Json out = Json::array();
  for (const auto& [b, n] : d.entries()) out.push_back(Json::array({b.p, b.q, n}));
  return out;
}

void print_diamond(std::ostream& out, const std::string& title, const HodgeDiamond& d) {
  out << title << "\n";
  for (const auto& [b, n] : d.entries()) out << "  " << std::left << std::setw(8) << to_string(b) << n << "\n";
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }
Json gauss_json(const GaussScalar& z) { return Json::array({to_string(z.re()), to_string(z.im())}); }

std::string describe(const FixtureFile& f) {
  const auto& v = f.fixture.v;
  std::ostringstream os;
  os << f.fixture.name << ": " << (f.space == FixtureSpace::source ? "source" : "induced") << ", dim " << v.dim()
     << ", weight " << v.weight << ", " << v.cone.size() << " cone generator" << (v.cone.size() == 1 ? "" : "s");
  return os.str();
}

struct HFrame {
  MixedHodge h;
  DeligneSplitting split;
  AdaptedFrame frame;
  Markers markers;
};

HFrame h_frame(const FixtureFile& f) {
  HFrame out;
  out.h = h_structure(f);
  out.split = deligne_split(out.h);
  out.frame = adapted_basis(out.split, out.h.q, out.h.weight);
  out.markers = locate_markers(out.h, out.frame);
  return out;
}

const PureHodgeData& source_data(const FixtureFile& f, const std::string& command) {
  if (f.space != FixtureSpace::source) throw UsageError(command + " needs a source fixture (g is built on V)");
  return f.fixture.v;
}

Outcome cmd_diamond(const FixtureFile& f, std::ostream& out) {
  Outcome o;
  out << describe(f) << "\n";
  if (f.space == FixtureSpace::source) {
    const auto& v = f.fixture.v;
    const auto dv = deligne_split(v.mhs()).diamond();
    const auto dg = lie_deligne_split(lie_algebra(v.q), v.mhs()).diamond();
    print_diamond(out, "Diamond(V)", dv);
    print_diamond(out, "Diamond(g)", dg);
    o.data["V"] = diamond_json(dv);
    o.data["g"] = diamond_json(dg);
  }
  const auto hf = h_frame(f);
  const auto dh = hf.split.diamond();
  print_diamond(out, "Diamond(H): dim " + std::to_string(hf.h.dim()) + ", weight " + std::to_string(hf.h.weight), dh);
  out << "m = " << hf.markers.m << "\n";
  o.data["H"] = diamond_json(dh);
  o.data["m"] = hf.markers.m;
  return o;
}

Outcome cmd_split(const FixtureFile& f, bool on_h, std::ostream& out) {
  Outcome o;
  out << describe(f) << "\n";
  const MixedHodge m = on_h ? h_structure(f) : f.fixture.v.mhs();
  const auto split = deligne_split(m);
  out << "Deligne splitting of " << (on_h || f.space == FixtureSpace::induced ? "H" : "V") << "\n";
  Json pieces = Json::array();
  for (const auto& [b, piece] : split.pieces()) {
    out << "  I^" << to_string(b) << "  dim " << piece.dim() << "\n";
    Json basis = Json::array();
    for (const auto& vec : piece.vectors()) {
      out << "    [";
      Json row = Json::array();
      for (std::size_t c = 0; c < vec.size(); ++c) {
        out << (c ? ", " : "") << vec[c].str();
        row.push_back(gauss_json(vec[c]));
      }
      out << "]\n";
      basis.push_back(std::move(row));
    }
    pieces.push_back(Json{{"p", b.p}, {"q", b.q}, {"dim", piece.dim()}, {"basis", std::move(basis)}});
  }
  o.data["pieces"] = std::move(pieces);
  return o;
}

Outcome cmd_induce(const FixtureFile& f, const std::string& output, std::ostream& out) {
  Outcome o;
  const auto text = write_fixture(induced_fixture(f));
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output);
    if (!file) throw UsageError("cannot write " + output);
    file << text;
    out << "wrote " << output << "\n";
  }
  o.data["output"] = output;
  return o;
}

Outcome cmd_markers(const FixtureFile& f, std::ostream& out) {
  Outcome o;
  const auto hf = h_frame(f);
  const auto& mk = hf.markers;
  out << describe(f) << "\n";
  out << "m = " << mk.m << "\n";
  out << "lambda = " << mk.lambda.str() << "\n";
  out << "e0 = " << mk.e0 << " " << to_string(hf.frame.slots[mk.e0]) << "\n";
  out << "einf = " << mk.einf << " " << to_string(hf.frame.slots[mk.einf]) << "\n";
  out << "ed = " << mk.ed << " " << to_string(hf.frame.slots[mk.ed]) << "\n";
  o.data = Json{{"m", mk.m}, {"lambda", gauss_json(mk.lambda)}, {"e0", mk.e0}, {"einf", mk.einf}, {"ed", mk.ed}};
  o.checks.push_back(CheckResult{"markers", "markers", true, ""});
  if (auto v = check_markers(hf.h, hf.frame, mk); !v) o.checks.back() = {"markers", "markers", false, v.detail};
  if (f.markers && (f.markers->e0 != mk.e0 || f.markers->einf != mk.einf || f.markers->ed != mk.ed)) {
    o.checks.push_back({"markers", "marker override", false, "override disagrees with the adapted frame"});
  }
  return o;
}

Outcome cmd_lie(const FixtureFile& f, std::ostream& out) {
  Outcome o;
  const auto& v = source_data(f, "lie");
  const auto l = lie_algebra(v.q);
  const auto g = lie_deligne_split(l, v.mhs());
  out << describe(f) << "\n";
  const std::vector<std::pair<std::string, std::size_t>> dims = {
      {"g", l.dim()},          {"s_F", g.s_f.dim()},     {"s_W", g.s_w.dim()},
      {"s_inf", g.s_inf.dim()}, {"m_X", g.m_x.dim()}, {"s_F_perp", g.s_f_perp.dim()}};
  for (const auto& [name, d] : dims) {
    out << std::left << std::setw(10) << name << d << "\n";
    o.data["dims"][name] = d;
  }
  print_diamond(out, "Diamond(g)", g.diamond());
  o.data["diamond"] = diamond_json(g.diamond());
  const auto herm = hermitian_test(g);
  const auto smooth = smoothness_test(g);
  out << "hermitian: " << (herm ? "true" : "false") << (herm ? "" : " (" + herm.detail + ")") << "\n";
  out << "smooth: " << (smooth ? "true" : "false") << (smooth ? "" : " (" + smooth.detail + ")") << "\n";
  o.data["hermitian"] = herm.pass;
  o.data["smooth"] = smooth.pass;
  const auto closed = check_closed(l);
  const auto bracket = bracket_compatible(g);
  const auto cone = cone_contained(g, v.cone);
  o.checks.push_back({"lie", "closed", closed.pass, closed.detail});
  o.checks.push_back({"lie", "bracket", bracket.pass, bracket.detail});
  o.checks.push_back({"lie", "cone", cone.pass, cone.detail});
  if (herm) {
    o.checks.push_back({"lie", "hermitian implies smooth", smooth.pass, smooth.detail});
  }
  return o;
}

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("not a complex number: '" + s + "' (use re or re,im)");
  }
}

GaussScalar parse_gauss(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return GaussScalar(parse_rational(s));
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Outcome cmd_eval(const FixtureFile& f, const std::vector<std::string>& t, const std::vector<long>& branch,
                 const std::vector<std::string>& ell, std::ostream& out) {
  Outcome o;
  const auto s = orbit_spec(f);
  if (t.size() != s.r) throw UsageError("--t needs " + std::to_string(s.r) + " values");
  out << describe(f) << "\n";
  if (!ell.empty()) {
    if (ell.size() != s.k) throw UsageError("--ell needs " + std::to_string(s.k) + " values");
    ExactPoint p;
    for (const auto& x : t) p.t.push_back(parse_gauss(x));
    for (const auto& x : ell) p.ell.push_back(parse_gauss(x));
    const auto fr = eval_frame(s, p);
    out << "h_tilde = " << to_string(fr.h_tilde) << "\n";
    out << "Q(eta_0, conj eta_inf) = " << fr.q0inf.str() << "\n";
    o.data = Json{{"mode", "exact"}, {"h_tilde", to_string(fr.h_tilde)}, {"q0inf", gauss_json(fr.q0inf)}};
    Json eta = Json::array();
    for (std::size_t r = 0; r < fr.eta.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < fr.eta.cols(); ++c) row.push_back(gauss_json(fr.eta(r, c)));
      eta.push_back(std::move(row));
    }
    o.data["eta"] = std::move(eta);
    return o;
  }
  FloatPoint p;
  for (const auto& x : t) p.t.push_back(parse_complex(x));
  p.branch = branch;
  if (!branch.empty() && branch.size() != s.k) throw UsageError("--branch needs " + std::to_string(s.k) + " values");
  for (std::size_t j = 0; j < s.k; ++j) {
    if (p.t[j] == Complex(0)) throw UsageError("degenerating coordinate t_" + std::to_string(j + 1) + " must be nonzero");
  }
  const auto fr = eval_frame(s, p);
  out << std::setprecision(12);
  out << "h_tilde = " << fr.h_tilde << "\n";
  out << "Q(eta_0, conj eta_inf) = " << fr.q0inf << "\n";
  out << "eta =\n";
  for (Eigen::Index r = 0; r < fr.eta.rows(); ++r) {
    out << " ";
    for (Eigen::Index c = 0; c < fr.eta.cols(); ++c) out << " " << fr.eta(r, c);
    out << "\n";
  }
  o.data = Json{{"mode", "float"}, {"h_tilde", fr.h_tilde}, {"q0inf", complex_json(fr.q0inf)}};
  Json eta = Json::array();
  for (Eigen::Index r = 0; r < fr.eta.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < fr.eta.cols(); ++c) row.push_back(complex_json(fr.eta(r, c)));
    eta.push_back(std::move(row));
  }
  o.data["eta"] = std::move(eta);
  return o;
}

Outcome cmd_check(const FixtureFile& f, std::vector<std::string> suites, const SuiteOptions& opt, std::ostream& out) {
  Outcome o;
  out << describe(f) << "\n";
  if (suites.empty()) {
    for (const auto& name : suite_names()) {
      if (!suite_unavailable(f, name)) suites.push_back(name);
    }
  }
  for (const auto& suite : suites) {
    if (auto why = suite_unavailable(f, suite)) throw UsageError(*why);
  }
  for (const auto& suite : suites) {
    for (auto& r : run_suite(f, suite, opt)) o.checks.push_back(std::move(r));
  }
  return o;
}

IndexSet parse_set(const std::string& s, std::size_t k) {
  IndexSet out = 0;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t j = 0;
    try {
      j = std::stoul(item);
    } catch (const std::exception&) {
      throw UsageError("bad index set '" + s + "'");
    }
    if (j < 1 || j > k) throw UsageError("index " + item + " outside 1.." + std::to_string(k));
    out |= 1U << (j - 1);
  }
  return out;
}

Json limit_json(const LimitReport& rep) {
  Json samples = Json::array();
  for (const auto& smp : rep.samples) {
    samples.push_back(Json{{"radius", smp.radius}, {"angle", smp.angle}, {"value", complex_json(smp.value)},
                           {"deviation", smp.deviation}});
  }
  return Json{{"claim", rep.claim},
              {"target", complex_json(rep.target)},
              {"extrapolated", complex_json(rep.extrapolated)},
              {"max_deviation", rep.max_deviation},
              {"monotone", rep.monotone},
              {"tol", rep.tol},
              {"clipped", rep.clipped},
              {"pass", rep.pass},
              {"samples", std::move(samples)}};
}

struct ProbeArgs {
  std::string name;
  std::string set;
  std::string a;
  std::vector<std::string> at;
  std::vector<double> y = {10, 100, 1000, 10000};
  bool on_h = false;
};

Outcome cmd_probe(const FixtureFile& f, const ProbeArgs& args, double tol, std::ostream& out) {
  Outcome o;
  out << describe(f) << "\n";
  out << std::setprecision(6);
  if (args.name == "f-infinity") {
    const auto& v = f.fixture.v;
    const MixedHodge m = args.on_h ? h_structure(f) : v.mhs();
    const Mat n = args.on_h ? orbit_data(f).cone.interior()
                            : (v.cone.empty() ? Mat(v.dim(), v.dim()) : v.cone.interior());
    const auto rep = f_infinity_probe(m, n, args.y, tol);
    for (std::size_t i = 0; i < rep.y.size(); ++i) out << "y = " << rep.y[i] << "  gap " << rep.distance[i] << "\n";
    out << "extrapolated gap " << rep.extrapolated_distance << (rep.decreasing ? "" : " (not decreasing)") << "\n";
    o.checks.push_back({"probe", rep.claim, rep.pass, "extrapolated gap " + std::to_string(rep.extrapolated_distance)});
    o.data = Json{{"claim", rep.claim},         {"y", rep.y},     {"distance", rep.distance},
                  {"extrapolated_distance", rep.extrapolated_distance}, {"decreasing", rep.decreasing},
                  {"tol", rep.tol},             {"pass", rep.pass}};
    return o;
  }
  const auto s = orbit_spec(f);
  auto cfg = ProbeConfig::defaults(s.k);
  cfg.tol = tol;
  if (args.name == "radial") {
    std::vector<IndexSet> sets;
    if (args.set.empty()) {
      for (IndexSet i = 1; i <= s.full; ++i) sets.push_back(i);
    } else {
      sets.push_back(parse_set(args.set, s.k));
    }
    Json reps = Json::array();
    for (const auto i : sets) {
      const auto rep = radial_limit(s, i, cfg);
      out << rep.claim << ": target " << rep.target.real() << ", deviation " << rep.max_deviation << " -> "
          << (rep.pass ? "PASS" : "FAIL") << "\n";
      o.checks.push_back({"probe", rep.claim, rep.pass, "deviation " + std::to_string(rep.max_deviation)});
      reps.push_back(limit_json(rep));
    }
    o.data["reports"] = std::move(reps);
    return o;
  }
  if (args.name == "terms") {
    std::vector<std::vector<unsigned>> as;
    if (args.a.empty()) {
      for (unsigned d = 1; d <= 2; ++d) {
        for (auto& a : multi_indices(s.k, d)) as.push_back(std::move(a));
      }
    } else {
      std::vector<unsigned> a;
      std::stringstream ss(args.a);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          a.push_back(static_cast<unsigned>(std::stoul(item)));
        } catch (const std::exception&) {
          throw UsageError("bad multi-index '" + args.a + "'");
        }
      }
      if (a.size() != s.k) throw UsageError("--a needs " + std::to_string(s.k) + " entries");
      as.push_back(std::move(a));
    }
    Json reps = Json::array();
    for (const auto& a : as) {
      const auto rep = term_vanishing(s, a, cfg);
      out << rep.claim << ": deviation " << rep.max_deviation << " -> " << (rep.pass ? "PASS" : "FAIL") << "\n";
      o.checks.push_back({"probe", rep.claim, rep.pass, "deviation " + std::to_string(rep.max_deviation)});
      reps.push_back(limit_json(rep));
    }
    o.data["reports"] = std::move(reps);
    return o;
  }
  if (args.name == "levi") {
    const IndexSet i = args.set.empty() ? s.full : parse_set(args.set, s.k);
    auto base = default_base(s);
    if (!args.at.empty()) {
      if (args.at.size() != s.r) throw UsageError("--at needs " + std::to_string(s.r) + " values");
      for (std::size_t c = 0; c < s.r; ++c) base[c] = parse_complex(args.at[c]);
    }
    const auto rep = levi_probe(s, i, base, {}, cfg);
    out << rep.claim << ": value " << rep.value << ", eigenvalues";
    for (const double e : rep.eigenvalues) out << " " << e;
    out << " -> " << (rep.psh ? "PASS" : "FAIL") << "\n";
    o.checks.push_back({"probe", rep.claim, rep.psh, "min eigenvalue " + std::to_string(rep.min_eigenvalue)});
    o.data = Json{{"claim", rep.claim},
                  {"value", rep.value},
                  {"eigenvalues", rep.eigenvalues},
                  {"direction_values", rep.direction_values},
                  {"min_eigenvalue", rep.min_eigenvalue},
                  {"clipped_normal", rep.clipped_normal},
                  {"tol", rep.tol},
                  {"psh", rep.psh}};
    return o;
  }
  throw UsageError("unknown probe '" + args.name + "' (radial, terms, levi, f-infinity)");
}

void write_report(const std::string& path, const std::string& command, const FixtureFile& f, const Outcome& o,
                  bool pass) {
  Json checks = Json::array();
  for (const auto& c : o.checks) {
    checks.push_back(Json{{"suite", c.suite}, {"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
  }
  Json doc{{"version", kReportVersion}, {"command", command}, {"fixture", f.fixture.name},
           {"pass", pass},              {"checks", std::move(checks)}, {"data", o.data}};
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write report " + path);
  file << doc.dump(1) << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic Hodge-theoretic invariants of degenerating polarized Hodge structures", "hodge"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", common.file, "fixture file (JSON)")->required();
    sub->add_option("--report", common.report, "write a machine-readable report");
  };
  auto* diamond = app.add_subcommand("diamond", "Hodge diamonds of V, g and H, and m");
  add_common(diamond);
  auto* split = app.add_subcommand("split", "Deligne splitting with bases");
  add_common(split);
  bool split_h = false;
  split->add_flag("--induced", split_h, "split the induced H of a source fixture");
  auto* induce_cmd = app.add_subcommand("induce", "write the induced fixture on H");
  add_common(induce_cmd);
  std::string output;
  induce_cmd->add_option("-o,--output", output, "output file (default: stdout)");
  auto* markers = app.add_subcommand("markers", "m, lambda and the marker indices");
  add_common(markers);
  auto* lie = app.add_subcommand("lie", "subalgebra dimensions and hermitian/smoothness verdicts");
  add_common(lie);
  auto* eval = app.add_subcommand("eval", "evaluate h~ and the frame eta at a point");
  add_common(eval);
  std::vector<std::string> t_values;
  std::vector<long> branch;
  std::vector<std::string> ell;
  eval->add_option("--t", t_values, "coordinates t_1..t_r as re or re,im")->required();
  eval->add_option("--branch", branch, "branch of log t_j / 2 pi i per degenerating coordinate");
  eval->add_option("--ell", ell, "exact mode: formal values of l(t_j) as rationals");
  auto* check = app.add_subcommand("check", "run verification suites");
  add_common(check);
  std::vector<std::string> suites;
  SuiteOptions opt;
  check->add_option("--suite", suites, "symmetries, isotropy, bracket, monodromy, limits, lemma-m, psh")
      ->check(CLI::IsMember(suite_names()));
  check->add_option("--shift", opt.shifts, "branch shift per generator for the monodromy suite");
  check->add_option("--seed", opt.seed, "seed for sample points");
  check->add_option("--tol", opt.tol, "tolerance for numeric limits and eigenvalues");
  auto* probe = app.add_subcommand("probe", "numeric probes");
  ProbeArgs pargs;
  double probe_tol = 1e-6;
  probe->add_option("name", pargs.name, "radial, terms, levi or f-infinity")
      ->required()
      ->check(CLI::IsMember({"radial", "terms", "levi", "f-infinity"}));
  add_common(probe);
  probe->add_option("--set", pargs.set, "index set, e.g. 1,2");
  probe->add_option("--a", pargs.a, "multi-index for terms, e.g. 1,0");
  probe->add_option("--at", pargs.at, "base point for levi");
  probe->add_option("--y", pargs.y, "y values for f-infinity");
  probe->add_flag("--induced", pargs.on_h, "f-infinity on H instead of V");
  probe->add_option("--tol", probe_tol, "tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  FixtureFile f;
  try {
    f = read_fixture_file(common.file);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  try {
    Outcome o;
    if (command == "diamond") {
      o = cmd_diamond(f, out);
    } else if (command == "split") {
      o = cmd_split(f, split_h, out);
    } else if (command == "induce") {
      o = cmd_induce(f, output, out);
    } else if (command == "markers") {
      o = cmd_markers(f, out);
    } else if (command == "lie") {
      o = cmd_lie(f, out);
    } else if (command == "eval") {
      o = cmd_eval(f, t_values, branch, ell, out);
    } else if (command == "check") {
      o = cmd_check(f, suites, opt, out);
    } else {
      o = cmd_probe(f, pargs, probe_tol, out);
    }
    const CheckResult* first = nullptr;
    for (const auto& c : o.checks) {
      if (command == "check") out << (c.pass ? "PASS  " : "FAIL  ") << c.suite << "  " << c.claim << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
      if (!c.pass && first == nullptr) first = &c;
    }
    if (command == "check") {
      std::size_t failed = 0;
      for (const auto& c : o.checks) failed += c.pass ? 0 : 1;
      out << o.checks.size() << " checks, " << failed << " failed\n";
    }
    if (!common.report.empty()) write_report(common.report, command, f, o, first == nullptr);
    if (first != nullptr) {
      err << "first failure: " << first->claim << (first->detail.empty() ? "" : ": " + first->detail) << "\n";
      return 1;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hodge
