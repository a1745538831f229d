#include "hodge/fixture_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hodge {

using Json = nlohmann::ordered_json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) throw ParseError(path.empty() ? "<root>" : path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(at(path, key), "missing field");
  return *it;
}

long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<long>();
}

std::size_t count(const Json& j, const std::string& path) {
  const long v = integer(j, path);
  if (v < 0) throw ParseError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(path, "expected a rational string \"num/den\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

GaussScalar scalar(const Json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError(path, "complex entries are [re, im]");
    return {rational(j[0], at(path, 0)), rational(j[1], at(path, 1))};
  }
  return GaussScalar(rational(j, path));
}

Json scalar_json(const GaussScalar& z) {
  if (z.is_real()) return rational_str(z.re());
  return Json::array({rational_str(z.re()), rational_str(z.im())});
}

Mat matrix(const Json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  array(j, path);
  if (j.size() != rows) {
    throw ParseError(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  }
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto rp = at(path, r);
    array(j[r], rp);
    if (j[r].size() != cols) {
      throw ParseError(rp, "expected " + std::to_string(cols) + " entries, found " + std::to_string(j[r].size()));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(j[r][c], at(rp, c));
  }
  return m;
}

Json matrix_json(const Mat& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

/// A subspace is stored as a list of spanning row vectors.
Subspace span(const Json& j, const std::string& path, std::size_t dim) {
  array(j, path);
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto vp = at(path, i);
    array(j[i], vp);
    if (j[i].size() != dim) throw ParseError(vp, "expected a vector of length " + std::to_string(dim));
    Vec v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = scalar(j[i][c], at(vp, c));
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, dim);
}

Json span_json(const Subspace& s) { return matrix_json(s.basis()); }

template <class Filtration>
Filtration filtration(const Json& j, const std::string& path, std::size_t dim) {
  const long lo = integer(field(j, path, "lowest"), at(path, "lowest"));
  const auto sp = at(path, "steps");
  const Json& steps = array(field(j, path, "steps"), sp);
  std::vector<Subspace> subs;
  for (std::size_t i = 0; i < steps.size(); ++i) subs.push_back(span(steps[i], at(sp, i), dim));
  try {
    return Filtration(dim, static_cast<int>(lo), std::move(subs));
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

template <class Filtration>
Json filtration_json(const Filtration& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) steps.push_back(span_json(s));
  return Json{{"lowest", f.lowest()}, {"steps", std::move(steps)}};
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string rational_str(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

FixtureFile read_fixture(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
  FixtureFile out;
  const auto& version = field(doc, "", "version");
  if (!version.is_string() || version.get<std::string>() != kFixtureVersion) {
    throw ParseError("version", std::string("expected \"") + kFixtureVersion + "\"");
  }
  const auto& name = field(doc, "", "name");
  if (!name.is_string()) throw ParseError("name", "expected a string");
  out.fixture.name = name.get<std::string>();
  if (const auto it = doc.find("description"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("description", "expected a string");
    out.fixture.description = it->get<std::string>();
  }
  const auto& space = field(doc, "", "space");
  if (space == "source") {
    out.space = FixtureSpace::source;
  } else if (space == "induced") {
    out.space = FixtureSpace::induced;
  } else {
    throw ParseError("space", "expected \"source\" or \"induced\"");
  }

  const std::size_t dim = count(field(doc, "", "dim"), "dim");
  if (dim == 0) throw ParseError("dim", "must be positive");
  auto& v = out.fixture.v;
  v.weight = static_cast<int>(integer(field(doc, "", "weight"), "weight"));
  v.q = matrix(field(doc, "", "q"), "q", dim, dim);
  const Mat sym = (v.weight % 2 == 0) ? v.q : -v.q;
  if (v.q.transpose() != sym) throw ParseError("q", "Q must be (-1)^weight-symmetric");
  v.f = filtration<DecreasingFiltration>(field(doc, "", "f"), "f", dim);
  if (const auto it = doc.find("w"); it != doc.end()) v.w = filtration<IncreasingFiltration>(*it, "w", dim);
  if (out.space == FixtureSpace::induced && !v.w) throw ParseError("w", "induced fixtures carry W explicitly");

  if (const auto it = doc.find("cone"); it != doc.end()) {
    array(*it, "cone");
    for (std::size_t j = 0; j < it->size(); ++j) v.cone.generators.push_back(matrix((*it)[j], at("cone", j), dim, dim));
  }
  if (v.cone.size() > 16) throw ParseError("cone", "at most 16 generators");
  const std::size_t k = v.cone.size();
  if (const auto it = doc.find("extra"); it != doc.end()) out.fixture.extra = count(*it, "extra");
  const std::size_t r = k + out.fixture.extra;

  if (const auto it = doc.find("zeta"); it != doc.end()) {
    array(*it, "zeta");
    for (std::size_t e = 0; e < it->size(); ++e) {
      const auto ep = at("zeta", e);
      const auto& entry = (*it)[e];
      const auto sp = at(ep, "set");
      const auto& set_json = array(field(entry, ep, "set"), sp);
      IndexSet set = 0;
      for (std::size_t i = 0; i < set_json.size(); ++i) {
        const long j = integer(set_json[i], at(sp, i));
        if (j < 1 || static_cast<std::size_t>(j) > k) throw ParseError(at(sp, i), "generator index out of range 1.." + std::to_string(k));
        set |= 1U << static_cast<unsigned>(j - 1);
      }
      if (out.fixture.zeta.count(set) != 0U) throw ParseError(sp, "duplicate index set");
      MatPoly poly;
      const auto tp = at(ep, "terms");
      const auto& terms = array(field(entry, ep, "terms"), tp);
      for (std::size_t ti = 0; ti < terms.size(); ++ti) {
        const auto p = at(tp, ti);
        const auto xp = at(p, "exps");
        const auto& exps = array(field(terms[ti], p, "exps"), xp);
        if (exps.size() != r) throw ParseError(xp, "expected " + std::to_string(r) + " exponents (cone size + extra)");
        Monomial mono;
        for (std::size_t i = 0; i < r; ++i) mono.exps.push_back(static_cast<unsigned>(count(exps[i], at(xp, i))));
        mono.coeff = matrix(field(terms[ti], p, "coeff"), at(p, "coeff"), dim, dim);
        poly.terms.push_back(std::move(mono));
      }
      out.fixture.zeta.emplace(set, std::move(poly));
    }
  }
  if (const auto it = doc.find("markers"); it != doc.end()) {
    MarkerOverride mk;
    mk.e0 = count(field(*it, "markers", "e0"), "markers.e0");
    mk.einf = count(field(*it, "markers", "einf"), "markers.einf");
    mk.ed = count(field(*it, "markers", "ed"), "markers.ed");
    out.markers = mk;
  }
  return out;
}

FixtureFile read_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return read_fixture(ss.str());
}

std::string write_fixture(const FixtureFile& f) {
  const auto& v = f.fixture.v;
  Json doc;
  doc["version"] = kFixtureVersion;
  doc["name"] = f.fixture.name;
  doc["description"] = f.fixture.description;
  doc["space"] = f.space == FixtureSpace::source ? "source" : "induced";
  doc["dim"] = v.dim();
  doc["weight"] = v.weight;
  doc["q"] = matrix_json(v.q);
  doc["f"] = filtration_json(v.f);
  if (v.w) doc["w"] = filtration_json(*v.w);
  Json cone = Json::array();
  for (const auto& n : v.cone.generators) cone.push_back(matrix_json(n));
  doc["cone"] = std::move(cone);
  doc["extra"] = f.fixture.extra;
  Json zeta = Json::array();
  for (const auto& [set, poly] : f.fixture.zeta) {
    Json members = Json::array();
    for (unsigned j = 0; j < 32; ++j) {
      if ((set >> j) & 1U) members.push_back(j + 1);
    }
    Json terms = Json::array();
    for (const auto& t : poly.terms) terms.push_back(Json{{"exps", t.exps}, {"coeff", matrix_json(t.coeff)}});
    zeta.push_back(Json{{"set", std::move(members)}, {"terms", std::move(terms)}});
  }
  doc["zeta"] = std::move(zeta);
  if (f.markers) doc["markers"] = Json{{"e0", f.markers->e0}, {"einf", f.markers->einf}, {"ed", f.markers->ed}};
  return doc.dump(1) + "\n";
}

FixtureFile induced_fixture(const FixtureFile& f) {
  if (f.space == FixtureSpace::induced) return f;
  const auto data = orbit_data(f);
  FixtureFile out;
  out.space = FixtureSpace::induced;
  out.fixture.name = f.fixture.name + "-H";
  out.fixture.description = "induced from " + f.fixture.name;
  out.fixture.v = PureHodgeData{data.h.weight, data.h.q, data.h.f, data.h.w, data.cone};
  out.fixture.extra = data.extra;
  out.fixture.zeta = data.zeta;
  out.markers = f.markers;
  return out;
}

OrbitData orbit_data(const FixtureFile& f) {
  if (f.space == FixtureSpace::source) return orbit_data(f.fixture);
  const auto& v = f.fixture.v;
  return OrbitData{v.mhs(), v.cone, f.fixture.extra, f.fixture.zeta};
}

OrbitSpec orbit_spec(const FixtureFile& f) {
  auto s = make_orbit_spec(orbit_data(f));
  if (f.markers) {
    const auto& o = *f.markers;
    if (o.e0 != s.markers.e0 || o.einf != s.markers.einf || o.ed != s.markers.ed) {
      throw Error("marker override (" + std::to_string(o.e0) + ", " + std::to_string(o.einf) + ", " +
                  std::to_string(o.ed) + ") disagrees with the adapted frame (" + std::to_string(s.markers.e0) +
                  ", " + std::to_string(s.markers.einf) + ", " + std::to_string(s.markers.ed) + ")");
    }
  }
  return s;
}

}  // namespace hodge
