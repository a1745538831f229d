#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodge/induced.hpp"
#include "hodge/orbit.hpp"

namespace hodge {

/// A named test structure: Hodge data on V, plus (for degenerations) the holomorphic part of
/// a local period map written on V. H and the orbit on H are derived from it.
struct Fixture {
  std::string name;
  std::string description;
  PureHodgeData v;
  std::size_t extra = 0;
  /// f_I on V, keyed by index set; variables are t_1..t_k (degenerating) then the extras.
  std::map<IndexSet, MatPoly> zeta;
};

/// H = Tate-normalized induced structure, with the cone and the f_I lifted to H.
OrbitData orbit_data(const Fixture& fx);

/// Elements of s_F_perp on V that commute with N_j for j in `centralize` and whose
/// bidegrees satisfy `pred`.
std::vector<Mat> zeta_candidates(const PureHodgeData& v, IndexSet centralize, bool (*pred)(const BiDegree&));

/// Fills fx.zeta with deterministic sample data: f_J has a constant part in W_{-1}(g) and one
/// linear term per extra coordinate, every other f_I is a constant. All coefficients are scaled
/// by `scale`.
void populate_zeta(Fixture& fx, const Rational& scale);

std::vector<std::string> catalog_names();
/// Throws Error for an unknown name.
Fixture catalog_fixture(const std::string& name);

}  // namespace hodge
