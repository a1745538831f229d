#pragma once

#include <optional>
#include <string>

#include "hodge/catalog.hpp"

namespace hodge {

inline constexpr const char* kFixtureVersion = "hodge-fixture/1";
inline constexpr const char* kReportVersion = "hodge-report/1";

/// Malformed fixture input. `where` is a JSON path such as "q[2][1]" or "line 4, column 7".
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Which space the Hodge data lives on: a source structure V (H is induced from it) or an
/// already induced, Tate-normalized H.
enum class FixtureSpace { source, induced };

struct MarkerOverride {
  std::size_t e0 = 0;
  std::size_t einf = 0;
  std::size_t ed = 0;
};

struct FixtureFile {
  FixtureSpace space = FixtureSpace::source;
  /// Hodge data, cone and zeta on the fixture's own space.
  Fixture fixture;
  std::optional<MarkerOverride> markers;
};

/// Parses a fixture document. Throws ParseError for malformed JSON or fields.
FixtureFile read_fixture(const std::string& text);
FixtureFile read_fixture_file(const std::string& path);

/// Canonical serialization: filtrations as reduced bases, zeta sorted by index set.
std::string write_fixture(const FixtureFile& f);

/// The induced H of a source fixture as an induced fixture (cone and zeta lifted).
FixtureFile induced_fixture(const FixtureFile& f);

/// Mixed Hodge data, cone and zeta on H for either kind of fixture.
OrbitData orbit_data(const FixtureFile& f);

/// Orbit spec on H honoring the marker override (validated by check_markers).
OrbitSpec orbit_spec(const FixtureFile& f);

/// Canonical "num/den" (or "n") rendering used in fixture files.
std::string rational_str(const Rational& r);

}  // namespace hodge
