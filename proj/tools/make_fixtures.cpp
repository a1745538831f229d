// Writes every catalog fixture to <dir>/<name>.json.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hodge/fixture_io.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);
  for (const auto& name : hodge::catalog_names()) {
    hodge::FixtureFile f;
    f.fixture = hodge::catalog_fixture(name);
    std::ofstream out(dir / (name + ".json"));
    out << hodge::write_fixture(f);
    std::cout << (dir / (name + ".json")).string() << "\n";
  }
  return 0;
}
