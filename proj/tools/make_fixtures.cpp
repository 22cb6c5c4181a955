// Writes the fixture directory from the constructors in cubical/fixtures.hpp.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cubical/fixtures.hpp"
#include "cubical/io.hpp"

using namespace cubical;
namespace fx = cubical::fixtures;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <directory>\n";
    return 2;
  }
  fs::path dir = argv[1];
  fs::create_directories(dir / "pathology");
  auto write = [&](const fs::path& rel, const io::json& j) {
    std::ofstream(dir / rel) << io::dump(j) << "\n";
    std::cout << (dir / rel).string() << "\n";
  };
  auto instance = [](const PartialLocalIsometry& phi) { return io::to_json(io::Instance{phi.ambient, {phi}}); };

  write("pathology/self_crossing.json", io::to_json(*fx::self_crossing_square()));
  write("pathology/one_sided.json", io::to_json(*fx::mobius_square()));
  write("pathology/self_osculation.json", io::to_json(*fx::self_osculating_square()));
  write("pathology/inter_osculation.json", io::to_json(*fx::inter_osculating_strip()));
  write("square.json", io::to_json(*fx::grid(1, 1)));
  write("torus.json", io::to_json(*fx::square_torus()));
  write("mobius.json", io::to_json(*fx::band(3, true)));
  write("annulus.json", io::to_json(*fx::band(3, false)));
  write("strip.json", io::to_json(*fx::grid(3, 1)));
  write("edge_ab.json", instance(fx::edge_ab_shift()));
  write("special_square.json", instance(fx::square_side_shift()));
  write("cycle4.json", instance(fx::cycle_edge_shift(4)));
  write("square_tree.json", io::to_json(fx::square_tree()));
  write("hall.json", {{"schema", "product.v1"}, {"rank", 2}, {"products", {{"b", {"a"}, "1"}}}});
  return 0;
}
