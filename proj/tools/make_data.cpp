// Regenerates the bundled meshes in data/.
#include <fstream>
#include <iostream>
#include <string>

#include "cmcb/mesh.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  auto save = [&](const std::string& name, const cmcb::mesh::TriangulatedSurface& m) {
    std::ofstream out(dir + "/" + name);
    out.precision(17);
    cmcb::mesh::write_off(out, m);
    std::cout << name << ": " << m.num_vertices() << " vertices\n";
  };
  save("unit_sphere.off", cmcb::mesh::icosphere(3));
  save("torus.off", cmcb::mesh::torus(2, 0.75, 40, 20));
  save("genus2.off", cmcb::mesh::genus2_polycube());
}
