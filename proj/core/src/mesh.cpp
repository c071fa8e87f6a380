#include "dglab/mesh.hpp"

#include <stdexcept>

#include "dglab/errors.hpp"

namespace dglab {

BoundaryKind parse_boundary_kind(const std::string& name) {
  if (name == "periodic") return BoundaryKind::periodic;
  if (name == "dirichlet_outflow") return BoundaryKind::dirichlet_outflow;
  throw ConfigError("unknown boundary kind '" + name + "'");
}

std::string boundary_kind_name(BoundaryKind kind) {
  return kind == BoundaryKind::periodic ? "periodic" : "dirichlet_outflow";
}

Mesh make_mesh(double x_left, double x_right, int n_elements,
               BoundaryKind boundary) {
  if (!(x_right > x_left)) {
    throw std::invalid_argument("make_mesh: domain must have x_right > x_left");
  }
  if (n_elements < 1) {
    throw std::invalid_argument("make_mesh: need at least one element");
  }
  Mesh mesh;
  mesh.x_left = x_left;
  mesh.x_right = x_right;
  mesh.n_elements = n_elements;
  mesh.boundary = boundary;
  return mesh;
}

}  // namespace dglab
