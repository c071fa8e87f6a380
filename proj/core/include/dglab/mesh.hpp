#ifndef DGLAB_MESH_HPP
#define DGLAB_MESH_HPP

#include <Eigen/Dense>
#include <string>

namespace dglab {

enum class BoundaryKind { periodic, dirichlet_outflow };

BoundaryKind parse_boundary_kind(const std::string& name);
std::string boundary_kind_name(BoundaryKind kind);

/// Uniform 1D mesh of [x_left, x_right] with n elements. For Dirichlet
/// boundaries the ghost states (one conserved-variable vector per side) are
/// frozen copies of the initial boundary data; element interfaces see them
/// as the exterior trace.
struct Mesh {
  double x_left = 0.0;
  double x_right = 1.0;
  int n_elements = 1;
  BoundaryKind boundary = BoundaryKind::periodic;
  Eigen::VectorXd ghost_left;   // used only for dirichlet_outflow
  Eigen::VectorXd ghost_right;

  double h() const { return (x_right - x_left) / n_elements; }
  double element_left(int i) const { return x_left + i * h(); }
  double element_center(int i) const { return x_left + (i + 0.5) * h(); }

  /// Map reference coordinate r in [-1,1] to physical x in element i.
  double to_physical(int i, double r) const {
    return element_left(i) + 0.5 * (r + 1.0) * h();
  }
};

Mesh make_mesh(double x_left, double x_right, int n_elements,
               BoundaryKind boundary);

}  // namespace dglab

#endif
