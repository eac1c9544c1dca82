#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cmcb/estimates.hpp"

namespace cmcb::mesh {

using Vertices = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;
using Faces = Eigen::Matrix<int, Eigen::Dynamic, 3, Eigen::RowMajor>;

/// Oriented triangle mesh in flat space. The constructor rejects out-of-range
/// or unreferenced vertices, repeated corners, faces of area below
/// 1e-12 * (bounding-box diagonal)^2, edges shared by more than two faces and
/// inconsistent winding across interior edges.
class TriangulatedSurface {
 public:
  TriangulatedSurface(Vertices vertices, Faces faces);

  const Vertices& vertices() const { return V_; }
  const Faces& faces() const { return F_; }
  Eigen::Index num_vertices() const { return V_.rows(); }
  Eigen::Index num_faces() const { return F_.rows(); }

  /// Undirected edges (i < j) with the faces on each side (second is -1 on the boundary).
  struct Edge {
    int a, b;
    int face0, face1;
  };
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<bool>& boundary_vertex() const { return boundary_vertex_; }
  bool closed() const { return boundary_edges_ == 0; }
  std::size_t boundary_edge_count() const { return boundary_edges_; }
  /// Connected component id per vertex.
  const std::vector<int>& component() const { return component_; }
  int component_count() const { return components_; }

  double bounding_box_diagonal() const;
  Eigen::Vector3d face_normal(Eigen::Index f) const;  ///< unnormalized, length = 2 area
  double face_area(Eigen::Index f) const;

 private:
  Vertices V_;
  Faces F_;
  std::vector<Edge> edges_;
  std::vector<bool> boundary_vertex_;
  std::size_t boundary_edges_ = 0;
  std::vector<int> component_;
  int components_ = 0;
};

double surface_area(const TriangulatedSurface& mesh);

struct EulerInfo {
  long long V = 0, E = 0, F = 0;
  long long chi = 0;
  long long boundary_loops = 0;
  int components = 0;
  long long genus = 0;  ///< summed over components: (2 - chi_c - b_c) / 2
};

/// Throws InputError when a component has 2 - chi - b odd.
EulerInfo euler_genus(const TriangulatedSurface& mesh);

/// Sum over vertices of 2 pi (pi on the boundary) minus incident angles.
double angle_defect_total(const TriangulatedSurface& mesh);

/// Shortest-path diameter over an edge graph refined once per face (edge
/// midpoints added and all six points of each face joined by straight
/// segments). Every segment lies on the mesh, so the estimate is an upper
/// bound for the polyhedral diameter. Throws InputError when disconnected.
double intrinsic_diameter(const TriangulatedSurface& mesh);

/// Largest Euclidean distance between two vertices.
double extrinsic_diameter(const TriangulatedSurface& mesh);

/// Area-weighted unit vertex normals following the face winding.
Vertices vertex_normals(const TriangulatedSurface& mesh);

struct Curvature {
  Eigen::VectorXd k1, k2;      ///< principal curvatures, k1 <= k2
  Eigen::VectorXd A2;          ///< |A|^2 = k1^2 + k2^2
  Eigen::VectorXd H;           ///< (k1 + k2) / 2; the unit sphere with outward winding has H = -1
  std::vector<int> flagged;    ///< vertices whose neighborhood was too small or flat to fit
};

/// Least-squares fit over the 2-ring of each vertex of the implicit quadric
/// z = a x^2 + b xy + c y^2 + d x + e y + f + p z^2 + q xz + w yz in the local
/// normal frame; curvatures of the level set at the vertex. Spheres and
/// cylinders are reproduced exactly.
Curvature second_fundamental_form(const TriangulatedSurface& mesh);

enum class Boundary { closed, dirichlet };

struct JacobiSpectrum {
  Eigen::VectorXd eigenvalues;  ///< ascending
  long long index = 0;
  long long nullity = 0;
  double tolerance = 0;  ///< 1e-6 times the spectral radius
};

/// Generalized eigenproblem (S - diag(m * V)) phi = mu diag(m) phi with
/// cotangent stiffness S, lumped masses m (one third of the incident face
/// areas) and potential V = |A|^2 unless given. Dirichlet drops the boundary
/// vertices.
JacobiSpectrum jacobi_spectrum(const TriangulatedSurface& mesh, Boundary boundary,
                               const std::optional<Eigen::VectorXd>& potential = std::nullopt);

struct MeshSummary {
  SurfaceSummary summary;
  EulerInfo euler;
  double angle_defect = 0;
  double H_mean = 0;       ///< mean of |H|
  double H_rel_std = 0;    ///< stddev(|H|) / mean
  bool non_cmc = false;    ///< H_rel_std above 2 %
  JacobiSpectrum spectrum;
  std::vector<std::string> warnings;
};

/// Requires a closed, connected mesh.
MeshSummary summarize(const TriangulatedSurface& mesh);

std::string to_json(const MeshSummary& s, int indent = 2);

// IO. Warnings collect ignored records.
TriangulatedSurface read_off(std::istream& in, std::vector<std::string>* warnings = nullptr);
TriangulatedSurface read_obj(std::istream& in, std::vector<std::string>* warnings = nullptr);
/// Dispatches on the extension (.off / .obj).
TriangulatedSurface read_mesh(const std::string& path, std::vector<std::string>* warnings = nullptr);
void write_off(std::ostream& out, const TriangulatedSurface& mesh);
void write_obj(std::ostream& out, const TriangulatedSurface& mesh);

// Generators.
TriangulatedSurface icosahedron(double radius = 1);
/// Loop-style midpoint subdivision of the icosahedron, projected to the sphere.
TriangulatedSurface icosphere(int level, double radius = 1);
TriangulatedSurface torus(double R, double r, int nu, int nv);
/// Open cylinder of the given radius around the z axis.
TriangulatedSurface cylinder(double radius, double height, int around, int along);
/// Disk in the xy plane: `rings` concentric rings, ring i has 6 i vertices.
TriangulatedSurface flat_disk(double radius, int rings);
/// [0, size]^2 split into n x n cells of two triangles.
TriangulatedSurface flat_square(int n, double size = 1);
TriangulatedSurface single_triangle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                    const Eigen::Vector3d& c);
/// Boundary of a 3 x 5 x 1 slab of unit cubes with the cubes at (1, 1) and
/// (1, 3) removed: a closed genus-2 surface.
TriangulatedSurface genus2_polycube();

/// Applies x -> s R x + t to every vertex.
TriangulatedSurface transformed(const TriangulatedSurface& mesh, const Eigen::Matrix3d& R,
                                const Eigen::Vector3d& t, double s = 1);

}  // namespace cmcb::mesh
