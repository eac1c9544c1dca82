#include "cmcb/mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include <Eigen/Dense>
#include <json.hpp>

#include "cmcb/json_util.hpp"
#include "cmcb/parse.hpp"

namespace cmcb::mesh {

namespace {

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Eigen::Vector3d row(const Vertices& V, int i) { return V.row(i).transpose(); }

// Interior angle at corner c of face f.
double corner_angle(const Vertices& V, const Faces& F, Eigen::Index f, int c) {
  const Eigen::Vector3d p = row(V, F(f, c));
  const Eigen::Vector3d u = row(V, F(f, (c + 1) % 3)) - p;
  const Eigen::Vector3d w = row(V, F(f, (c + 2) % 3)) - p;
  return std::atan2(u.cross(w).norm(), u.dot(w));
}

}  // namespace

TriangulatedSurface::TriangulatedSurface(Vertices vertices, Faces faces)
    : V_(std::move(vertices)), F_(std::move(faces)) {
  const Eigen::Index n = V_.rows();
  if (n == 0 || F_.rows() == 0) throw InputError("mesh: no vertices or no faces");
  if (!V_.allFinite()) throw InputError("mesh: non-finite vertex coordinate");

  std::vector<bool> used(std::size_t(n), false);
  for (Eigen::Index f = 0; f < F_.rows(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const int v = F_(f, c);
      if (v < 0 || v >= n) {
        throw InputError("mesh: face " + std::to_string(f) + " references vertex " +
                         std::to_string(v) + " out of range");
      }
      used[std::size_t(v)] = true;
    }
    if (F_(f, 0) == F_(f, 1) || F_(f, 1) == F_(f, 2) || F_(f, 0) == F_(f, 2)) {
      throw InputError("mesh: face " + std::to_string(f) + " repeats a vertex");
    }
  }
  for (Eigen::Index v = 0; v < n; ++v) {
    if (!used[std::size_t(v)]) {
      throw InputError("mesh: vertex " + std::to_string(v) + " is not used by any face");
    }
  }

  const double diag = bounding_box_diagonal();
  for (Eigen::Index f = 0; f < F_.rows(); ++f) {
    if (!(face_area(f) >= 1e-12 * diag * diag)) {
      throw InputError("mesh: face " + std::to_string(f) + " is degenerate");
    }
  }

  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(std::size_t(F_.rows()) * 3);
  for (Eigen::Index f = 0; f < F_.rows(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const int a = F_(f, c);
      const int b = F_(f, (c + 1) % 3);
      auto [it, inserted] = index.try_emplace(edge_key(a, b), edges_.size());
      if (inserted) {
        edges_.push_back({a, b, int(f), -1});
        continue;
      }
      Edge& e = edges_[it->second];
      if (e.face1 != -1) {
        throw InputError("mesh: edge (" + std::to_string(std::min(a, b)) + ", " +
                         std::to_string(std::max(a, b)) + ") is shared by more than two faces");
      }
      if (e.a == a) {
        throw InputError("mesh: inconsistent winding across edge (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")");
      }
      e.face1 = int(f);
    }
  }

  boundary_vertex_.assign(std::size_t(n), false);
  UnionFind uf{std::size_t(n)};
  for (Edge& e : edges_) {
    if (e.face1 == -1) {
      ++boundary_edges_;
      boundary_vertex_[std::size_t(e.a)] = boundary_vertex_[std::size_t(e.b)] = true;
    }
    uf.unite(e.a, e.b);
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  component_.assign(std::size_t(n), -1);
  std::unordered_map<int, int> ids;
  for (Eigen::Index v = 0; v < n; ++v) {
    auto [it, inserted] = ids.try_emplace(uf.find(int(v)), components_);
    if (inserted) ++components_;
    component_[std::size_t(v)] = it->second;
  }
}

double TriangulatedSurface::bounding_box_diagonal() const {
  return (V_.colwise().maxCoeff() - V_.colwise().minCoeff()).norm();
}

Eigen::Vector3d TriangulatedSurface::face_normal(Eigen::Index f) const {
  const Eigen::Vector3d a = row(V_, F_(f, 0));
  return (row(V_, F_(f, 1)) - a).cross(row(V_, F_(f, 2)) - a);
}

double TriangulatedSurface::face_area(Eigen::Index f) const { return face_normal(f).norm() / 2; }

double surface_area(const TriangulatedSurface& mesh) {
  double sum = 0;
  for (Eigen::Index f = 0; f < mesh.num_faces(); ++f) sum += mesh.face_area(f);
  return sum;
}

EulerInfo euler_genus(const TriangulatedSurface& mesh) {
  EulerInfo info;
  info.components = mesh.component_count();
  const std::size_t nc = std::size_t(info.components);
  std::vector<long long> V(nc, 0), E(nc, 0), F(nc, 0), B(nc, 0);
  const auto& comp = mesh.component();
  for (int c : comp) ++V[std::size_t(c)];
  for (Eigen::Index f = 0; f < mesh.num_faces(); ++f) ++F[std::size_t(comp[std::size_t(mesh.faces()(f, 0))])];

  UnionFind loops{std::size_t(mesh.num_vertices())};
  for (const auto& e : mesh.edges()) {
    ++E[std::size_t(comp[std::size_t(e.a)])];
    if (e.face1 == -1) loops.unite(e.a, e.b);
  }
  std::vector<bool> seen(std::size_t(mesh.num_vertices()), false);
  for (Eigen::Index v = 0; v < mesh.num_vertices(); ++v) {
    if (!mesh.boundary_vertex()[std::size_t(v)]) continue;
    const int root = loops.find(int(v));
    if (!seen[std::size_t(root)]) {
      seen[std::size_t(root)] = true;
      ++B[std::size_t(comp[std::size_t(v)])];
    }
  }

  for (std::size_t c = 0; c < nc; ++c) {
    const long long chi = V[c] - E[c] + F[c];
    const long long twice_genus = 2 - chi - B[c];
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw InputError("mesh: component " + std::to_string(c) + " has Euler characteristic " +
                       std::to_string(chi) + " with " + std::to_string(B[c]) +
                       " boundary loops, impossible for an orientable surface");
    }
    info.V += V[c];
    info.E += E[c];
    info.F += F[c];
    info.boundary_loops += B[c];
    info.genus += twice_genus / 2;
  }
  info.chi = info.V - info.E + info.F;
  return info;
}

double angle_defect_total(const TriangulatedSurface& mesh) {
  const auto& V = mesh.vertices();
  const auto& F = mesh.faces();
  double total = 0;
  for (Eigen::Index v = 0; v < mesh.num_vertices(); ++v) {
    total += mesh.boundary_vertex()[std::size_t(v)] ? kPi : 2 * kPi;
  }
  for (Eigen::Index f = 0; f < mesh.num_faces(); ++f) {
    for (int c = 0; c < 3; ++c) total -= corner_angle(V, F, f, c);
  }
  return total;
}

double intrinsic_diameter(const TriangulatedSurface& mesh) {
  if (mesh.component_count() != 1) {
    std::vector<int> sizes(std::size_t(mesh.component_count()), 0);
    for (int c : mesh.component()) ++sizes[std::size_t(c)];
    std::ostringstream os;
    os << "mesh: intrinsic diameter needs a connected mesh; component sizes:";
    for (int s : sizes) os << ' ' << s;
    throw InputError(os.str());
  }
  const auto& V = mesh.vertices();
  const auto& F = mesh.faces();
  const int n = int(mesh.num_vertices());

  std::unordered_map<std::uint64_t, int> midpoint;
  std::vector<Eigen::Vector3d> pos;
  pos.reserve(std::size_t(n) + mesh.edges().size());
  for (int v = 0; v < n; ++v) pos.push_back(row(V, v));
  for (const auto& e : mesh.edges()) {
    midpoint[edge_key(e.a, e.b)] = int(pos.size());
    pos.push_back((row(V, e.a) + row(V, e.b)) / 2);
  }

  // CSR adjacency; each face joins its three corners and three edge midpoints pairwise
  const int N = int(pos.size());
  std::vector<std::array<int, 6>> groups(std::size_t(mesh.num_faces()));
  std::vector<int> degree(std::size_t(N), 0);
  for (Eigen::Index f = 0; f < mesh.num_faces(); ++f) {
    auto& g = groups[std::size_t(f)];
    for (int c = 0; c < 3; ++c) {
      g[std::size_t(c)] = F(f, c);
      g[std::size_t(c + 3)] = midpoint.at(edge_key(F(f, c), F(f, (c + 1) % 3)));
    }
    for (int p : g) degree[std::size_t(p)] += 5;
  }
  std::vector<int> start(std::size_t(N) + 1, 0);
  for (int i = 0; i < N; ++i) start[std::size_t(i) + 1] = start[std::size_t(i)] + degree[std::size_t(i)];
  std::vector<int> target(std::size_t(start.back()));
  std::vector<double> weight(std::size_t(start.back()));
  std::vector<int> fill(start.begin(), start.end() - 1);
  for (const auto& g : groups) {
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        if (i == j) continue;
        const int a = g[std::size_t(i)];
        const int b = g[std::size_t(j)];
        const std::size_t slot = std::size_t(fill[std::size_t(a)]++);
        target[slot] = b;
        weight[slot] = (pos[std::size_t(a)] - pos[std::size_t(b)]).norm();
      }
    }
  }

  double best = 0;
  std::vector<double> dist(static_cast<std::size_t>(N));
  using Item = std::pair<double, int>;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[std::size_t(s)] = 0;
    heap.push({0, s});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[std::size_t(u)]) continue;
      for (int k = start[std::size_t(u)]; k < start[std::size_t(u) + 1]; ++k) {
        const double nd = d + weight[std::size_t(k)];
        const int t = target[std::size_t(k)];
        if (nd < dist[std::size_t(t)]) {
          dist[std::size_t(t)] = nd;
          heap.push({nd, t});
        }
      }
    }
    best = std::max(best, *std::max_element(dist.begin(), dist.begin() + n));
  }
  return best;
}

double extrinsic_diameter(const TriangulatedSurface& mesh) {
  const auto& V = mesh.vertices();
  double best = 0;
  for (Eigen::Index i = 0; i < V.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < V.rows(); ++j) {
      best = std::max(best, (V.row(i) - V.row(j)).squaredNorm());
    }
  }
  return std::sqrt(best);
}

Vertices vertex_normals(const TriangulatedSurface& mesh) {
  Vertices N = Vertices::Zero(mesh.num_vertices(), 3);
  for (Eigen::Index f = 0; f < mesh.num_faces(); ++f) {
    const Eigen::RowVector3d n = mesh.face_normal(f).transpose();
    for (int c = 0; c < 3; ++c) N.row(mesh.faces()(f, c)) += n;
  }
  N.rowwise().normalize();
  return N;
}

namespace {

std::vector<std::vector<int>> one_rings(const TriangulatedSurface& mesh) {
  std::vector<std::vector<int>> ring(std::size_t(mesh.num_vertices()));
  for (const auto& e : mesh.edges()) {
    ring[std::size_t(e.a)].push_back(e.b);
    ring[std::size_t(e.b)].push_back(e.a);
  }
  return ring;
}

}  // namespace

Curvature second_fundamental_form(const TriangulatedSurface& mesh) {
  const auto& V = mesh.vertices();
  const Eigen::Index n = mesh.num_vertices();
  const Vertices normals = vertex_normals(mesh);
  const auto ring = one_rings(mesh);

  Curvature out;
  out.k1 = Eigen::VectorXd::Zero(n);
  out.k2 = Eigen::VectorXd::Zero(n);
  std::vector<int> mark(std::size_t(n), -1);
  std::vector<int> nbhd;
  for (Eigen::Index v = 0; v < n; ++v) {
    nbhd.clear();
    nbhd.push_back(int(v));
    mark[std::size_t(v)] = int(v);
    for (int a : ring[std::size_t(v)]) {
      if (mark[std::size_t(a)] != int(v)) {
        mark[std::size_t(a)] = int(v);
        nbhd.push_back(a);
      }
      for (int b : ring[std::size_t(a)]) {
        if (mark[std::size_t(b)] != int(v)) {
          mark[std::size_t(b)] = int(v);
          nbhd.push_back(b);
        }
      }
    }

    const Eigen::Vector3d nz = normals.row(v).transpose();
    Eigen::Vector3d tx = nz.unitOrthogonal();
    const Eigen::Vector3d ty = nz.cross(tx);
    const Eigen::Vector3d p0 = row(V, int(v));
    double rho = 0;
    for (int j : nbhd) rho = std::max(rho, (row(V, j) - p0).norm());

    const Eigen::Index m = Eigen::Index(nbhd.size());
    Eigen::MatrixXd X(m, 9);
    Eigen::VectorXd rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Eigen::Vector3d d = (row(V, nbhd[std::size_t(i)]) - p0) / rho;
      const double x = d.dot(tx), y = d.dot(ty), z = d.dot(nz);
      X.row(i) << x * x, x * y, y * y, x, y, 1, z * z, x * z, y * z;
      rhs(i) = z;
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    cod.setThreshold(1e-10);
    cod.compute(X);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> planar(X.leftCols(6));
    planar.setThreshold(1e-10);
    if (m < 6 || planar.rank() < 6) {
      out.flagged.push_back(int(v));
      continue;
    }
    const Eigen::VectorXd c = cod.solve(rhs);
    const double a = c(0), b = c(1), cc = c(2), d = c(3), e = c(4);
    const double p = c(6), q = c(7), w = c(8);

    // level set of F = z - quadric, at the origin
    const Eigen::Vector3d grad(-d, -e, 1);
    Eigen::Matrix3d hess;
    hess << 2 * a, b, q, b, 2 * cc, w, q, w, 2 * p;
    hess = -hess;
    const Eigen::Vector3d nn = grad.normalized();
    Eigen::Matrix<double, 3, 2> T;
    T.col(0) = nn.unitOrthogonal();
    T.col(1) = nn.cross(T.col(0));
    const Eigen::Matrix2d shape = -(T.transpose() * hess * T) / grad.norm();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(shape);
    out.k1(v) = es.eigenvalues()(0) / rho;
    out.k2(v) = es.eigenvalues()(1) / rho;
  }
  out.A2 = out.k1.array().square() + out.k2.array().square();
  out.H = (out.k1 + out.k2) / 2;
  return out;
}

JacobiSpectrum jacobi_spectrum(const TriangulatedSurface& mesh, Boundary boundary,
                               const std::optional<Eigen::VectorXd>& potential) {
  const auto& V = mesh.vertices();
  const auto& F = mesh.faces();
  const Eigen::Index n = mesh.num_vertices();
  Eigen::VectorXd pot;
  if (potential) {
    if (potential->size() != n) throw InputError("jacobi_spectrum: potential has the wrong size");
    pot = *potential;
  } else {
    pot = second_fundamental_form(mesh).A2;
  }

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(n);
  for (Eigen::Index f = 0; f < mesh.num_faces(); ++f) {
    const double third = mesh.face_area(f) / 3;
    for (int c = 0; c < 3; ++c) {
      const int k = F(f, c);
      const int i = F(f, (c + 1) % 3);
      const int j = F(f, (c + 2) % 3);
      const Eigen::Vector3d u = row(V, i) - row(V, k);
      const Eigen::Vector3d w = row(V, j) - row(V, k);
      const double half_cot = u.dot(w) / u.cross(w).norm() / 2;
      A(i, j) -= half_cot;
      A(j, i) -= half_cot;
      A(i, i) += half_cot;
      A(j, j) += half_cot;
      mass(k) += third;
    }
  }
  A.diagonal() -= (mass.array() * pot.array()).matrix();
  if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * A.cwiseAbs().maxCoeff()) {
    throw InputError("jacobi_spectrum: assembled operator is not symmetric");
  }

  std::vector<Eigen::Index> keep;
  for (Eigen::Index v = 0; v < n; ++v) {
    if (boundary == Boundary::closed || !mesh.boundary_vertex()[std::size_t(v)]) keep.push_back(v);
  }
  if (keep.empty()) throw InputError("jacobi_spectrum: no interior vertices");
  const Eigen::Index m = Eigen::Index(keep.size());
  Eigen::VectorXd scale(m);
  for (Eigen::Index i = 0; i < m; ++i) scale(i) = 1 / std::sqrt(mass(keep[std::size_t(i)]));
  Eigen::MatrixXd B(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      B(i, j) = scale(i) * A(keep[std::size_t(i)], keep[std::size_t(j)]) * scale(j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw InputError("jacobi_spectrum: eigensolver failed");

  JacobiSpectrum out;
  out.eigenvalues = es.eigenvalues();
  out.tolerance = 1e-6 * out.eigenvalues.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double mu = out.eigenvalues(i);
    if (mu < -out.tolerance) ++out.index;
    else if (mu <= out.tolerance) ++out.nullity;
  }
  return out;
}

MeshSummary summarize(const TriangulatedSurface& mesh) {
  if (!mesh.closed()) throw InputError("summarize: mesh has boundary; a closed surface is required");
  if (mesh.component_count() != 1) throw InputError("summarize: mesh is not connected");
  MeshSummary out;
  out.euler = euler_genus(mesh);
  out.angle_defect = angle_defect_total(mesh);

  const Curvature curv = second_fundamental_form(mesh);
  if (!curv.flagged.empty()) {
    out.warnings.push_back(std::to_string(curv.flagged.size()) +
                           " vertices with a degenerate neighborhood; curvature set to zero");
  }
  const Eigen::ArrayXd absH = curv.H.cwiseAbs().array();
  out.H_mean = absH.mean();
  const double var = (absH - out.H_mean).square().mean();
  out.H_rel_std = out.H_mean > 0 ? std::sqrt(var) / out.H_mean : 0;
  out.non_cmc = out.H_rel_std > 0.02;
  if (out.non_cmc) {
    out.warnings.push_back("mean curvature is not constant (stddev/mean = " +
                           std::to_string(out.H_rel_std) + "); bound checks are advisory");
  }
  out.spectrum = jacobi_spectrum(mesh, Boundary::closed, curv.A2);

  SurfaceSummary& s = out.summary;
  s.genus = out.euler.genus;
  s.area = surface_area(mesh);
  s.diameter = intrinsic_diameter(mesh);
  s.extrinsic_diameter = extrinsic_diameter(mesh);
  s.H = out.H_mean;
  s.index = out.spectrum.index;
  s.compact = true;
  s.connected = true;
  return out;
}

std::string to_json(const MeshSummary& s, int indent) {
  using nlohmann::json;
  json j;
  j["summary"] = {{"genus", s.summary.genus},
                  {"area", number_to_json(s.summary.area)},
                  {"diameter", number_to_json(s.summary.diameter)},
                  {"extrinsic_diameter", number_to_json(s.summary.extrinsic_diameter.value_or(0))},
                  {"H", number_to_json(s.summary.H)},
                  {"index", s.summary.index},
                  {"compact", s.summary.compact},
                  {"connected", s.summary.connected}};
  j["euler"] = {{"V", s.euler.V},   {"E", s.euler.E},          {"F", s.euler.F},
                {"chi", s.euler.chi}, {"genus", s.euler.genus}, {"boundary_loops", s.euler.boundary_loops}};
  j["angle_defect_total"] = number_to_json(s.angle_defect);
  j["H_mean"] = number_to_json(s.H_mean);
  j["H_rel_std"] = number_to_json(s.H_rel_std);
  j["non_cmc"] = s.non_cmc;
  json low = json::array();
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(8, s.spectrum.eigenvalues.size()); ++i) {
    low.push_back(number_to_json(s.spectrum.eigenvalues(i)));
  }
  j["spectrum"] = {{"lowest", low},
                   {"index", s.spectrum.index},
                   {"nullity", s.spectrum.nullity},
                   {"tolerance", number_to_json(s.spectrum.tolerance)},
                   {"size", s.spectrum.eigenvalues.size()}};
  j["warnings"] = s.warnings;
  return j.dump(indent);
}

}  // namespace cmcb::mesh
