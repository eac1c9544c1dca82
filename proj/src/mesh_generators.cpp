#include <cmath>
#include <map>
#include <unordered_map>

#include "cmcb/mesh.hpp"
#include "cmcb/parse.hpp"

namespace cmcb::mesh {

namespace {

struct Builder {
  std::vector<Eigen::Vector3d> verts;
  std::vector<Eigen::Vector3i> faces;

  int add(const Eigen::Vector3d& p) {
    verts.push_back(p);
    return int(verts.size()) - 1;
  }
  void tri(int a, int b, int c) { faces.emplace_back(a, b, c); }
  // Adds the triangle with its normal on the side of `up`.
  void tri_facing(int a, int b, int c, const Eigen::Vector3d& up) {
    const Eigen::Vector3d n = (verts[std::size_t(b)] - verts[std::size_t(a)])
                                  .cross(verts[std::size_t(c)] - verts[std::size_t(a)]);
    if (n.dot(up) >= 0) tri(a, b, c);
    else tri(a, c, b);
  }

  TriangulatedSurface finish() const {
    Vertices V(Eigen::Index(verts.size()), 3);
    for (std::size_t i = 0; i < verts.size(); ++i) V.row(Eigen::Index(i)) = verts[i].transpose();
    Faces F(Eigen::Index(faces.size()), 3);
    for (std::size_t i = 0; i < faces.size(); ++i) F.row(Eigen::Index(i)) = faces[i].transpose();
    return TriangulatedSurface(std::move(V), std::move(F));
  }
};

void require(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

}  // namespace

TriangulatedSurface icosahedron(double radius) { return icosphere(0, radius); }

TriangulatedSurface icosphere(int level, double radius) {
  require(level >= 0 && level <= 7, "icosphere: level must be in [0, 7]");
  require(radius > 0, "icosphere: radius must be positive");
  const double phi = (1 + std::sqrt(5.0)) / 2;
  Builder b;
  const double raw[12][3] = {{-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
                             {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
                             {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (const auto& p : raw) b.add(Eigen::Vector3d(p[0], p[1], p[2]).normalized());
  const int tris[20][3] = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                           {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                           {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                           {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (const auto& t : tris) b.tri(t[0], t[1], t[2]);

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int i, int j) {
      const auto key = std::minmax(i, j);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      const int m = b.add((b.verts[std::size_t(i)] + b.verts[std::size_t(j)]).normalized());
      mid.emplace(key, m);
      return m;
    };
    std::vector<Eigen::Vector3i> next;
    for (const auto& f : b.faces) {
      const int a = midpoint(f(0), f(1)), c = midpoint(f(1), f(2)), d = midpoint(f(2), f(0));
      next.emplace_back(f(0), a, d);
      next.emplace_back(f(1), c, a);
      next.emplace_back(f(2), d, c);
      next.emplace_back(a, c, d);
    }
    b.faces = std::move(next);
  }
  for (auto& v : b.verts) v *= radius;
  return b.finish();
}

TriangulatedSurface torus(double R, double r, int nu, int nv) {
  require(R > r && r > 0, "torus: need R > r > 0");
  require(nu >= 3 && nv >= 3, "torus: need at least 3 samples in each direction");
  Builder b;
  for (int i = 0; i < nu; ++i) {
    const double u = 2 * kPi * i / nu;
    for (int j = 0; j < nv; ++j) {
      const double v = 2 * kPi * j / nv;
      b.add({(R + r * std::cos(v)) * std::cos(u), (R + r * std::cos(v)) * std::sin(u), r * std::sin(v)});
    }
  }
  auto id = [&](int i, int j) { return ((i + nu) % nu) * nv + (j + nv) % nv; };
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      b.tri(id(i, j), id(i + 1, j), id(i + 1, j + 1));
      b.tri(id(i, j), id(i + 1, j + 1), id(i, j + 1));
    }
  }
  return b.finish();
}

TriangulatedSurface cylinder(double radius, double height, int around, int along) {
  require(radius > 0 && height > 0, "cylinder: radius and height must be positive");
  require(around >= 3 && along >= 1, "cylinder: need around >= 3 and along >= 1");
  Builder b;
  for (int j = 0; j <= along; ++j) {
    for (int i = 0; i < around; ++i) {
      const double u = 2 * kPi * i / around;
      b.add({radius * std::cos(u), radius * std::sin(u), height * j / along});
    }
  }
  auto id = [&](int i, int j) { return j * around + (i + around) % around; };
  for (int j = 0; j < along; ++j) {
    for (int i = 0; i < around; ++i) {
      b.tri(id(i, j), id(i + 1, j), id(i + 1, j + 1));
      b.tri(id(i, j), id(i + 1, j + 1), id(i, j + 1));
    }
  }
  return b.finish();
}

TriangulatedSurface flat_disk(double radius, int rings) {
  require(radius > 0 && rings >= 1, "flat_disk: need radius > 0 and rings >= 1");
  Builder b;
  const Eigen::Vector3d up(0, 0, 1);
  std::vector<int> inner{b.add({0, 0, 0})};
  for (int k = 1; k <= rings; ++k) {
    const int n = 6 * k;
    std::vector<int> outer;
    for (int i = 0; i < n; ++i) {
      const double a = 2 * kPi * i / n;
      outer.push_back(b.add({radius * k / rings * std::cos(a), radius * k / rings * std::sin(a), 0}));
    }
    if (k == 1) {
      for (int i = 0; i < n; ++i) b.tri_facing(inner[0], outer[std::size_t(i)], outer[std::size_t((i + 1) % n)], up);
    } else {
      // zip the two rings together by angle
      const int m = int(inner.size());
      int a = 0, c = 0;
      while (a < m || c < n) {
        const double next_outer = double(c + 1) / n;
        const double next_inner = double(a + 1) / m;
        if (c < n && (a == m || next_outer <= next_inner)) {
          b.tri_facing(inner[std::size_t(a % m)], outer[std::size_t(c % n)], outer[std::size_t((c + 1) % n)], up);
          ++c;
        } else {
          b.tri_facing(inner[std::size_t(a % m)], outer[std::size_t(c % n)], inner[std::size_t((a + 1) % m)], up);
          ++a;
        }
      }
    }
    inner = std::move(outer);
  }
  return b.finish();
}

TriangulatedSurface flat_square(int n, double size) {
  require(n >= 1 && size > 0, "flat_square: need n >= 1 and size > 0");
  Builder b;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) b.add({size * i / n, size * j / n, 0});
  }
  auto id = [&](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      b.tri(id(i, j), id(i + 1, j), id(i + 1, j + 1));
      b.tri(id(i, j), id(i + 1, j + 1), id(i, j + 1));
    }
  }
  return b.finish();
}

TriangulatedSurface single_triangle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                    const Eigen::Vector3d& c) {
  Builder out;
  out.tri(out.add(a), out.add(b), out.add(c));
  return out.finish();
}

TriangulatedSurface genus2_polycube() {
  constexpr int nx = 3, ny = 5;
  auto filled = [](int i, int j, int k) {
    if (i < 0 || i >= nx || j < 0 || j >= ny || k != 0) return false;
    return !(i == 1 && (j == 1 || j == 3));
  };
  Builder b;
  std::map<std::array<int, 3>, int> index;
  auto vertex = [&](std::array<int, 3> p) {
    auto [it, inserted] = index.try_emplace(p, 0);
    if (inserted) it->second = b.add({double(p[0]), double(p[1]), double(p[2])});
    return it->second;
  };
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      if (!filled(i, j, 0)) continue;
      const std::array<int, 3> cell{i, j, 0};
      for (int axis = 0; axis < 3; ++axis) {
        for (int sign : {-1, 1}) {
          std::array<int, 3> nb = cell;
          nb[std::size_t(axis)] += sign;
          if (filled(nb[0], nb[1], nb[2])) continue;
          const int u = (axis + 1) % 3, w = (axis + 2) % 3;
          std::array<int, 3> p0 = cell;
          if (sign > 0) p0[std::size_t(axis)] += 1;
          std::array<int, 3> p1 = p0, p2 = p0, p3 = p0;
          p1[std::size_t(u)] += 1;
          p2[std::size_t(u)] += 1;
          p2[std::size_t(w)] += 1;
          p3[std::size_t(w)] += 1;
          int q[4] = {vertex(p0), vertex(p1), vertex(p2), vertex(p3)};
          if (sign < 0) std::swap(q[1], q[3]);
          b.tri(q[0], q[1], q[2]);
          b.tri(q[0], q[2], q[3]);
        }
      }
    }
  }
  return b.finish();
}

TriangulatedSurface transformed(const TriangulatedSurface& mesh, const Eigen::Matrix3d& R,
                                const Eigen::Vector3d& t, double s) {
  Vertices V = mesh.vertices();
  for (Eigen::Index i = 0; i < V.rows(); ++i) {
    V.row(i) = (s * R * V.row(i).transpose() + t).transpose();
  }
  return TriangulatedSurface(std::move(V), mesh.faces());
}

}  // namespace cmcb::mesh
