#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "cmcb/mesh.hpp"
#include "cmcb/parse.hpp"

namespace cmcb::mesh {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t j = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > j) out.push_back(line.substr(j, i - j));
  }
  return out;
}

class Warnings {
 public:
  explicit Warnings(std::vector<std::string>* sink) : sink_(sink) {}
  void once(const std::string& msg) {
    if (sink_ && seen_.insert(msg).second) sink_->push_back(msg);
  }

 private:
  std::vector<std::string>* sink_;
  std::set<std::string> seen_;
};

TriangulatedSurface build(const std::vector<Eigen::Vector3d>& verts,
                          const std::vector<Eigen::Vector3i>& faces) {
  Vertices V(Eigen::Index(verts.size()), 3);
  for (std::size_t i = 0; i < verts.size(); ++i) V.row(Eigen::Index(i)) = verts[i].transpose();
  Faces F(Eigen::Index(faces.size()), 3);
  for (std::size_t i = 0; i < faces.size(); ++i) F.row(Eigen::Index(i)) = faces[i].transpose();
  return TriangulatedSurface(std::move(V), std::move(F));
}

}  // namespace

TriangulatedSurface read_off(std::istream& in, std::vector<std::string>* warnings) {
  Warnings warn(warnings);
  std::vector<std::vector<std::string_view>> lines;
  std::vector<std::string> storage;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    storage.push_back(std::move(line));
  }
  for (const auto& s : storage) {
    auto tokens = split(s);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  if (lines.empty() || lines[0][0] != "OFF") throw InputError("OFF: missing 'OFF' header");
  std::size_t at = 0;
  std::vector<std::string_view> counts(lines[0].begin() + 1, lines[0].end());
  if (counts.empty()) {
    if (lines.size() < 2) throw InputError("OFF: missing element counts");
    counts = lines[1];
    at = 2;
  } else {
    at = 1;
  }
  if (counts.size() < 2) throw InputError("OFF: element count line needs vertex and face counts");
  const long long nv = parse_integer(counts[0], "OFF vertex count");
  const long long nf = parse_integer(counts[1], "OFF face count");
  if (nv <= 0 || nf <= 0) throw InputError("OFF: counts must be positive");

  std::vector<Eigen::Vector3d> verts;
  for (long long i = 0; i < nv; ++i, ++at) {
    if (at >= lines.size()) {
      throw InputError("OFF: truncated, expected " + std::to_string(nv) + " vertices, got " +
                       std::to_string(i));
    }
    const auto& t = lines[at];
    if (t.size() < 3) throw InputError("OFF: vertex " + std::to_string(i) + " has fewer than 3 coordinates");
    if (t.size() > 3) warn.once("OFF: extra vertex attributes ignored");
    verts.emplace_back(parse_double(t[0], "OFF x"), parse_double(t[1], "OFF y"),
                       parse_double(t[2], "OFF z"));
  }
  std::vector<Eigen::Vector3i> faces;
  for (long long i = 0; i < nf; ++i, ++at) {
    if (at >= lines.size()) {
      throw InputError("OFF: truncated, expected " + std::to_string(nf) + " faces, got " +
                       std::to_string(i));
    }
    const auto& t = lines[at];
    const long long k = parse_integer(t[0], "OFF face size");
    if (k != 3) throw InputError("OFF: face " + std::to_string(i) + " is not a triangle");
    if (t.size() < 4) throw InputError("OFF: face " + std::to_string(i) + " is truncated");
    if (t.size() > 4) warn.once("OFF: face colors ignored");
    Eigen::Vector3i f;
    for (int c = 0; c < 3; ++c) {
      const long long idx = parse_integer(t[std::size_t(c) + 1], "OFF face index");
      if (idx < 0 || idx >= nv) throw InputError("OFF: face " + std::to_string(i) + " index out of range");
      f(c) = int(idx);
    }
    faces.push_back(f);
  }
  if (at < lines.size()) warn.once("OFF: trailing content ignored");
  return build(verts, faces);
}

TriangulatedSurface read_obj(std::istream& in, std::vector<std::string>* warnings) {
  Warnings warn(warnings);
  std::vector<Eigen::Vector3d> verts;
  std::vector<Eigen::Vector3i> faces;
  long long lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = split(line);
    if (t.empty()) continue;
    const std::string where = "OBJ line " + std::to_string(lineno);
    if (t[0] == "v") {
      if (t.size() < 4) throw InputError(where + ": vertex needs 3 coordinates");
      if (t.size() > 4) warn.once("OBJ: vertex weights/colors ignored");
      verts.emplace_back(parse_double(t[1], where), parse_double(t[2], where), parse_double(t[3], where));
    } else if (t[0] == "f") {
      if (t.size() != 4) throw InputError(where + ": face is not a triangle");
      Eigen::Vector3i f;
      for (int c = 0; c < 3; ++c) {
        std::string_view tok = t[std::size_t(c) + 1];
        if (auto slash = tok.find('/'); slash != std::string_view::npos) {
          tok = tok.substr(0, slash);
          warn.once("OBJ: texture/normal indices ignored");
        }
        long long idx = parse_integer(tok, where);
        if (idx < 0) idx += (long long)verts.size() + 1;
        if (idx < 1 || idx > (long long)verts.size()) throw InputError(where + ": face index out of range");
        f(c) = int(idx - 1);
      }
      faces.push_back(f);
    } else {
      warn.once("OBJ: '" + std::string(t[0]) + "' records ignored");
    }
  }
  if (verts.empty() || faces.empty()) throw InputError("OBJ: no vertices or faces");
  return build(verts, faces);
}

TriangulatedSurface read_mesh(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open mesh file '" + path + "'");
  std::string ext = path.substr(path.find_last_of('.') == std::string::npos ? path.size()
                                                                           : path.find_last_of('.'));
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".off") return read_off(in, warnings);
  if (ext == ".obj") return read_obj(in, warnings);
  throw InputError("unknown mesh extension '" + ext + "' (expected .off or .obj)");
}

void write_off(std::ostream& out, const TriangulatedSurface& mesh) {
  out.precision(std::numeric_limits<double>::max_digits10);
  out << "OFF\n" << mesh.num_vertices() << ' ' << mesh.num_faces() << " 0\n";
  for (Eigen::Index i = 0; i < mesh.num_vertices(); ++i) {
    out << mesh.vertices()(i, 0) << ' ' << mesh.vertices()(i, 1) << ' ' << mesh.vertices()(i, 2) << '\n';
  }
  for (Eigen::Index f = 0; f < mesh.num_faces(); ++f) {
    out << "3 " << mesh.faces()(f, 0) << ' ' << mesh.faces()(f, 1) << ' ' << mesh.faces()(f, 2) << '\n';
  }
}

void write_obj(std::ostream& out, const TriangulatedSurface& mesh) {
  out.precision(std::numeric_limits<double>::max_digits10);
  for (Eigen::Index i = 0; i < mesh.num_vertices(); ++i) {
    out << "v " << mesh.vertices()(i, 0) << ' ' << mesh.vertices()(i, 1) << ' ' << mesh.vertices()(i, 2)
        << '\n';
  }
  for (Eigen::Index f = 0; f < mesh.num_faces(); ++f) {
    out << "f " << mesh.faces()(f, 0) + 1 << ' ' << mesh.faces()(f, 1) + 1 << ' '
        << mesh.faces()(f, 2) + 1 << '\n';
  }
}

}  // namespace cmcb::mesh
