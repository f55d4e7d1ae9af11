#include "wforge/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace wforge {

namespace {

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string param_token(const ParamValue& p) {
  std::string re;
  std::string im;
  if (const auto* e = std::get_if<ExactComplex>(&p)) {
    re = to_string(e->re());
    if (!e->is_real()) im = to_string(e->im());
  } else {
    const auto z = std::get<std::complex<double>>(p);
    re = g17(z.real());
    if (z.imag() != 0.0) im = g17(z.imag());
  }
  std::string s = re;
  if (!im.empty()) s += (im[0] == '-' ? "" : "+") + im + "i";
  std::string out;
  for (char c : s) {
    if (c == '/')
      out += "div";
    else
      out += c;
  }
  return out;
}

template <class Stream>
Stream open_checked(const std::filesystem::path& path) {
  Stream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return f;
}

}  // namespace

double MeshGrid::u_at(int i) const {
  return nu == 1 ? region.u0 : region.u0 + (region.u1 - region.u0) * i / (nu - 1);
}
double MeshGrid::v_at(int j) const {
  return nv == 1 ? region.v0 : region.v0 + (region.v1 - region.v0) * j / (nv - 1);
}

int MeshGrid::singular_count() const {
  return static_cast<int>(std::count(singular.begin(), singular.end(), 1));
}

MeshGrid sample(const PolySurface& surface, const Region& region, int nu, int nv) {
  if (nu < 2 || nv < 2) throw Error(ErrorKind::Domain, "mesh resolution must be at least 2 per axis");
  MeshGrid m;
  m.region = region;
  m.nu = nu;
  m.nv = nv;
  const auto count = static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv);
  m.vertices.resize(count);
  m.K.resize(count);
  m.nu_curvature.resize(count);
  m.singular.assign(count, 0);

  auto rows = [&](int first, int stride) {
    for (int j = first; j < nv; j += stride)
      for (int i = 0; i < nu; ++i) {
        const auto k = static_cast<std::size_t>(m.index(i, j));
        const double u = m.u_at(i);
        const double v = m.v_at(j);
        m.vertices[k] = surface.position(u, v);
        try {
          const FormsSample s = forms_at(surface, u, v);
          m.K[k] = s.K;
          m.nu_curvature[k] = s.nu;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SingularPoint) throw;
          m.singular[k] = 1;
          m.K[k] = m.nu_curvature[k] = std::numeric_limits<double>::quiet_NaN();
        }
      }
  };
  const int workers =
      std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::min(nv, 16));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(rows, w, workers);
  rows(0, workers);
  for (auto& t : pool) t.join();

  if (m.singular_count() == static_cast<int>(count))
    throw Error(ErrorKind::EmptyMesh, "every mesh vertex is singular");

  for (int j = 0; j + 1 < nv; ++j)
    for (int i = 0; i + 1 < nu; ++i) {
      const int a = m.index(i, j);
      const int b = m.index(i + 1, j);
      const int c = m.index(i + 1, j + 1);
      const int d = m.index(i, j + 1);
      for (const std::array<int, 3> tri : {std::array<int, 3>{a, b, c}, std::array<int, 3>{a, c, d}}) {
        if (m.singular[tri[0]] || m.singular[tri[1]] || m.singular[tri[2]]) continue;
        m.faces.push_back(tri);
      }
    }
  return m;
}

void export_obj(const MeshGrid& mesh, std::ostream& out) {
  if (mesh.vertices.empty()) throw Error(ErrorKind::EmptyMesh, "nothing to export");
  for (const auto& p : mesh.vertices) out << "v " << g17(p[0]) << ' ' << g17(p[1]) << ' ' << g17(p[2]) << '\n';
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  if (!out) throw Error(ErrorKind::Io, "write failed");
}

void export_csv(const MeshGrid& mesh, std::ostream& out) {
  if (mesh.vertices.empty()) throw Error(ErrorKind::EmptyMesh, "nothing to export");
  out << "u,v,x,y,z,K,nu\n";
  for (int j = 0; j < mesh.nv; ++j)
    for (int i = 0; i < mesh.nu; ++i) {
      const auto k = static_cast<std::size_t>(mesh.index(i, j));
      const auto& p = mesh.vertices[k];
      out << g17(mesh.u_at(i)) << ',' << g17(mesh.v_at(j)) << ',' << g17(p[0]) << ',' << g17(p[1])
          << ',' << g17(p[2]) << ',';
      if (mesh.singular[k])
        out << "nan,nan\n";
      else
        out << g17(mesh.K[k]) << ',' << g17(mesh.nu_curvature[k]) << '\n';
    }
  if (!out) throw Error(ErrorKind::Io, "write failed");
}

void export_obj(const MeshGrid& mesh, const std::filesystem::path& path) {
  auto f = open_checked<std::ofstream>(path);
  export_obj(mesh, f);
}

void export_csv(const MeshGrid& mesh, const std::filesystem::path& path) {
  auto f = open_checked<std::ofstream>(path);
  export_csv(mesh, f);
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "u,v,x,y,z,K,nu")
    throw Error(ErrorKind::Parse, "missing CSV header u,v,x,y,z,K,nu");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double vals[7];
    const char* p = line.c_str();
    for (int k = 0; k < 7; ++k) {
      char* end = nullptr;
      vals[k] = std::strtod(p, &end);
      if (end == p || (k < 6 && *end != ',') || (k == 6 && *end != '\0'))
        throw Error(ErrorKind::Parse, "bad CSV row: " + line);
      p = end + 1;
    }
    rows.push_back({vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6]});
  }
  return rows;
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  auto f = open_checked<std::ifstream>(path);
  return read_csv(f);
}

std::string mesh_file_name(const FamilyDescriptor& desc, int nu, int nv, std::string_view extension) {
  std::string s(to_string(desc.kind));
  s += '_';
  for (std::size_t k = 0; k < desc.params.size(); ++k) {
    if (k) s += ',';
    s += param_token(desc.params[k].second);
  }
  if (desc.params.empty()) s += "default";
  s += '_' + std::to_string(nu);
  if (nv != nu) s += 'x' + std::to_string(nv);
  s += '.';
  s += extension;
  return s;
}

}  // namespace wforge
