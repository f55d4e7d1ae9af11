#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wforge/families.hpp"
#include "wforge/geometry.hpp"

namespace wforge {

/// Sampled surface on a regular (u, v) grid.
struct MeshGrid {
  Region region;
  int nu = 0;
  int nv = 0;
  std::vector<Vec3> vertices;  // row-major, index j * nu + i
  std::vector<double> K;
  std::vector<double> nu_curvature;
  std::vector<char> singular;  // 1 where EG - F^2 vanishes
  std::vector<std::array<int, 3>> faces;

  int index(int i, int j) const { return j * nu + i; }
  double u_at(int i) const;
  double v_at(int j) const;
  int singular_count() const;
};

// Rows are sampled in parallel. Each grid quad becomes two triangles,
// counterclockwise in (u, v); triangles touching a singular vertex are
// dropped. Throws EmptyMesh when every vertex is singular.
MeshGrid sample(const PolySurface& surface, const Region& region, int nu, int nv);

void export_obj(const MeshGrid& mesh, std::ostream& out);
void export_csv(const MeshGrid& mesh, std::ostream& out);
// Throw Io when the file cannot be written.
void export_obj(const MeshGrid& mesh, const std::filesystem::path& path);
void export_csv(const MeshGrid& mesh, const std::filesystem::path& path);

struct CsvRow {
  double u, v, x, y, z, K, nu;
};
std::vector<CsvRow> read_csv(std::istream& in);
std::vector<CsvRow> read_csv(const std::filesystem::path& path);

// "<family>_<params>_<res>.obj", e.g. "r12_1,0,1,1_81.obj". Complex
// parameters print as "1+2i" and '/' becomes "div".
std::string mesh_file_name(const FamilyDescriptor& desc, int nu, int nv,
                           std::string_view extension = "obj");

}  // namespace wforge
