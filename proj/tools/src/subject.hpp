#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wforge/families.hpp"

namespace wforge::cli {

/// Raw command-line description of one surface.
struct SubjectInput {
  std::string family;
  std::string params;
  std::string f;
  std::string g;
  std::optional<int> n;
  std::optional<std::string> omega;

  bool given() const { return !family.empty() || !f.empty() || !g.empty(); }
};

/// A surface ready for checks: exact pair when available, numeric pair and
/// float surface always.
struct Subject {
  std::string label;
  std::optional<FamilyDescriptor> descriptor;
  std::optional<WeierstrassPair> exact;
  std::optional<SurfacePolynomial> exact_surface;
  NumericPair numeric;
  SurfacePolynomialD surface;
  std::vector<std::string> notes;
  int p = 0;
  int q = 0;
  int r = 0;
  int n = 0;
  bool planar = false;  // f g' vanishes identically
};

// Splits on commas that are not inside (), [] or {}.
std::vector<std::string> split_top_level(std::string_view text);

// Exact Gaussian rational when the text parses as one, float otherwise.
ParamValue parse_param(std::string_view text);

FamilyDescriptor parse_descriptor(const SubjectInput& in);

// Throws wforge::Error on any invalid input.
Subject load_subject(const SubjectInput& in);

}  // namespace wforge::cli
