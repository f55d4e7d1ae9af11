#pragma once

#include <complex>
#include <vector>

#include "wforge/geometry.hpp"

namespace wforge {

struct ChartOptions {
  double half_width = 0.25;  // chart is [-hw, hw]^2 in w = s + i t
  double grid_step = 1e-2;
  double ode_step = 1e-3;
  int branch = 1;               // global sign of z'
  double branch_radius = 1e-3;  // minimum distance to a zero of f g'
};

struct ChartNode {
  std::complex<double> w;
  std::complex<double> z;
  std::complex<double> dz;       // z'(w)
  std::complex<double> g_tilde;  // g(z(w))
  FormsSample forms;             // in (s, t) coordinates
};

/// Grid of canonical principal parameters around w = 0 with z(0) = z0.
struct CanonicalChart {
  int size = 0;  // nodes per axis
  ChartOptions options;
  std::vector<ChartNode> nodes;  // row-major, index j * size + i, w = s_i + i t_j

  const ChartNode& at(int i, int j) const { return nodes[static_cast<std::size_t>(j * size + i)]; }
};

// Integrates (z')^2 = -1/(f g') with RK4 along s from z0, then along t
// from every point of that row. Throws BranchPointProximity when a path
// comes within options.branch_radius of a zero of f g'.
CanonicalChart canonical_chart(const NumericPair& pair, std::complex<double> z0,
                               const ChartOptions& options = {});

struct ChartTolerances {
  double first_form = 1e-6;   // |E - 1/nu|, |G - 1/nu|, |F|, relative to 1/nu
  double second_form = 1e-5;  // |L - 1|, |M|, |N + 1|
  double ode = 1e-6;          // finite-difference z' against sqrt(-1/(f g'))
  double pde = 1e-4;          // |lap ln nu + 2 nu|
};

struct ChartCheck {
  double max_e = 0.0;
  double max_f = 0.0;
  double max_g = 0.0;
  double max_l = 0.0;
  double max_m = 0.0;
  double max_n = 0.0;
  double max_ode = 0.0;
  double max_pde = 0.0;
  int interior_points = 0;
  ChartTolerances tolerances;

  bool first_form_pass() const;
  bool second_form_pass() const;
  bool ode_pass() const;
  bool pde_pass() const;
  bool pass() const { return first_form_pass() && second_form_pass() && ode_pass() && pde_pass(); }
};

// Fourth-order central differences on the chart grid for the ODE and
// PDE residuals; the outer two rings are excluded from those two checks.
ChartCheck check_chart(const CanonicalChart& chart, const ChartTolerances& tol = {});

}  // namespace wforge
