#include "wforge/chart.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wforge {

namespace {

using cd = std::complex<double>;

class ChartField {
 public:
  explicit ChartField(const NumericPair& pair, double radius) : radius_(radius) {
    h_ = pair.R * (pair.P.derivative() * pair.Q - pair.P * pair.Q.derivative());
    dh_ = h_.derivative();
    if (h_.is_zero())
      throw Error(ErrorKind::DegenerateSurface, "f g' vanishes identically: no canonical chart");
    const auto phi = integrand(pair);
    for (int k = 0; k < 3; ++k) {
      phi_[k] = phi[k];
      dphi_[k] = phi[k].derivative();
    }
  }

  cd principal(cd z) const {
    guard(z);
    return std::sqrt(-1.0 / h_(z));
  }

  // Root of -1/h nearest to `ref`.
  cd slope(cd z, cd ref) const {
    guard(z);
    cd r = std::sqrt(-1.0 / h_(z));
    if (std::abs(r - ref) > std::abs(-r - ref)) r = -r;
    return r;
  }

  cd second(cd z) const {
    const cd h = h_(z);
    return dh_(z) / (2.0 * h * h);
  }

  void guard(cd z) const {
    const cd h = h_(z);
    const cd dh = dh_(z);
    const double dist = std::abs(dh) > 0.0 ? std::abs(h / dh) : (std::abs(h) > 0.0 ? 1e300 : 0.0);
    if (dist < radius_)
      throw Error(ErrorKind::BranchPointProximity,
                  "chart path passes within " + std::to_string(radius_) +
                      " of a zero of f g' near z=(" + std::to_string(z.real()) + "," +
                      std::to_string(z.imag()) + ")");
  }

  SurfaceJet jet(cd z, cd dz) const {
    const cd ddz = second(z);
    SurfaceJet j;
    for (int k = 0; k < 3; ++k) {
      const cd x1 = phi_[k](z) * dz;
      const cd x2 = dphi_[k](z) * dz * dz + phi_[k](z) * ddz;
      j.xu[k] = x1.real();
      j.xv[k] = -x1.imag();
      j.xuu[k] = x2.real();
      j.xuv[k] = -x2.imag();
      j.xvv[k] = -x2.real();
    }
    return j;
  }

 private:
  ComplexPolyD h_;
  ComplexPolyD dh_;
  std::array<ComplexPolyD, 3> phi_;
  std::array<ComplexPolyD, 3> dphi_;
  double radius_;
};

// One RK4 step of dz/dparam = dir * F(z), with F continued from `ref`.
cd rk4_step(const ChartField& field, cd z, cd dir, double h, cd& ref) {
  const cd k1 = dir * field.slope(z, ref);
  const cd r1 = k1 / dir;
  const cd k2 = dir * field.slope(z + 0.5 * h * k1, r1);
  const cd k3 = dir * field.slope(z + 0.5 * h * k2, k2 / dir);
  const cd k4 = dir * field.slope(z + h * k3, k3 / dir);
  const cd next = z + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  ref = field.slope(next, k4 / dir);
  return next;
}

// Walks `steps` grid intervals of length grid_step (sign by `sign`) from z,
// recording the value at each grid node.
std::vector<std::pair<cd, cd>> walk(const ChartField& field, cd z, cd ref, cd dir, int sign,
                                    int steps, const ChartOptions& opt) {
  std::vector<std::pair<cd, cd>> out;
  const int sub = std::max(1, static_cast<int>(std::lround(opt.grid_step / opt.ode_step)));
  const double h = sign * opt.grid_step / sub;
  for (int s = 0; s < steps; ++s) {
    for (int k = 0; k < sub; ++k) z = rk4_step(field, z, dir, h, ref);
    out.emplace_back(z, ref);
  }
  return out;
}

}  // namespace

CanonicalChart canonical_chart(const NumericPair& pair, cd z0, const ChartOptions& opt) {
  if (opt.branch != 1 && opt.branch != -1)
    throw Error(ErrorKind::Domain, "chart branch must be +1 or -1");
  if (!(opt.grid_step > 0.0) || !(opt.ode_step > 0.0) || !(opt.half_width > 0.0))
    throw Error(ErrorKind::Domain, "chart steps and half-width must be positive");
  const ChartField field(pair, opt.branch_radius);
  const int half = static_cast<int>(std::lround(opt.half_width / opt.grid_step));
  const int size = 2 * half + 1;

  CanonicalChart chart;
  chart.size = size;
  chart.options = opt;
  chart.nodes.resize(static_cast<std::size_t>(size * size));

  const cd start = static_cast<double>(opt.branch) * field.principal(z0);

  // Row t = 0.
  std::vector<std::pair<cd, cd>> row(static_cast<std::size_t>(size));
  row[static_cast<std::size_t>(half)] = {z0, start};
  for (int sign : {1, -1}) {
    const auto path = walk(field, z0, start, cd(1.0, 0.0), sign, half, opt);
    for (int k = 0; k < half; ++k) row[static_cast<std::size_t>(half + sign * (k + 1))] = path[k];
  }

  // Columns: dz/dt = i z'(w).
  for (int i = 0; i < size; ++i) {
    const auto [zc, dc] = row[static_cast<std::size_t>(i)];
    std::vector<std::pair<cd, cd>> col(static_cast<std::size_t>(size));
    col[static_cast<std::size_t>(half)] = {zc, dc};
    for (int sign : {1, -1}) {
      const auto path = walk(field, zc, dc, cd(0.0, 1.0), sign, half, opt);
      for (int k = 0; k < half; ++k) col[static_cast<std::size_t>(half + sign * (k + 1))] = path[k];
    }
    for (int j = 0; j < size; ++j) {
      ChartNode& node = chart.nodes[static_cast<std::size_t>(j * size + i)];
      const double s = (i - half) * opt.grid_step;
      const double t = (j - half) * opt.grid_step;
      node.w = {s, t};
      node.z = col[static_cast<std::size_t>(j)].first;
      node.dz = col[static_cast<std::size_t>(j)].second;
      node.g_tilde = pair.g()(node.z);
      node.forms = forms_from_jet(field.jet(node.z, node.dz), s, t, 0.0);
    }
  }
  return chart;
}

bool ChartCheck::first_form_pass() const {
  return max_e < tolerances.first_form && max_g < tolerances.first_form &&
         max_f < tolerances.first_form;
}
bool ChartCheck::second_form_pass() const {
  return max_l < tolerances.second_form && max_m < tolerances.second_form &&
         max_n < tolerances.second_form;
}
bool ChartCheck::ode_pass() const { return max_ode < tolerances.ode; }
bool ChartCheck::pde_pass() const { return interior_points > 0 && max_pde < tolerances.pde; }

ChartCheck check_chart(const CanonicalChart& chart, const ChartTolerances& tol) {
  ChartCheck c;
  c.tolerances = tol;
  for (const auto& n : chart.nodes) {
    const FormsSample& f = n.forms;
    const double nu = f.nu;
    c.max_e = std::max(c.max_e, std::abs(f.E * nu - 1.0));
    c.max_g = std::max(c.max_g, std::abs(f.G * nu - 1.0));
    c.max_f = std::max(c.max_f, std::abs(f.F * nu));
    c.max_l = std::max(c.max_l, std::abs(f.L - 1.0));
    c.max_m = std::max(c.max_m, std::abs(f.M));
    c.max_n = std::max(c.max_n, std::abs(f.N + 1.0));
  }
  const double h = chart.options.grid_step;
  const int n = chart.size;
  auto d1 = [&](auto get, int i, int j, int di, int dj) {
    return (-get(i + 2 * di, j + 2 * dj) + 8.0 * get(i + di, j + dj) - 8.0 * get(i - di, j - dj) +
            get(i - 2 * di, j - 2 * dj)) /
           (12.0 * h);
  };
  auto lnnu = [&](int i, int j) { return std::log(chart.at(i, j).forms.nu); };
  auto zat = [&](int i, int j) { return chart.at(i, j).z; };
  for (int j = 2; j < n - 2; ++j)
    for (int i = 2; i < n - 2; ++i) {
      ++c.interior_points;
      const ChartNode& node = chart.at(i, j);
      const double scale = std::abs(node.dz);
      // dz/ds = z' and dz/dt = i z'.
      c.max_ode = std::max(c.max_ode, std::abs(d1(zat, i, j, 1, 0) - node.dz) / scale);
      c.max_ode = std::max(c.max_ode, std::abs(d1(zat, i, j, 0, 1) - cd(0, 1) * node.dz) / scale);
      auto d2 = [&](int di, int dj) {
        return (-lnnu(i + 2 * di, j + 2 * dj) + 16.0 * lnnu(i + di, j + dj) - 30.0 * lnnu(i, j) +
                16.0 * lnnu(i - di, j - dj) - lnnu(i - 2 * di, j - 2 * dj)) /
               (12.0 * h * h);
      };
      c.max_pde = std::max(c.max_pde, std::abs(d2(1, 0) + d2(0, 1) + 2.0 * node.forms.nu));
    }
  return c;
}

}  // namespace wforge
