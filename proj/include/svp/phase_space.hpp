// Phase-space grid and profile containers, Gaussian initial data, velocity
// integration to spatial densities, and the free-streaming frame change.
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "svp/common.hpp"
#include "svp/spatial_field.hpp"

namespace svp {

struct PhaseGrid {
  int d = 1;       // spatial/velocity dimension, 1 or 2
  int nx = 0;      // points per spatial axis (power of two)
  int nv = 0;      // points per velocity axis (power of two)
  double lx = 0.0; // spatial half-width
  double lv = 0.0; // velocity half-width
  double dx = 0.0, dv = 0.0;

  std::size_t nx_total() const {
    return d == 2 ? static_cast<std::size_t>(nx) * nx : static_cast<std::size_t>(nx);
  }
  std::size_t nv_total() const {
    return d == 2 ? static_cast<std::size_t>(nv) * nv : static_cast<std::size_t>(nv);
  }
  std::size_t size() const { return nx_total() * nv_total(); }

  double x_coord(int i) const { return -lx + (i + 0.5) * dx; }
  double v_coord(int j) const { return -lv + (j + 0.5) * dv; }
  double cell_x() const { return d == 2 ? dx * dx : dx; }  // dx^d
  double cell_v() const { return d == 2 ? dv * dv : dv; }  // dv^d
  bool operator==(const PhaseGrid&) const = default;
};

// pre: d in {1,2}; nx, nv powers of two >= 8; lx, lv > 0.
PhaseGrid build_grid(int d, int nx, int nv, double lx, double lv);

enum class Frame { physical, filtered };

// Values are stored x-major: index = ix * nv_total + iv, where in d=2
// ix = ix0*nx + ix1 and iv = iv0*nv + iv1.
struct PhaseProfile {
  PhaseGrid grid;
  std::vector<double> values;
  double time = 0.0;
  Frame frame = Frame::physical;

  PhaseProfile() = default;
  explicit PhaseProfile(const PhaseGrid& g, Frame f = Frame::physical)
      : grid(g), values(g.size(), 0.0), frame(f) {}

  std::size_t idx(std::size_t ix, std::size_t iv) const { return ix * grid.nv_total() + iv; }
  double l2_norm() const;
  double max_abs() const;
};

// One localized term of the initial datum:
//   amp * prod_k (x_k-x0_k)^px_k exp(-(x_k-x0_k)^2/(2 sx^2))
//       * prod_k (v_k-v0_k)^pv_k exp(-(v_k-v0_k)^2/(2 sv^2))
struct GaussianBump {
  double amplitude = 0.0;
  std::array<double, 2> x0{0.0, 0.0};
  std::array<double, 2> v0{0.0, 0.0};
  double sigma_x = 1.0;
  double sigma_v = 1.0;
  std::array<int, 2> px{0, 0};
  std::array<int, 2> pv{0, 0};
};

struct InitialDataSpec {
  std::vector<GaussianBump> bumps;
  bool empty() const;  // true if no term carries amplitude
};

double eval_initial(const InitialDataSpec& spec, int d, const double* x, const double* v);

// pre: every bump's 4-sigma box stays inside the grid; throws
// "support_overflow" otherwise. Output is in the physical frame at t=0.
PhaseProfile sample_initial(const InitialDataSpec& spec, const PhaseGrid& grid);

// Max |value| over the outermost velocity layer; the pad guard compares this
// against boundary_tol.
double velocity_edge_mass(const PhaseProfile& p);
void pad_guard(const PhaseProfile& p, const Tolerances& tol = {});

// rho(x) = sum_v mu^2(x,v) dv^d on the profile's own spatial box.
// pre: physical frame.
SpatialField density(const PhaseProfile& mu);

// Density of the filtered profile on the grown domain omega:
//   t <= t_switch: rho(y) = sum_v gamma^2(y - t v, v) dv^d
//   t >  t_switch: rho(y) = t^-d sum_a gamma^2(a, (y-a)/t) dx^d
// with cubic-spline off-grid evaluation (periodic in x, not-a-knot in v,
// zero beyond the velocity box).
SpatialField density_filtered(const PhaseProfile& gamma, double t, const SpatialGrid& omega,
                              const Tolerances& tol = {});

// Exact spectral shear: per velocity slice, translate in x by -t*v (filtered)
// or +t*v (physical). Round trip is exact to spectral roundoff.
PhaseProfile to_filtered(const PhaseProfile& mu, double t);
PhaseProfile to_physical(const PhaseProfile& gamma, double t);

}  // namespace svp
