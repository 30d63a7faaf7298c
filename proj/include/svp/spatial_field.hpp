// d-dimensional periodic spatial grids and the real fields living on them
// (charge density rho, potential phi, and derivative components).
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace svp {

struct SpatialGrid {
  int d = 1;               // 1 or 2 (3 never carries a grid)
  int n = 0;               // points per axis, power of two
  double half_width = 0.0; // box is [-half_width, half_width)

  double dx() const { return 2.0 * half_width / n; }
  double coord(int i) const { return -half_width + (i + 0.5) * dx(); }
  std::size_t size() const {
    std::size_t s = static_cast<std::size_t>(n);
    return d == 2 ? s * s : s;
  }
  bool operator==(const SpatialGrid&) const = default;
};

enum class FieldTag { rho, phi, dphi };

struct SpatialField {
  SpatialGrid grid;
  FieldTag tag = FieldTag::rho;
  std::vector<double> values;  // n^d, row-major (i0*n + i1)

  SpatialField() = default;
  SpatialField(const SpatialGrid& g, FieldTag t) : grid(g), tag(t), values(g.size(), 0.0) {}

  double& at(int i0, int i1 = 0) {
    return values[grid.d == 2 ? static_cast<std::size_t>(i0) * grid.n + i1
                              : static_cast<std::size_t>(i0)];
  }
  double at(int i0, int i1 = 0) const {
    return values[grid.d == 2 ? static_cast<std::size_t>(i0) * grid.n + i1
                              : static_cast<std::size_t>(i0)];
  }

  double max_abs() const;
  // Integral of |f| over the outermost `layer_cells`-wide ring.
  double boundary_layer_mass(int layer_cells) const;
};

}  // namespace svp
