// Interpolating cubic B-splines on uniform grids: coefficient prefilters
// (periodic and not-a-knot closures) and pointwise evaluation in node-index
// coordinates (node i sits at position i).
#pragma once

#include <vector>

namespace svp::spline {

// Weights of coefficients c[j-1..j+2] for a point at node position j+u.
// Valid for u in [0,1); polynomially extended outside (used for end-piece
// extrapolation under the not-a-knot closure).
inline void bspline_weights(double u, double w[4]) {
  const double u2 = u * u, u3 = u2 * u;
  w[0] = (1.0 - 3.0 * u + 3.0 * u2 - u3) / 6.0;
  w[1] = (4.0 - 6.0 * u2 + 3.0 * u3) / 6.0;
  w[2] = (1.0 + 3.0 * u + 3.0 * u2 - 3.0 * u3) / 6.0;
  w[3] = u3 / 6.0;
}

// In-place periodic prefilter: on return c[] holds B-spline coefficients such
// that the spline interpolates the input values at the nodes. scratch needs
// 2*n doubles.
void prefilter_periodic(double* c, int n, double* scratch);

// Not-a-knot prefilter: f has n values, c receives n+2 coefficients laid out
// as c[k] = coefficient of basis function centered at node k-1. scratch needs
// 4*n doubles.
void prefilter_notaknot(const double* f, int n, double* c, double* scratch);

// Evaluate a periodic spline at node position pos (any real; wrapped mod n).
double eval_periodic(const double* c, int n, double pos);

// Evaluate a not-a-knot spline (c from prefilter_notaknot, n+2 entries) at
// node position pos. End cubics are extrapolated beyond [0, n-1].
double eval_notaknot(const double* c, int n, double pos);

}  // namespace svp::spline
