#include "svp/spline.hpp"

#include <cassert>
#include <cmath>

namespace svp::spline {

namespace {

// Thomas solve of tri(sub=1, diag=d[], sup=1) x = r, constant off-diagonals.
// d and r are overwritten; result in r.
void thomas_const_offdiag(double* d, double* r, int n) {
  for (int i = 1; i < n; ++i) {
    double m = 1.0 / d[i - 1];
    d[i] -= m;
    r[i] -= m * r[i - 1];
  }
  r[n - 1] /= d[n - 1];
  for (int i = n - 2; i >= 0; --i) r[i] = (r[i] - r[i + 1]) / d[i];
}

}  // namespace

void prefilter_periodic(double* c, int n, double* scratch) {
  assert(n >= 4);
  // Solve the cyclic system (c[i-1] + 4 c[i] + c[i+1]) = 6 f[i] via
  // Sherman-Morrison on a tridiagonal core.
  double* d = scratch;      // n
  double* z = scratch + n;  // n
  const double gamma = -4.0;
  for (int i = 0; i < n; ++i) {
    d[i] = 4.0;
    c[i] *= 6.0;
    z[i] = 0.0;
  }
  d[0] -= gamma;
  d[n - 1] -= 1.0 / gamma;
  z[0] = gamma;
  z[n - 1] = 1.0;

  // Two solves with the same elimination pass.
  for (int i = 1; i < n; ++i) {
    double m = 1.0 / d[i - 1];
    d[i] -= m;
    c[i] -= m * c[i - 1];
    z[i] -= m * z[i - 1];
  }
  c[n - 1] /= d[n - 1];
  z[n - 1] /= d[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    c[i] = (c[i] - c[i + 1]) / d[i];
    z[i] = (z[i] - z[i + 1]) / d[i];
  }
  double vy = c[0] + c[n - 1] / gamma;
  double vz = z[0] + z[n - 1] / gamma;
  double f = vy / (1.0 + vz);
  for (int i = 0; i < n; ++i) c[i] -= f * z[i];
}

void prefilter_notaknot(const double* f, int n, double* c, double* scratch) {
  assert(n >= 6);
  // Third-derivative continuity across the second and the second-to-last
  // node pins the two extra coefficients. Eliminating them gives
  //   c[1]   = (8 f[1]   - f[0]   - f[2])   / 6
  //   c[n-2] = (8 f[n-2] - f[n-3] - f[n-1]) / 6
  // and the remaining unknowns (c0, c2..c_{n-3}, c_{n-1}) form a tridiagonal
  // chain from the interpolation rows i = 1..n-2.
  const double c1 = (8.0 * f[1] - f[0] - f[2]) / 6.0;
  const double cm = (8.0 * f[n - 2] - f[n - 3] - f[n - 1]) / 6.0;

  int m = n - 2;            // unknowns: y0=c0, y1=c2, ..., y_{m-2}=c_{n-3}, y_{m-1}=c_{n-1}
  double* d = scratch;      // m diag
  double* r = scratch + n;  // m rhs
  d[0] = 1.0;
  r[0] = 6.0 * f[1] - 4.0 * c1;  // row i=1: c0 + 4 c1 + c2 = 6 f1
  for (int i = 2; i <= n - 3; ++i) {
    d[i - 1] = 4.0;
    r[i - 1] = 6.0 * f[i];
  }
  r[1] -= c1;       // row i=2 contains known c1
  r[m - 2] -= cm;   // row i=n-3 contains known c_{n-2}
  d[m - 1] = 1.0;
  r[m - 1] = 6.0 * f[n - 2] - 4.0 * cm;  // row i=n-2: c_{n-3} + 4 c_{n-2} + c_{n-1}

  // The first/last rows have zero sub/super coupling into the chain interior
  // on one side only; the generic Thomas pass below handles the actual
  // structure because the assembled matrix is tri(1, d, 1) except that rows
  // 0/1 and m-2/m-1 couple with coefficient 0 where the eliminated unknowns
  // sat. Assemble explicit off-diagonals instead.
  // sub[i]: coefficient of y[i-1] in row i; sup[i]: coefficient of y[i+1].
  double* sub = scratch + 2 * n;
  double* sup = scratch + 3 * n;
  for (int i = 0; i < m; ++i) {
    sub[i] = 1.0;
    sup[i] = 1.0;
  }
  sub[1] = 0.0;      // row i=2: c1 known, no coupling to y0=c0
  sup[m - 2] = 0.0;  // row i=n-3: c_{n-2} known, no coupling to y_{m-1}

  for (int i = 1; i < m; ++i) {
    double mult = sub[i] / d[i - 1];
    d[i] -= mult * sup[i - 1];
    r[i] -= mult * r[i - 1];
  }
  r[m - 1] /= d[m - 1];
  for (int i = m - 2; i >= 0; --i) r[i] = (r[i] - sup[i] * r[i + 1]) / d[i];

  // Scatter into the c[-1..n] layout (storage offset +1).
  c[0 + 1] = r[0];  // c0
  c[1 + 1] = c1;
  for (int i = 2; i <= n - 3; ++i) c[i + 1] = r[i - 1];
  c[n - 2 + 1] = cm;
  c[n - 1 + 1] = r[m - 1];
  // Boundary coefficients from the interpolation rows i=0 and i=n-1.
  c[0] = 6.0 * f[0] - 4.0 * c[1] - c[2];              // c_{-1}
  c[n + 1] = 6.0 * f[n - 1] - 4.0 * c[n] - c[n - 1];  // c_n
}

double eval_periodic(const double* c, int n, double pos) {
  double fl = std::floor(pos);
  double u = pos - fl;
  long j = static_cast<long>(fl);
  double w[4];
  bspline_weights(u, w);
  double s = 0.0;
  for (int k = 0; k < 4; ++k) {
    long idx = (j - 1 + k) % n;
    if (idx < 0) idx += n;
    s += w[k] * c[idx];
  }
  return s;
}

double eval_notaknot(const double* c, int n, double pos) {
  // Interval index clamped to [0, n-2]; outside points use the end cubic.
  double fl = std::floor(pos);
  long j = static_cast<long>(fl);
  if (j < 0) j = 0;
  if (j > n - 2) j = n - 2;
  double u = pos - static_cast<double>(j);
  double w[4];
  bspline_weights(u, w);
  const double* base = c + j;  // c[j-1] at storage index j
  return w[0] * base[0] + w[1] * base[1] + w[2] * base[2] + w[3] * base[3];
}

}  // namespace svp::spline
