// Shared error types, tolerances, deterministic reductions and the thread pool
// contract used by every module.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace svp {

// Errors carry a short machine-readable code next to the human message.
// ValidationError: bad inputs/config, detected before any work starts.
// RuntimeAbort: a guard tripped mid-run (pad_guard, support_margin, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class RuntimeAbort : public Error {
 public:
  using Error::Error;
};

// Numerical guard constants. All defaults are config-overridable.
struct Tolerances {
  double boundary_tol = 1e-10;      // max |value| allowed on guarded boundary layers
  double interp_tol = 1e-6;         // off-grid interpolation agreement
  double spectral_roundoff = 1e-12; // spectral round-trip error budget
  double spectral_floor = 1e-13;    // relative amplitude below which spectral modes
                                    // are treated as roundoff noise in high-order
                                    // derivative series
  int padding_cells = 16;           // required support margin for periodic solves
  double t_switch = 1.0;            // density evaluation switches to the rescaled
                                    // formula for t > t_switch
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline int next_power_of_two(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Japanese bracket <t> = (1+t^2)^(1/2); the single bracket convention.
double jbracket(double t);

// Deterministic pairwise (tree) summation. Result depends only on the data,
// never on thread count or chunking.
double pairwise_sum(std::span<const double> x);

// --- threading ---------------------------------------------------------
// Global worker count. Loops are partitioned into fixed-size chunks keyed by
// problem size so reductions are run-to-run identical at any thread count.
int thread_count();
void set_thread_count(int n);

// f(begin, end) over disjoint ranges covering [0, n).
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& f);

// Chunked deterministic reduction: partial sums are computed per fixed chunk
// and combined pairwise in chunk order.
double parallel_reduce_sum(std::int64_t n,
                           const std::function<double(std::int64_t, std::int64_t)>& chunk_sum);

// --- quadrature helpers -------------------------------------------------
// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace svp
