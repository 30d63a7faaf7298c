// Thin FFTW wrapper: cached plans (created under a lock, executed via the
// thread-safe new-array interface) plus aligned scratch buffers.
//
// All transforms are power-of-two sized and planned with FFTW_ESTIMATE so
// results are reproducible run to run.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace svp::fft {

// Aligned buffer backed by fftw_malloc; usable with cached plans from any thread.
template <class T>
class AlignedBuf {
 public:
  AlignedBuf() = default;
  explicit AlignedBuf(std::size_t n) { resize(n); }
  ~AlignedBuf() { release(); }
  AlignedBuf(const AlignedBuf&) = delete;
  AlignedBuf& operator=(const AlignedBuf&) = delete;
  AlignedBuf(AlignedBuf&& o) noexcept : p_(o.p_), n_(o.n_) { o.p_ = nullptr; o.n_ = 0; }
  AlignedBuf& operator=(AlignedBuf&& o) noexcept {
    if (this != &o) { release(); p_ = o.p_; n_ = o.n_; o.p_ = nullptr; o.n_ = 0; }
    return *this;
  }
  void resize(std::size_t n);
  T* data() { return p_; }
  const T* data() const { return p_; }
  T& operator[](std::size_t i) { return p_[i]; }
  const T& operator[](std::size_t i) const { return p_[i]; }
  std::size_t size() const { return n_; }

 private:
  void release();
  T* p_ = nullptr;
  std::size_t n_ = 0;
};

using Cplx = std::complex<double>;

// Complex transforms, rank 1 or 2 (n1 = 0 for rank 1). sign: -1 forward, +1
// backward. Unnormalized (caller divides by the transform size).
void c2c(int n0, int n1, Cplx* in, Cplx* out, int sign);

// Real-to-complex / complex-to-real, rank 1 or 2. The complex array holds
// n0 x (n1/2+1) (rank 2) or n0/2+1 (rank 1) entries. c2r destroys `in`.
void r2c(int n0, int n1, double* in, Cplx* out);
void c2r(int n0, int n1, Cplx* in, double* out);

// Planning ahead of a parallel section (optional; plans are also created
// lazily under a lock).
void warm_plans(int n0, int n1);

}  // namespace svp::fft
