#include "svp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace svp::fft {

template <class T>
void AlignedBuf<T>::resize(std::size_t n) {
  release();
  if (n > 0) p_ = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  n_ = n;
}

template <class T>
void AlignedBuf<T>::release() {
  if (p_) fftw_free(p_);
  p_ = nullptr;
  n_ = 0;
}

template class AlignedBuf<double>;
template class AlignedBuf<Cplx>;

namespace {

// kind: 0 = c2c forward, 1 = c2c backward, 2 = r2c, 3 = c2r
using PlanKey = std::tuple<int, int, int>;

std::mutex g_mutex;
std::map<PlanKey, fftw_plan> g_plans;

fftw_plan get_plan(int n0, int n1, int kind) {
  PlanKey key{n0, n1, kind};
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_plans.find(key);
  if (it != g_plans.end()) return it->second;

  int rank = (n1 > 0) ? 2 : 1;
  int n[2] = {n0, n1 > 0 ? n1 : 1};
  std::size_t nr = static_cast<std::size_t>(n0) * (n1 > 0 ? n1 : 1);
  std::size_t nc = static_cast<std::size_t>(n0) * (n1 > 0 ? (n1 / 2 + 1) : 1);
  if (n1 == 0) nc = static_cast<std::size_t>(n0 / 2 + 1);

  fftw_plan p = nullptr;
  if (kind == 0 || kind == 1) {
    AlignedBuf<Cplx> a(nr), b(nr);
    p = fftw_plan_dft(rank, n, reinterpret_cast<fftw_complex*>(a.data()),
                      reinterpret_cast<fftw_complex*>(b.data()),
                      kind == 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  } else if (kind == 2) {
    AlignedBuf<double> a(nr);
    AlignedBuf<Cplx> b(nc);
    p = fftw_plan_dft_r2c(rank, n, a.data(), reinterpret_cast<fftw_complex*>(b.data()),
                          FFTW_ESTIMATE);
  } else {
    AlignedBuf<Cplx> a(nc);
    AlignedBuf<double> b(nr);
    p = fftw_plan_dft_c2r(rank, n, reinterpret_cast<fftw_complex*>(a.data()), b.data(),
                          FFTW_ESTIMATE);
  }
  g_plans.emplace(key, p);
  return p;
}

}  // namespace

void c2c(int n0, int n1, Cplx* in, Cplx* out, int sign) {
  fftw_plan p = get_plan(n0, n1, sign < 0 ? 0 : 1);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in), reinterpret_cast<fftw_complex*>(out));
}

void r2c(int n0, int n1, double* in, Cplx* out) {
  fftw_plan p = get_plan(n0, n1, 2);
  fftw_execute_dft_r2c(p, in, reinterpret_cast<fftw_complex*>(out));
}

void c2r(int n0, int n1, Cplx* in, double* out) {
  fftw_plan p = get_plan(n0, n1, 3);
  fftw_execute_dft_c2r(p, reinterpret_cast<fftw_complex*>(in), out);
}

void warm_plans(int n0, int n1) {
  get_plan(n0, n1, 0);
  get_plan(n0, n1, 1);
  get_plan(n0, n1, 2);
  get_plan(n0, n1, 3);
}

}  // namespace svp::fft
