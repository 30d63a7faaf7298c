#include "svp/common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace svp {

double jbracket(double t) { return std::sqrt(1.0 + t * t); }

namespace {

double pairwise_sum_impl(const double* x, std::int64_t n) {
  if (n <= 256) {
    double s = 0.0;
    for (std::int64_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  std::int64_t half = n / 2;
  return pairwise_sum_impl(x, half) + pairwise_sum_impl(x + half, n - half);
}

std::atomic<int> g_threads{0};  // 0 = use hardware_concurrency

constexpr std::int64_t kReduceChunk = 8192;
constexpr std::int64_t kMinParallel = 4096;

}  // namespace

double pairwise_sum(std::span<const double> x) {
  return pairwise_sum_impl(x.data(), static_cast<std::int64_t>(x.size()));
}

int thread_count() {
  int t = g_threads.load();
  if (t > 0) return t;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_thread_count(int n) { g_threads.store(n); }

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& f) {
  if (n <= 0) return;
  int nt = thread_count();
  if (nt <= 1 || n < kMinParallel) {
    f(0, n);
    return;
  }
  nt = static_cast<int>(std::min<std::int64_t>(nt, n));
  std::vector<std::thread> pool;
  pool.reserve(nt - 1);
  std::int64_t per = (n + nt - 1) / nt;
  for (int t = 1; t < nt; ++t) {
    std::int64_t b = t * per, e = std::min<std::int64_t>(n, (t + 1) * per);
    if (b >= e) break;
    pool.emplace_back([&f, b, e] { f(b, e); });
  }
  f(0, std::min<std::int64_t>(per, n));
  for (auto& th : pool) th.join();
}

double parallel_reduce_sum(std::int64_t n,
                           const std::function<double(std::int64_t, std::int64_t)>& chunk_sum) {
  if (n <= 0) return 0.0;
  std::int64_t nchunks = (n + kReduceChunk - 1) / kReduceChunk;
  std::vector<double> partial(static_cast<std::size_t>(nchunks));
  parallel_for(nchunks, [&](std::int64_t c0, std::int64_t c1) {
    for (std::int64_t c = c0; c < c1; ++c) {
      std::int64_t b = c * kReduceChunk;
      std::int64_t e = std::min<std::int64_t>(n, b + kReduceChunk);
      partial[static_cast<std::size_t>(c)] = chunk_sum(b, e);
    }
  });
  return pairwise_sum(partial);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // Newton iteration on Legendre polynomials; standard Golub-Welsch alternative
  // is unnecessary at these sizes.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

}  // namespace svp
