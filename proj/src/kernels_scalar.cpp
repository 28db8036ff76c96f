#include "wpt/kernels.hpp"

// Reference kernels: plain loops, one accumulator, no reassociation. The
// SIMD variants are tested against these.

namespace wpt::kernels {
namespace {

double dot_s(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_s(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double sumsq_s(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sqdiff_sum_s(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void axpy_s(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void matvec_s(const double* a, std::size_t rows, std::size_t cols, const double* x,
              double* y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = dot_s(a + i * cols, x, cols);
}

void matvec_t_s(const double* a, std::size_t rows, std::size_t cols, const double* x,
                double* y) {
  for (std::size_t j = 0; j < cols; ++j) y[j] = 0.0;
  for (std::size_t i = 0; i < rows; ++i) axpy_s(x[i], a + i * cols, y, cols);
}

void ger_s(const double* g, std::size_t rows, const double* a, std::size_t cols,
           double* mat) {
  for (std::size_t i = 0; i < rows; ++i) axpy_s(g[i], a, mat + i * cols, cols);
}

void sqdist2_s(double px, double py, const double* xs, const double* ys, std::size_t n,
               double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = px - xs[i];
    const double dy = py - ys[i];
    out[i] = dx * dx + dy * dy;
  }
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar",   dot_s,      sum_s, sumsq_s, sqdiff_sum_s,
                               axpy_s,     matvec_s,   matvec_t_s,
                               ger_s,      sqdist2_s};
  return backend;
}

}  // namespace wpt::kernels
