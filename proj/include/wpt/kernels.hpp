#pragma once

#include <cstddef>
#include <string>

namespace wpt::kernels {

// Data-parallel inner loops behind the models, the outlier detector and the
// evaluator. Every entry point has a scalar reference implementation; the
// AVX2 variants are selected at runtime from CPU capabilities and are
// equivalence-tested against the scalar ones (reassociation changes results
// only in the last few ulps, see tests/unit/test_kernels.cpp).
//
// Matrices are row-major. All pointers may be unaligned; n may be 0.
struct Backend {
  const char* name;

  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  double (*sumsq)(const double* a, std::size_t n);
  // sum of (a[i] - b[i])^2
  double (*sqdiff_sum)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y = A x  with A rows x cols
  void (*matvec)(const double* a, std::size_t rows, std::size_t cols, const double* x,
                 double* y);
  // y = A^T x (y has cols entries, x has rows entries)
  void (*matvec_t)(const double* a, std::size_t rows, std::size_t cols, const double* x,
                   double* y);
  // A += g a^T  (rank-1 accumulate; g rows entries, a cols entries)
  void (*ger)(const double* g, std::size_t rows, const double* a, std::size_t cols,
              double* mat);
  // out[i] = (px - xs[i])^2 + (py - ys[i])^2
  void (*sqdist2)(double px, double py, const double* xs, const double* ys, std::size_t n,
                  double* out);
};

const Backend& scalar_backend();

/// True when the CPU supports AVX2+FMA and this build carries the AVX2 TU.
bool avx2_supported();

/// AVX2 backend; falls back to the scalar backend when unsupported.
const Backend& avx2_backend();

/// Process-wide active backend. Chosen once on first use: the WPT_KERNEL
/// environment variable (scalar|avx2|auto) overrides CPU detection.
const Backend& active();

/// Rebind the active backend ("scalar", "avx2", "auto"). Intended for tests;
/// not safe while other threads are inside kernels.
void force(const std::string& name);

}  // namespace wpt::kernels
