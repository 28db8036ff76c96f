#include "wpt/kernels.hpp"

#include <cstdlib>

#include "wpt/error.hpp"

namespace wpt::kernels {

bool avx2_supported() {
#if defined(WPT_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#if !defined(WPT_HAVE_AVX2)
const Backend& avx2_backend() { return scalar_backend(); }
#endif

namespace {

const Backend* detect() {
  return avx2_supported() ? &avx2_backend() : &scalar_backend();
}

const Backend* initial() {
  if (const char* env = std::getenv("WPT_KERNEL")) {
    const std::string v = env;
    if (v == "scalar") return &scalar_backend();
    if (v == "avx2" && avx2_supported()) return &avx2_backend();
    // "auto" or anything unusable falls through to detection
  }
  return detect();
}

const Backend*& active_slot() {
  static const Backend* slot = initial();
  return slot;
}

}  // namespace

const Backend& active() { return *active_slot(); }

void force(const std::string& name) {
  if (name == "scalar") {
    active_slot() = &scalar_backend();
  } else if (name == "avx2") {
    if (!avx2_supported())
      throw Error(errc::invalid_params, "avx2 kernels not supported on this CPU/build");
    active_slot() = &avx2_backend();
  } else if (name == "auto") {
    active_slot() = detect();
  } else {
    throw Error(errc::invalid_params, "unknown kernel backend '" + name + "'");
  }
}

}  // namespace wpt::kernels
