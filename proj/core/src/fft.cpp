// Internal FFTW-backed transforms. Plans are cached per grid size and reuse a
// single aligned buffer, so calls are serialized by a mutex; FFTW_ESTIMATE
// keeps plan selection deterministic across runs.

#include <fftw3.h>

#include <complex>
#include <cstring>
#include <map>
#include <mutex>
#include <vector>

#include "tdflow/errors.hpp"
#include "tdflow/grid.hpp"

namespace tdflow {
namespace detail {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  fftw_complex* buf = nullptr;
  std::size_t size = 0;
};

std::mutex g_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

PlanPair& plans_for(int n) {
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PlanPair p;
  p.size = static_cast<std::size_t>(n) * n;
  p.buf = fftw_alloc_complex(p.size);
  p.forward = fftw_plan_dft_2d(n, n, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
  p.backward = fftw_plan_dft_2d(n, n, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  return cache.emplace(n, p).first->second;
}

}  // namespace

void dft2d(const std::complex<double>* in, std::complex<double>* out, int n, bool forward) {
  std::lock_guard<std::mutex> lock(g_mutex);
  PlanPair& p = plans_for(n);
  std::memcpy(p.buf, in, p.size * sizeof(fftw_complex));
  fftw_execute(forward ? p.forward : p.backward);
  std::memcpy(out, p.buf, p.size * sizeof(fftw_complex));
}

}  // namespace detail
}  // namespace tdflow
