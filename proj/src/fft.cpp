#include "qcolor/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace qcolor::fft {

namespace {

// The FFTW planner is not thread-safe; execution of an existing plan on new
// arrays is. FFTW_UNALIGNED keeps the codelet choice independent of buffer
// alignment, so results do not depend on where a vector was allocated.
class PlanCache {
 public:
  fftw_plan get(int n, Direction dir) {
    std::lock_guard lock(mu_);
    const auto key = std::make_pair(n, dir);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto* scratch = fftw_alloc_complex(static_cast<std::size_t>(n));
    const int sign = dir == Direction::kForward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan =
        fftw_plan_dft_1d(n, scratch, scratch, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, Direction>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void transform(std::span<std::complex<double>> data, Direction dir) {
  if (data.size() <= 1) return;
  fftw_plan plan = cache().get(static_cast<int>(data.size()), dir);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace qcolor::fft
