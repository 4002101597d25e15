// fft.hpp — discrete Fourier transform contract, backed by FFTW3.
//
// Conventions:
//   forward_fft : unnormalized DFT, F[m] = sum_j f[j] exp(-2πi j·m / n)
//                 (a constant field c has DC coefficient c·n², zeros elsewhere)
//   inverse_fft : inverse with the 1/n² factor, so inverse∘forward = id.
//
// Plans are created once per grid size with FFTW_ESTIMATE (deterministic,
// no runtime measurement) and cached.  fftw_execute_dft on a cached plan
// with fresh buffers is reentrant; plan creation is serialized by a mutex,
// so fields may be transformed concurrently from multiple threads.

#pragma once

#include <fftw3.h>

#include <map>
#include <mutex>

#include "beltrami/grid.hpp"

namespace beltrami {

namespace detail {

class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    // direction: FFTW_FORWARD or FFTW_BACKWARD
    fftw_plan get(int n, int direction) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, direction);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        // Plan on a scratch buffer; FFTW_UNALIGNED keeps the plan valid for
        // any properly sized new-array execution.
        std::vector<Complex> scratch(static_cast<std::size_t>(n) * n);
        auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_2d(n, n, ptr, ptr, direction,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

  private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

inline void execute_dft(const Grid& g, const std::vector<Complex>& in,
                        std::vector<Complex>& out, int direction) {
    fftw_plan p = PlanCache::instance().get(g.n, direction);
    auto* src = reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(p, src, dst);
}

} // namespace detail

/// Unnormalized forward DFT of the samples; result is a frequency-domain
/// GridField in FFT ordering (mode m at index m for m >= 0, n+m for m < 0).
inline GridField forward_fft(const GridField& f) {
    GridField out(f.grid);
    detail::execute_dft(f.grid, f.values, out.values, FFTW_FORWARD);
    return out;
}

/// Inverse DFT including the 1/n² normalization.
inline GridField inverse_fft(const GridField& spectrum) {
    GridField out(spectrum.grid);
    detail::execute_dft(spectrum.grid, spectrum.values, out.values, FFTW_BACKWARD);
    const double scale = 1.0 / (static_cast<double>(spectrum.grid.n) * spectrum.grid.n);
    for (Complex& v : out.values) v *= scale;
    return out;
}

} // namespace beltrami
