// SPDX-License-Identifier: Apache-2.0
#include "mraseed/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace mraseed {
namespace {

// FFTW planning is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<cplx> run_plan(const std::vector<cplx>& in, int rank, const int* dims, int sign) {
    std::vector<cplx> out(in.size());
    if (in.empty()) return out;
    std::vector<cplx> work(in);
    auto* src = reinterpret_cast<fftw_complex*>(work.data());
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft(rank, dims, src, dst, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("fftw: planning failed");
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& in, int sign) {
    const int n = static_cast<int>(in.size());
    return run_plan(in, 1, &n, sign);
}

std::vector<cplx> dft2(const std::vector<cplx>& in, std::size_t n0, std::size_t n1, int sign) {
    if (in.size() != n0 * n1) throw std::invalid_argument("dft2: size mismatch");
    const int dims[2] = {static_cast<int>(n0), static_cast<int>(n1)};
    return run_plan(in, 2, dims, sign);
}

std::vector<cplx> trig_sum_on_grid(const std::vector<cplx>& x, long offset, double w0,
                                   std::size_t M, std::size_t count, int sign) {
    if (count > M) throw std::invalid_argument("trig_sum_on_grid: count exceeds M");
    std::vector<cplx> folded(M, cplx{});
    const long m = static_cast<long>(M);
    const double s = sign < 0 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const long n = offset + static_cast<long>(k);
        const double theta = s * w0 * static_cast<double>(n);
        folded[static_cast<std::size_t>(((n % m) + m) % m)] += x[k] * std::polar(1.0, theta);
    }
    auto full = dft(folded, sign);
    full.resize(count);
    return full;
}

}  // namespace mraseed
