#include "declab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace declab {

namespace {

struct PlanCache {
    std::mutex mtx;
    std::map<std::pair<std::vector<int>, int>, fftw_plan> plans;

    fftw_plan get(const std::vector<int>& dims, int sign) {
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(dims, sign);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;

        std::size_t n = 1;
        for (int d : dims) n *= static_cast<std::size_t>(d);
        // Plan on scratch storage; FFTW_UNALIGNED lets the plan run on any
        // buffers passed to fftw_execute_dft later.
        fftw_complex* scratch = fftw_alloc_complex(n);
        fftw_plan p = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(),
                                    scratch, scratch, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(scratch);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans.emplace(std::move(key), p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

} // namespace

void dft(const std::vector<int>& dims, const cplx* in, cplx* out, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("dft: sign must be +-1");
    fftw_plan p = cache().get(dims, sign);
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

void dft_inplace(const std::vector<int>& dims, std::vector<cplx>& data, int sign) {
    dft(dims, data.data(), data.data(), sign);
}

} // namespace declab
