#include "hydrolim/fourier.hpp"

#include <fftw3.h>

#include <mutex>

namespace hydrolim {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution on distinct
// buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

struct FourierWorkspace::Impl {
    fftw_complex* buf = nullptr;
    fftw_complex* buf2d = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    fftw_plan fwd2d = nullptr;
    fftw_plan bwd2d = nullptr;
};

FourierWorkspace::FourierWorkspace(const Grid& grid)
    : grid_(grid), impl_(std::make_unique<Impl>()) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    impl_->buf = fftw_alloc_complex(grid.size());
    impl_->buf2d = fftw_alloc_complex(grid.size_2d());
    // FFTW_ESTIMATE: deterministic plan choice, no timing-driven search.
    impl_->fwd = fftw_plan_dft_3d(grid.nx(), grid.ny(), grid.nz(), impl_->buf, impl_->buf,
                                  FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_3d(grid.nx(), grid.ny(), grid.nz(), impl_->buf, impl_->buf,
                                  FFTW_BACKWARD, FFTW_ESTIMATE);
    impl_->fwd2d = fftw_plan_dft_2d(grid.nx(), grid.ny(), impl_->buf2d, impl_->buf2d,
                                    FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd2d = fftw_plan_dft_2d(grid.nx(), grid.ny(), impl_->buf2d, impl_->buf2d,
                                    FFTW_BACKWARD, FFTW_ESTIMATE);
}

FourierWorkspace::~FourierWorkspace() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(impl_->fwd);
    fftw_destroy_plan(impl_->bwd);
    fftw_destroy_plan(impl_->fwd2d);
    fftw_destroy_plan(impl_->bwd2d);
    fftw_free(impl_->buf);
    fftw_free(impl_->buf2d);
}

void FourierWorkspace::to_physical(const SpectralField& f, std::vector<double>& out) {
    require_same_grid(grid_, f.grid(), "FourierWorkspace::to_physical");
    const std::size_t n = grid_.size();
    out.resize(n);
    const Complex* c = f.data();
    for (std::size_t i = 0; i < n; ++i) {
        impl_->buf[i][0] = c[i].real();
        impl_->buf[i][1] = c[i].imag();
    }
    // Backward transform = plain sum over modes, matching the expansion.
    fftw_execute(impl_->bwd);
    for (std::size_t i = 0; i < n; ++i) out[i] = impl_->buf[i][0];
}

SpectralField FourierWorkspace::to_spectral(const std::vector<double>& values, Parity parity) {
    const std::size_t n = grid_.size();
    if (values.size() != n)
        throw GridMismatchError("FourierWorkspace::to_spectral: value count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        impl_->buf[i][0] = values[i];
        impl_->buf[i][1] = 0.0;
    }
    fftw_execute(impl_->fwd);
    SpectralField f(grid_, parity);
    const double inv = 1.0 / static_cast<double>(n);
    Complex* c = f.data();
    for (std::size_t i = 0; i < n; ++i)
        c[i] = Complex{impl_->buf[i][0] * inv, impl_->buf[i][1] * inv};
    return f;
}

void FourierWorkspace::to_physical_2d(const SpectralField2D& f, std::vector<double>& out) {
    require_same_grid(grid_, f.grid(), "FourierWorkspace::to_physical_2d");
    const std::size_t n = grid_.size_2d();
    out.resize(n);
    const Complex* c = f.data();
    for (std::size_t i = 0; i < n; ++i) {
        impl_->buf2d[i][0] = c[i].real();
        impl_->buf2d[i][1] = c[i].imag();
    }
    fftw_execute(impl_->bwd2d);
    for (std::size_t i = 0; i < n; ++i) out[i] = impl_->buf2d[i][0];
}

SpectralField2D FourierWorkspace::to_spectral_2d(const std::vector<double>& values) {
    const std::size_t n = grid_.size_2d();
    if (values.size() != n)
        throw GridMismatchError("FourierWorkspace::to_spectral_2d: value count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        impl_->buf2d[i][0] = values[i];
        impl_->buf2d[i][1] = 0.0;
    }
    fftw_execute(impl_->fwd2d);
    SpectralField2D f(grid_);
    const double inv = 1.0 / static_cast<double>(n);
    Complex* c = f.data();
    for (std::size_t i = 0; i < n; ++i)
        c[i] = Complex{impl_->buf2d[i][0] * inv, impl_->buf2d[i][1] * inv};
    return f;
}

}  // namespace hydrolim
