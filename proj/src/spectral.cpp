#include "curveflow/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "curveflow/errors.hpp"

namespace curveflow {

struct SpectralGrid::Plans {
    double* real;
    fftw_complex* spec;
    fftw_plan r2c;
    fftw_plan c2r;
};

SpectralGrid::SpectralGrid(std::size_t n, double length) : n_(n), length_(length) {
    if (n < 4) throw DegenerateGridError("spectral grid needs at least 4 samples");
    if (!(length > 0.0)) throw DegenerateGridError("spectral grid needs positive length");
    plans_ = new Plans;
    plans_->real = fftw_alloc_real(n_);
    plans_->spec = fftw_alloc_complex(modes());
    plans_->r2c = fftw_plan_dft_r2c_1d(static_cast<int>(n_), plans_->real, plans_->spec,
                                       FFTW_ESTIMATE);
    plans_->c2r = fftw_plan_dft_c2r_1d(static_cast<int>(n_), plans_->spec, plans_->real,
                                       FFTW_ESTIMATE);
}

SpectralGrid::~SpectralGrid() {
    fftw_destroy_plan(plans_->c2r);
    fftw_destroy_plan(plans_->r2c);
    fftw_free(plans_->spec);
    fftw_free(plans_->real);
    delete plans_;
}

double SpectralGrid::omega(std::size_t j) const noexcept {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / length_;
}

void SpectralGrid::forward(std::span<const double> in, std::complex<double>* out) const {
    std::memcpy(plans_->real, in.data(), n_ * sizeof(double));
    fftw_execute(plans_->r2c);
    std::memcpy(out, plans_->spec, modes() * sizeof(fftw_complex));
}

void SpectralGrid::inverse(const std::complex<double>* in, std::span<double> out) const {
    std::memcpy(plans_->spec, in, modes() * sizeof(fftw_complex));
    fftw_execute(plans_->c2r);
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = plans_->real[i] * scale;
}

std::vector<double> SpectralGrid::derivative(std::span<const double> in, unsigned order) const {
    if (in.size() != n_) throw DegenerateGridError("sample count does not match grid");
    if (order == 0) return {in.begin(), in.end()};
    std::vector<std::complex<double>> spec(modes());
    forward(in, spec.data());
    for (std::size_t j = 0; j < modes(); ++j) {
        std::complex<double> factor{0.0, omega(j)};
        std::complex<double> mult = 1.0;
        for (unsigned m = 0; m < order; ++m) mult *= factor;
        spec[j] *= mult;
    }
    if (order % 2 == 1 && n_ % 2 == 0) spec[n_ / 2] = 0.0;  // unmatched Nyquist mode
    std::vector<double> out(n_);
    inverse(spec.data(), out);
    return out;
}

double SpectralGrid::mean(std::span<const double> in) const {
    double sum = 0.0;
    for (double x : in) sum += x;
    return sum / static_cast<double>(in.size());
}

std::vector<double> SpectralGrid::cumulative_impl(std::span<const double> in, bool half) const {
    if (in.size() != n_) throw DegenerateGridError("sample count does not match grid");
    std::vector<std::complex<double>> spec(modes());
    forward(in, spec.data());
    const double avg = spec[0].real() / static_cast<double>(n_);
    spec[0] = 0.0;
    for (std::size_t j = 1; j < modes(); ++j) spec[j] /= std::complex<double>{0.0, omega(j)};
    if (n_ % 2 == 0) spec[n_ / 2] = 0.0;

    // Anchor: value of the fluctuation antiderivative at s = 0 (real part of
    // the full-spectrum sum, from the half spectrum).
    double f0 = 0.0;
    for (std::size_t j = 1; j < modes(); ++j) {
        const double weight = (n_ % 2 == 0 && j == n_ / 2) ? 1.0 : 2.0;
        f0 += weight * spec[j].real();
    }
    f0 /= static_cast<double>(n_);

    if (half) {
        const double shift = 0.5 * spacing();
        for (std::size_t j = 1; j < modes(); ++j)
            spec[j] *= std::exp(std::complex<double>{0.0, omega(j) * shift});
    }
    std::vector<double> fluct(n_);
    inverse(spec.data(), fluct);

    const double h = spacing();
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const double s = (static_cast<double>(i) + (half ? 0.5 : 0.0)) * h;
        out[i] = avg * s + fluct[i] - f0;
    }
    return out;
}

std::vector<double> SpectralGrid::cumulative(std::span<const double> in) const {
    return cumulative_impl(in, false);
}

std::vector<double> SpectralGrid::cumulative_half(std::span<const double> in) const {
    return cumulative_impl(in, true);
}

}  // namespace curveflow
