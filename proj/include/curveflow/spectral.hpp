#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace curveflow {

/// Fourier workhorse for one periodic grid of n samples over [0, length).
/// Owns FFTW plans and scratch buffers; not safe for concurrent use from
/// multiple threads, create one per worker instead.
class SpectralGrid {
public:
    SpectralGrid(std::size_t n, double length);
    ~SpectralGrid();

    SpectralGrid(const SpectralGrid&) = delete;
    SpectralGrid& operator=(const SpectralGrid&) = delete;

    std::size_t size() const noexcept { return n_; }
    double length() const noexcept { return length_; }
    double spacing() const noexcept { return length_ / static_cast<double>(n_); }
    std::size_t modes() const noexcept { return n_ / 2 + 1; }

    /// Angular frequency of mode j.
    double omega(std::size_t j) const noexcept;

    void forward(std::span<const double> in, std::complex<double>* out) const;
    void inverse(const std::complex<double>* in, std::span<double> out) const;  // normalized

    /// order-th spectral derivative (odd orders zero the Nyquist mode).
    std::vector<double> derivative(std::span<const double> in, unsigned order) const;

    double mean(std::span<const double> in) const;

    /// Cumulative integral int_0^{s_j} f at the nodes (j = 0..n-1): linear part
    /// mean*s plus the periodic antiderivative of the fluctuation.
    std::vector<double> cumulative(std::span<const double> in) const;
    /// Same at the half nodes s_j + h/2.
    std::vector<double> cumulative_half(std::span<const double> in) const;

private:
    std::vector<double> cumulative_impl(std::span<const double> in, bool half) const;

    std::size_t n_;
    double length_;
    struct Plans;
    Plans* plans_;
};

}  // namespace curveflow
