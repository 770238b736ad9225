#include <cmath>

#include "curveflow/diffpoly.hpp"
#include "curveflow/spectral.hpp"

namespace curveflow {

std::vector<double> evaluate(const DiffPoly& p, std::span<const double> k_samples, double h,
                             double g_value) {
    const std::size_t n = k_samples.size();
    if (n < 4) throw DegenerateGridError("evaluate needs at least 4 samples");
    if (!(h > 0.0)) throw DegenerateGridError("evaluate needs positive grid spacing");

    const unsigned top = p.max_order();
    SpectralGrid grid(n, h * static_cast<double>(n));
    std::vector<std::vector<double>> deriv(top + 1);
    for (unsigned m = 0; m <= top; ++m) deriv[m] = grid.derivative(k_samples, m);

    std::vector<double> out(n, 0.0);
    for (const auto& [mono, coeff] : p.terms()) {
        double base = to_double(coeff);
        for (unsigned i = 0; i < mono.g_power(); ++i) base *= g_value;
        if (base == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            double value = base;
            for (const auto& [order, exp] : mono.factors())
                value *= std::pow(deriv[order][i], static_cast<int>(exp));
            out[i] += value;
        }
    }
    return out;
}

}  // namespace curveflow
