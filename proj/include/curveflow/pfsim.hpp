#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "curveflow/derivation.hpp"
#include "curveflow/spectral.hpp"

namespace curveflow {

using Vec2 = std::array<double, 2>;

/// Periodic curvature samples on a uniform grid of total arc length `length`.
struct CurvatureState {
    std::vector<double> samples;
    double length = 0.0;
    double time = 0.0;

    CurvatureState() = default;
    CurvatureState(std::vector<double> samples, double length, double time = 0.0);

    std::size_t size() const noexcept { return samples.size(); }
    double spacing() const noexcept { return length / static_cast<double>(samples.size()); }
};

/// Curvature evolution k_t = a(k, k', ...) evaluated pseudo-spectrally at G = 0.
std::vector<double> flow_rhs(const Characteristic& a, const CurvatureState& state);

/// Time stepper for one characteristic on one grid: the part of the flow that
/// is linear in k is integrated exactly in Fourier space (integrating factor),
/// the rest with classical RK4.  Reuse one stepper across steps; plans and the
/// split of the characteristic are made once.
class FlowStepper {
public:
    FlowStepper(Characteristic a, std::size_t n, double length);
    ~FlowStepper();

    FlowStepper(const FlowStepper&) = delete;
    FlowStepper& operator=(const FlowStepper&) = delete;

    /// Advances by dt; throws BlowupError when non-finite samples appear.
    CurvatureState step(const CurvatureState& state, double dt) const;

    const Characteristic& characteristic() const noexcept { return a_; }

private:
    Characteristic a_;
    DiffPoly nonlinear_;
    std::vector<std::pair<unsigned, double>> linear_;  // (order, coefficient)
    std::unique_ptr<SpectralGrid> grid_;
    struct Work;
    std::unique_ptr<Work> work_;
};

/// Convenience single-shot step.
CurvatureState step(const CurvatureState& state, const Characteristic& a, double dt);

/// Plane curve rebuilt from curvature: tangent angles by spectral quadrature
/// of k, positions by the midpoint-tangent polygon, so consecutive chords have
/// length h exactly.
struct PlaneCurve {
    std::vector<Vec2> points;        // N vertices
    std::vector<double> theta;       // tangent angle at the vertices
    std::vector<double> theta_half;  // segment directions (at s_j + h/2)
    double spacing = 0.0;
    double theta0 = 0.0;
    Vec2 origin{0.0, 0.0};
    double closure_gap = 0.0;  // |gamma_N - gamma_0| over the closing segment

    /// Max relative deviation of consecutive chord lengths from the grid
    /// spacing.
    double unit_speed_error() const;
};

PlaneCurve reconstruct(const CurvatureState& state, double theta0, Vec2 origin);

/// Reconstruction gauge: tangent angle and position at s = 0.
struct Gauge {
    double theta0 = 0.0;
    Vec2 origin{0.0, 0.0};
};

/// One trapezoidal update of the gauge ODE d(theta0)/dt = phi(0),
/// d(origin)/dt = (1/2 k^2 T + k' N)(0) between two consecutive states.
Gauge advance_gauge(const CurvatureState& before, const CurvatureState& after, const Gauge& gauge);

/// The planar filament velocity field 1/2 k^2 T + k' N at the grid nodes of a
/// reconstructed curve.
std::vector<Vec2> pf_velocity_field(const CurvatureState& state, const PlaneCurve& curve);

struct VelocityResidualReport {
    double max_residual = 0.0;
    double rms_residual = 0.0;
    double rms_tangential = 0.0;
    double rms_normal = 0.0;
    std::size_t compared_states = 0;
};

/// Central-difference curve velocity against the symbolic PF field, frames
/// reconstructed with a consistently evolved gauge.  Throws GaugeDriftError
/// when the residual is both large and explained by a rigid motion (a gauge
/// inconsistency, not a field error).
VelocityResidualReport verify_pf_velocity(const std::vector<CurvatureState>& states, double theta0,
                                          Vec2 origin, double gauge_tolerance = 1e-2);

/// Same check with caller-provided gauges (one per state), e.g. the ones a
/// simulation run evolved alongside the states.
VelocityResidualReport verify_pf_velocity(const std::vector<CurvatureState>& states,
                                          const std::vector<Gauge>& gauges,
                                          double gauge_tolerance = 1e-2);

struct ConservedSeries {
    std::vector<double> time;
    std::vector<double> h0;       // int 1/2 k^2 ds
    std::vector<double> h1;       // int (1/2 k'^2 - 1/8 k^4) ds
    std::vector<double> turning;  // int k ds

    double max_drift(const std::vector<double>& series) const;
    double relative_drift(const std::vector<double>& series) const;
};

ConservedSeries conserved_report(const std::vector<CurvatureState>& trajectory);

}  // namespace curveflow
