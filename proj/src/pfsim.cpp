#include "curveflow/pfsim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "curveflow/errors.hpp"

namespace curveflow {

namespace {

// 1/2 k^3 + k'' = phi of the planar filament field, used by the gauge ODE.
const DiffPoly& pf_phi() {
    static const DiffPoly phi =
        DiffPoly::k(2) + DiffPoly::term(Rational(1, 2), Monomial::k(0, 3));
    return phi;
}

void check_finite(const std::vector<double>& samples, const char* what) {
    for (double x : samples)
        if (!std::isfinite(x)) throw BlowupError(std::string(what) + ": non-finite samples");
}

}  // namespace

CurvatureState::CurvatureState(std::vector<double> samples_, double length_, double time_)
    : samples(std::move(samples_)), length(length_), time(time_) {
    if (samples.size() < 16 || samples.size() % 2 != 0)
        throw DegenerateGridError("curvature grid needs an even sample count >= 16");
    if (!(length > 0.0)) throw DegenerateGridError("curvature grid needs positive length");
    check_finite(samples, "curvature state");
}

std::vector<double> flow_rhs(const Characteristic& a, const CurvatureState& state) {
    return evaluate(a.generator_image(), state.samples, state.spacing(), 0.0);
}

struct FlowStepper::Work {
    std::vector<std::complex<double>> factor_half;   // exp(lambda dt/2), cached per dt
    std::vector<std::complex<double>> factor_full;
    double cached_dt = -1.0;
};

FlowStepper::FlowStepper(Characteristic a, std::size_t n, double length)
    : a_(std::move(a)), grid_(std::make_unique<SpectralGrid>(n, length)),
      work_(std::make_unique<Work>()) {
    // Split off the k-linear, G-free part; it gets the integrating factor.
    std::vector<DiffPoly::Term> rest;
    for (const auto& [mono, coeff] : a_.generator_image().terms()) {
        if (mono.g_power() == 0 && mono.degree() == 1)
            linear_.emplace_back(mono.factors().front().first, to_double(coeff));
        else
            rest.emplace_back(mono, coeff);
    }
    nonlinear_ = DiffPoly::from_terms(std::move(rest));
}

FlowStepper::~FlowStepper() = default;

CurvatureState FlowStepper::step(const CurvatureState& state, double dt) const {
    if (!(dt > 0.0)) throw std::invalid_argument("step needs dt > 0");
    if (state.size() != grid_->size() || state.length != grid_->length())
        throw DegenerateGridError("state does not match the stepper grid");

    const std::size_t modes = grid_->modes();
    if (work_->cached_dt != dt) {
        work_->factor_half.assign(modes, 1.0);
        work_->factor_full.assign(modes, 1.0);
        for (std::size_t j = 0; j < modes; ++j) {
            std::complex<double> lambda = 0.0;
            for (const auto& [order, coeff] : linear_) {
                if (order % 2 == 1 && grid_->size() % 2 == 0 && j == grid_->size() / 2)
                    continue;  // unmatched Nyquist mode, as in derivative()
                std::complex<double> mult = 1.0;
                for (unsigned m = 0; m < order; ++m) mult *= std::complex<double>{0.0, grid_->omega(j)};
                lambda += coeff * mult;
            }
            work_->factor_half[j] = std::exp(lambda * (0.5 * dt));
            work_->factor_full[j] = work_->factor_half[j] * work_->factor_half[j];
        }
        work_->cached_dt = dt;
    }
    const auto& e1 = work_->factor_half;
    const auto& e2 = work_->factor_full;

    const std::size_t n = grid_->size();
    const double h = grid_->spacing();
    std::vector<std::complex<double>> u(modes), a(modes), b(modes), c(modes), d(modes),
        stage(modes);
    std::vector<double> phys(n);

    auto nonlinear_hat = [&](const std::vector<std::complex<double>>& in,
                             std::vector<std::complex<double>>& out) {
        grid_->inverse(in.data(), phys);
        if (nonlinear_.is_zero()) {
            std::fill(out.begin(), out.end(), std::complex<double>{0.0, 0.0});
            return;
        }
        std::vector<double> rhs = evaluate(nonlinear_, phys, h, 0.0);
        for (double& x : rhs) x *= dt;
        grid_->forward(rhs, out.data());
    };

    grid_->forward(state.samples, u.data());

    nonlinear_hat(u, a);
    for (std::size_t j = 0; j < modes; ++j) stage[j] = e1[j] * (u[j] + 0.5 * a[j]);
    nonlinear_hat(stage, b);
    for (std::size_t j = 0; j < modes; ++j) stage[j] = e1[j] * u[j] + 0.5 * b[j];
    nonlinear_hat(stage, c);
    for (std::size_t j = 0; j < modes; ++j) stage[j] = e2[j] * u[j] + e1[j] * c[j];
    nonlinear_hat(stage, d);

    for (std::size_t j = 0; j < modes; ++j)
        u[j] = e2[j] * u[j] + (e2[j] * a[j] + 2.0 * e1[j] * (b[j] + c[j]) + d[j]) / 6.0;

    std::vector<double> next(n);
    grid_->inverse(u.data(), next);
    check_finite(next, "step");
    return CurvatureState(std::move(next), state.length, state.time + dt);
}

CurvatureState step(const CurvatureState& state, const Characteristic& a, double dt) {
    return FlowStepper(a, state.size(), state.length).step(state, dt);
}

double PlaneCurve::unit_speed_error() const {
    double worst = 0.0;
    for (std::size_t j = 0; j + 1 < points.size(); ++j) {
        const double dx = points[j + 1][0] - points[j][0];
        const double dy = points[j + 1][1] - points[j][1];
        worst = std::max(worst, std::abs(std::hypot(dx, dy) - spacing) / spacing);
    }
    return worst;
}

PlaneCurve reconstruct(const CurvatureState& state, double theta0, Vec2 origin) {
    const std::size_t n = state.size();
    const double h = state.spacing();
    SpectralGrid grid(n, state.length);
    const std::vector<double> q = grid.cumulative(state.samples);
    const std::vector<double> qh = grid.cumulative_half(state.samples);

    PlaneCurve curve;
    curve.spacing = h;
    curve.theta0 = theta0;
    curve.origin = origin;
    curve.theta.resize(n);
    curve.theta_half.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        curve.theta[j] = theta0 + q[j];
        curve.theta_half[j] = theta0 + qh[j];
    }
    curve.points.resize(n);
    curve.points[0] = origin;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        curve.points[j + 1][0] = curve.points[j][0] + h * std::cos(curve.theta_half[j]);
        curve.points[j + 1][1] = curve.points[j][1] + h * std::sin(curve.theta_half[j]);
    }
    const double endx = curve.points[n - 1][0] + h * std::cos(curve.theta_half[n - 1]);
    const double endy = curve.points[n - 1][1] + h * std::sin(curve.theta_half[n - 1]);
    curve.closure_gap = std::hypot(endx - origin[0], endy - origin[1]);
    return curve;
}

namespace {

// phi(0) and the PF velocity at s = 0 for one state/gauge pair.
struct GaugeRates {
    double dtheta;
    Vec2 dorigin;
};

GaugeRates gauge_rates(const CurvatureState& state, double theta0) {
    const double h = state.spacing();
    const double phi0 = evaluate(pf_phi(), state.samples, h, 0.0)[0];
    SpectralGrid grid(state.size(), state.length);
    const double k0 = state.samples[0];
    const double kp0 = grid.derivative(state.samples, 1)[0];
    const double tx = std::cos(theta0), ty = std::sin(theta0);
    return {phi0,
            {0.5 * k0 * k0 * tx - kp0 * ty, 0.5 * k0 * k0 * ty + kp0 * tx}};
}

}  // namespace

Gauge advance_gauge(const CurvatureState& before, const CurvatureState& after,
                    const Gauge& gauge) {
    const double dt = after.time - before.time;
    const GaugeRates r0 = gauge_rates(before, gauge.theta0);
    // theta0 first: its rate does not depend on the gauge itself.
    const GaugeRates r1_theta = gauge_rates(after, 0.0);
    Gauge out;
    out.theta0 = gauge.theta0 + 0.5 * dt * (r0.dtheta + r1_theta.dtheta);
    const GaugeRates r1 = gauge_rates(after, out.theta0);
    out.origin[0] = gauge.origin[0] + 0.5 * dt * (r0.dorigin[0] + r1.dorigin[0]);
    out.origin[1] = gauge.origin[1] + 0.5 * dt * (r0.dorigin[1] + r1.dorigin[1]);
    return out;
}

std::vector<Vec2> pf_velocity_field(const CurvatureState& state, const PlaneCurve& curve) {
    const std::size_t n = state.size();
    SpectralGrid grid(n, state.length);
    const std::vector<double> kp = grid.derivative(state.samples, 1);
    std::vector<Vec2> field(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double tx = std::cos(curve.theta[j]), ty = std::sin(curve.theta[j]);
        const double half_k2 = 0.5 * state.samples[j] * state.samples[j];
        field[j] = {half_k2 * tx - kp[j] * ty, half_k2 * ty + kp[j] * tx};
    }
    return field;
}

VelocityResidualReport verify_pf_velocity(const std::vector<CurvatureState>& states, double theta0,
                                          Vec2 origin, double gauge_tolerance) {
    if (states.size() < 3)
        throw std::invalid_argument("velocity check needs at least 3 consecutive states");
    std::vector<Gauge> gauges(states.size());
    gauges[0] = {theta0, origin};
    for (std::size_t i = 0; i + 1 < states.size(); ++i)
        gauges[i + 1] = advance_gauge(states[i], states[i + 1], gauges[i]);
    return verify_pf_velocity(states, gauges, gauge_tolerance);
}

VelocityResidualReport verify_pf_velocity(const std::vector<CurvatureState>& states,
                                          const std::vector<Gauge>& gauges,
                                          double gauge_tolerance) {
    if (states.size() < 3)
        throw std::invalid_argument("velocity check needs at least 3 consecutive states");
    if (gauges.size() != states.size())
        throw std::invalid_argument("velocity check needs one gauge per state");
    const double dt = states[1].time - states[0].time;
    for (std::size_t i = 0; i + 1 < states.size(); ++i) {
        const double step_dt = states[i + 1].time - states[i].time;
        if (std::abs(step_dt - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw std::invalid_argument("velocity check needs uniformly spaced states");
    }

    std::vector<PlaneCurve> curves(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        curves[i] = reconstruct(states[i], gauges[i].theta0, gauges[i].origin);

    VelocityResidualReport report;
    double sum_sq = 0.0, sum_sq_t = 0.0, sum_sq_n = 0.0;
    double rigid_sq = 0.0;
    std::size_t count = 0;

    for (std::size_t i = 1; i + 1 < states.size(); ++i) {
        const std::size_t n = states[i].size();
        const std::vector<Vec2> sym = pf_velocity_field(states[i], curves[i]);
        std::vector<Vec2> res(n);
        Vec2 mean_res{0.0, 0.0};
        Vec2 centroid{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double vx =
                (curves[i + 1].points[j][0] - curves[i - 1].points[j][0]) / (2.0 * dt);
            const double vy =
                (curves[i + 1].points[j][1] - curves[i - 1].points[j][1]) / (2.0 * dt);
            res[j] = {vx - sym[j][0], vy - sym[j][1]};
            mean_res[0] += res[j][0];
            mean_res[1] += res[j][1];
            centroid[0] += curves[i].points[j][0];
            centroid[1] += curves[i].points[j][1];
        }
        for (double* acc : {&mean_res[0], &mean_res[1], &centroid[0], &centroid[1]})
            *acc /= static_cast<double>(n);

        // Best-fit infinitesimal rigid motion (translation + rotation about the
        // centroid) of the residual field; a gauge bug is rigid by nature.
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double rx = curves[i].points[j][0] - centroid[0];
            const double ry = curves[i].points[j][1] - centroid[1];
            num += (-ry) * (res[j][0] - mean_res[0]) + rx * (res[j][1] - mean_res[1]);
            den += rx * rx + ry * ry;
        }
        const double beta = den > 0.0 ? num / den : 0.0;

        for (std::size_t j = 0; j < n; ++j) {
            const double norm2 = res[j][0] * res[j][0] + res[j][1] * res[j][1];
            sum_sq += norm2;
            report.max_residual = std::max(report.max_residual, std::sqrt(norm2));
            const double tx = std::cos(curves[i].theta[j]), ty = std::sin(curves[i].theta[j]);
            const double rt = res[j][0] * tx + res[j][1] * ty;
            const double rn = -res[j][0] * ty + res[j][1] * tx;
            sum_sq_t += rt * rt;
            sum_sq_n += rn * rn;
            const double rx = curves[i].points[j][0] - centroid[0];
            const double ry = curves[i].points[j][1] - centroid[1];
            const double gx = mean_res[0] - beta * ry;
            const double gy = mean_res[1] + beta * rx;
            rigid_sq += gx * gx + gy * gy;
            ++count;
        }
        ++report.compared_states;
    }

    report.rms_residual = std::sqrt(sum_sq / static_cast<double>(count));
    report.rms_tangential = std::sqrt(sum_sq_t / static_cast<double>(count));
    report.rms_normal = std::sqrt(sum_sq_n / static_cast<double>(count));

    if (report.rms_residual > gauge_tolerance && rigid_sq > 0.99 * sum_sq)
        throw GaugeDriftError("velocity residual is a large rigid motion; gauge evolution drifted");
    return report;
}

double ConservedSeries::max_drift(const std::vector<double>& series) const {
    if (series.empty()) return 0.0;
    double worst = 0.0;
    for (double x : series) worst = std::max(worst, std::abs(x - series.front()));
    return worst;
}

double ConservedSeries::relative_drift(const std::vector<double>& series) const {
    if (series.empty()) return 0.0;
    const double scale = std::max(std::abs(series.front()), 1e-300);
    return max_drift(series) / scale;
}

ConservedSeries conserved_report(const std::vector<CurvatureState>& trajectory) {
    ConservedSeries out;
    for (const CurvatureState& state : trajectory) {
        const double h = state.spacing();
        SpectralGrid grid(state.size(), state.length);
        const std::vector<double> kp = grid.derivative(state.samples, 1);
        double h0 = 0.0, h1 = 0.0, tk = 0.0;
        for (std::size_t j = 0; j < state.size(); ++j) {
            const double k = state.samples[j];
            h0 += 0.5 * k * k;
            h1 += 0.5 * kp[j] * kp[j] - 0.125 * k * k * k * k;
            tk += k;
        }
        out.time.push_back(state.time);
        out.h0.push_back(h * h0);
        out.h1.push_back(h * h1);
        out.turning.push_back(h * tk);
    }
    return out;
}

}  // namespace curveflow
