#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "curveflow/expr.hpp"
#include "curveflow/pfsim.hpp"
#include "curveflow/runio.hpp"

using namespace curveflow;

namespace {

constexpr double kPi = std::numbers::pi;

CurvatureState soliton_state(std::size_t n, double length, double eta, double shift = 0.0) {
    std::vector<double> k(n);
    const double center = 0.5 * length;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = static_cast<double>(j) * length / n;
        k[j] = 2.0 * eta / std::cosh(eta * (s - center + shift));
    }
    return CurvatureState(std::move(k), length, 0.0);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

double rms_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(sum / a.size());
}

const Characteristic mkdv_flow{parse("k''' + 3/2 k^2 k'")};

}  // namespace

TEST_CASE("state validation") {
    CHECK_THROWS_AS(CurvatureState(std::vector<double>(8, 0.0), 1.0), DegenerateGridError);
    CHECK_THROWS_AS(CurvatureState(std::vector<double>(17, 0.0), 1.0), DegenerateGridError);
    CHECK_THROWS_AS(CurvatureState(std::vector<double>(16, 0.0), -1.0), DegenerateGridError);
    std::vector<double> bad(16, 0.0);
    bad[3] = std::nan("");
    CHECK_THROWS_AS(CurvatureState(std::move(bad), 1.0), BlowupError);
}

TEST_CASE("flow right-hand side") {
    // Constant curvature is a fixed point of the mKdV flow.
    CurvatureState flat(std::vector<double>(64, 0.75), 10.0);
    const std::vector<double> rhs = flow_rhs(mkdv_flow, flat);
    CHECK(max_abs_diff(rhs, std::vector<double>(64, 0.0)) < 1e-9);

    // Pure transport: k' of a sine.
    const std::size_t n = 128;
    const double length = 8.0;
    std::vector<double> samples(n), expected(n);
    const double w = 2.0 * kPi / length;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = static_cast<double>(j) * length / n;
        samples[j] = std::sin(w * s);
        expected[j] = w * std::cos(w * s);
    }
    CurvatureState wave(std::move(samples), length);
    CHECK(max_abs_diff(flow_rhs(Characteristic{parse("k'")}, wave), expected) < 1e-8);

    // Traveling-wave identity: on the soliton profile the mKdV flow equals
    // eta^2 times the spatial derivative.
    const double eta = 1.0;
    CurvatureState soliton = soliton_state(512, 40.0, eta);
    SpectralGrid grid(512, 40.0);
    const std::vector<double> kp = grid.derivative(soliton.samples, 1);
    std::vector<double> expected_rhs(kp);
    for (double& x : expected_rhs) x *= eta * eta;
    CHECK(max_abs_diff(flow_rhs(mkdv_flow, soliton), expected_rhs) < 1e-5);
}

TEST_CASE("stepping a fixed point changes nothing") {
    CurvatureState flat(std::vector<double>(64, 1.25), 10.0);
    FlowStepper stepper(mkdv_flow, 64, 10.0);
    CurvatureState next = stepper.step(flat, 1e-3);
    CHECK(max_abs_diff(next.samples, flat.samples) < 1e-12);
    CHECK(next.time == doctest::Approx(1e-3));
    CHECK_THROWS_AS(stepper.step(flat, 0.0), std::invalid_argument);
}

TEST_CASE("soliton translates left at its phase speed") {
    const double eta = 1.0;
    const double length = 40.0;
    const std::size_t n = 512;
    const double dt = 1e-4;
    CurvatureState state = soliton_state(n, length, eta);
    FlowStepper stepper(mkdv_flow, n, length);
    for (int i = 0; i < 1000; ++i) state = stepper.step(state, dt);  // t = 0.1
    const CurvatureState reference = soliton_state(n, length, eta, eta * eta * 0.1);
    CHECK(rms_diff(state.samples, reference.samples) < 1e-4);
}

TEST_CASE("time stepping is fourth order") {
    // Richardson triple on a coarse soliton run with deliberately large dt.
    const std::size_t n = 128;
    const double length = 20.0;
    const double t_end = 0.064;
    auto run = [&](double dt) {
        CurvatureState state = soliton_state(n, length, 1.0);
        FlowStepper stepper(mkdv_flow, n, length);
        const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
        for (std::size_t i = 0; i < steps; ++i) state = stepper.step(state, dt);
        return state.samples;
    };
    const std::vector<double> coarse = run(8e-3);
    const std::vector<double> medium = run(4e-3);
    const std::vector<double> fine = run(2e-3);
    const double e1 = max_abs_diff(coarse, fine);
    const double e2 = max_abs_diff(medium, fine);
    // e1/e2 ~ (16 E)/(... ) for a fourth-order method the Richardson ratio
    // (e1 - e2)/e2 is ~15; accept a generous band.
    const double order = std::log2((e1 - e2) / e2) ;
    CHECK(order > 3.3);
    CHECK(order < 4.7);
}

TEST_CASE("blowup is detected") {
    // Backward heat equation: the integrating factor overflows immediately.
    CurvatureState bumpy = soliton_state(64, 10.0, 1.0);
    FlowStepper stepper(Characteristic{parse("0 - k''")}, 64, 10.0);
    CHECK_THROWS_AS(
        [&] {
            CurvatureState s = bumpy;
            for (int i = 0; i < 50; ++i) s = stepper.step(s, 10.0);
            return s;
        }(),
        BlowupError);
}

TEST_CASE("reconstruction of a circle") {
    const std::size_t n = 256;
    const double length = 2.0 * kPi;  // unit circle
    CurvatureState state(std::vector<double>(n, 1.0), length);
    const PlaneCurve curve = reconstruct(state, 0.0, {0.0, -1.0});
    CHECK(curve.closure_gap < 1e-8);
    CHECK(curve.unit_speed_error() < 1e-6);
    // All vertices at distance ~1 from the center (up to the polygon's
    // inscribed-radius offset, well inside 1e-3 at this resolution).
    for (const Vec2& p : curve.points) {
        const double r = std::hypot(p[0], p[1]);
        CHECK(std::abs(r - 1.0) < 1e-3);
    }
}

TEST_CASE("reconstruction of a straight segment") {
    const std::size_t n = 64;
    const double length = 8.0;
    CurvatureState state(std::vector<double>(n, 0.0), length);
    const double angle = 0.3;
    const PlaneCurve curve = reconstruct(state, angle, {1.0, 2.0});
    for (std::size_t j = 0; j < n; ++j) {
        const double s = static_cast<double>(j) * length / n;
        CHECK(std::abs(curve.points[j][0] - (1.0 + s * std::cos(angle))) < 1e-12);
        CHECK(std::abs(curve.points[j][1] - (2.0 + s * std::sin(angle))) < 1e-12);
    }
}

TEST_CASE("polyline curvature matches the samples at second order") {
    auto polyline_curvature_error = [](std::size_t n) {
        const double length = 16.0;
        std::vector<double> k(n);
        const double w = 2.0 * kPi / length;
        for (std::size_t j = 0; j < n; ++j) {
            const double s = static_cast<double>(j) * length / n;
            k[j] = 0.4 * std::sin(w * s) + 0.1 * std::cos(2.0 * w * s) + 0.5;
        }
        CurvatureState state(std::move(k), length);
        const PlaneCurve curve = reconstruct(state, 0.0, {0.0, 0.0});
        const double h = length / static_cast<double>(n);
        double worst = 0.0;
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double ax = curve.points[j][0] - curve.points[j - 1][0];
            const double ay = curve.points[j][1] - curve.points[j - 1][1];
            const double bx = curve.points[j + 1][0] - curve.points[j][0];
            const double by = curve.points[j + 1][1] - curve.points[j][1];
            const double turn = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
            worst = std::max(worst, std::abs(turn / h - state.samples[j]));
        }
        return worst;
    };
    const double coarse = polyline_curvature_error(64);
    const double fine = polyline_curvature_error(128);
    CHECK(coarse < 2e-3);
    CHECK(fine < coarse / 3.0);  // second-order decay
}

TEST_CASE("velocity residual for the rigidly rotating circle") {
    const std::size_t n = 2048;
    const double length = 4.0 * kPi;  // curvature 1/2
    const double dt = 1e-3;
    CurvatureState state(std::vector<double>(n, 0.5), length);
    FlowStepper stepper(mkdv_flow, n, length);
    std::vector<CurvatureState> states{state};
    for (int i = 0; i < 4; ++i) states.push_back(stepper.step(states.back(), dt));
    const VelocityResidualReport report = verify_pf_velocity(states, 0.0, {0.0, 0.0});
    CHECK(report.rms_normal < 1e-6);
    CHECK(report.rms_residual < 1e-6);
    CHECK(report.compared_states == 3);
}

TEST_CASE("velocity of a straight line is zero") {
    const std::size_t n = 64;
    CurvatureState state(std::vector<double>(n, 0.0), 8.0);
    std::vector<CurvatureState> states;
    for (int i = 0; i < 3; ++i) {
        CurvatureState copy = state;
        copy.time = i * 1e-3;
        states.push_back(std::move(copy));
    }
    const VelocityResidualReport report = verify_pf_velocity(states, 0.1, {0.0, 0.0});
    CHECK(report.max_residual < 1e-13);
}

TEST_CASE("gauge drift is distinguished from field errors") {
    // A gauge sequence rotating at the wrong rate produces a residual that is
    // a pure rigid motion; the check must flag it instead of blaming the field.
    const std::size_t n = 256;
    const double length = 2.0 * kPi;
    const double dt = 1e-2;
    CurvatureState state(std::vector<double>(n, 1.0), length);
    std::vector<CurvatureState> states;
    std::vector<Gauge> good{{0.0, {0.0, 0.0}}};
    for (int i = 0; i < 3; ++i) {
        CurvatureState copy = state;
        copy.time = i * dt;
        states.push_back(std::move(copy));
        if (i > 0) good.push_back(advance_gauge(states[i - 1], states[i], good.back()));
    }
    CHECK_NOTHROW(verify_pf_velocity(states, good));

    std::vector<Gauge> drifting = good;
    for (std::size_t i = 0; i < drifting.size(); ++i)
        drifting[i].theta0 += 0.5 * static_cast<double>(i) * dt;
    CHECK_THROWS_AS(verify_pf_velocity(states, drifting), GaugeDriftError);

    std::vector<Gauge> wrong_count(2);
    CHECK_THROWS_AS(verify_pf_velocity(states, wrong_count), std::invalid_argument);
}

TEST_CASE("velocity check input validation") {
    CurvatureState state(std::vector<double>(32, 0.1), 4.0);
    std::vector<CurvatureState> two{state, state};
    CHECK_THROWS_AS(verify_pf_velocity(two, 0.0, {0.0, 0.0}), std::invalid_argument);
    std::vector<CurvatureState> uneven{state, state, state};
    uneven[1].time = 0.5;
    uneven[2].time = 0.6;
    CHECK_THROWS_AS(verify_pf_velocity(uneven, 0.0, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("conserved quantities on a stationary profile") {
    CurvatureState flat(std::vector<double>(64, 0.8), 10.0);
    std::vector<CurvatureState> states;
    for (int i = 0; i < 4; ++i) {
        CurvatureState copy = flat;
        copy.time = i * 0.1;
        states.push_back(std::move(copy));
    }
    const ConservedSeries series = conserved_report(states);
    CHECK(series.max_drift(series.h0) == 0.0);
    CHECK(series.max_drift(series.h1) == 0.0);
    CHECK(series.max_drift(series.turning) == 0.0);
    CHECK(series.h0.front() == doctest::Approx(0.5 * 0.8 * 0.8 * 10.0));
    CHECK(series.turning.front() == doctest::Approx(8.0));
}

TEST_CASE("short soliton run conserves the invariants") {
    const std::size_t n = 256;
    const double length = 40.0;
    CurvatureState state = soliton_state(n, length, 1.0);
    FlowStepper stepper(mkdv_flow, n, length);
    std::vector<CurvatureState> states{state};
    for (int i = 0; i < 200; ++i) states.push_back(stepper.step(states.back(), 2e-4));
    const ConservedSeries series = conserved_report(states);
    CHECK(series.relative_drift(series.h0) < 1e-9);
    CHECK(series.relative_drift(series.h1) < 1e-7);
    CHECK(series.max_drift(series.turning) < 1e-11);
}

TEST_CASE("simulation driver presets") {
    RunConfig config;
    config.preset = "circle";
    config = apply_preset(config);
    config.frames = 3;
    const RunResult result = run_simulation(config);
    CHECK(result.stationary);
    CHECK(result.frames.size() >= 2);
    CHECK(result.curves.size() == result.frames.size());
    CHECK(result.conserved.relative_drift(result.conserved.h0) < 1e-12);

    CHECK_THROWS_AS(apply_preset(RunConfig{.preset = "nope"}), std::invalid_argument);
}
