#include "curveflow/runio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>

#include "json.hpp"

#include "curveflow/expr.hpp"

namespace curveflow {

RunConfig apply_preset(RunConfig config) {
    if (config.preset == "soliton") {
        config.n = 512;
        config.length = 40.0;
        config.dt = 1e-4;
        config.t_end = 0.5;
    } else if (config.preset == "circle") {
        config.n = 256;
        config.length = 4.0 * std::numbers::pi;
        config.dt = 1e-3;
        config.t_end = 0.1;
    } else if (config.preset == "random-smooth") {
        config.n = 256;
        config.length = 32.0;
        config.dt = 1e-4;
        config.t_end = 0.05;
    } else if (!config.preset.empty()) {
        throw std::invalid_argument("unknown preset: " + config.preset);
    }
    return config;
}

std::vector<double> initial_profile(const RunConfig& config) {
    std::vector<double> k(config.n, 0.0);
    const double h = config.length / static_cast<double>(config.n);
    if (config.preset == "soliton" || config.preset.empty()) {
        const double center = 0.5 * config.length;
        for (std::size_t j = 0; j < config.n; ++j)
            k[j] = 2.0 / std::cosh(static_cast<double>(j) * h - center);
    } else if (config.preset == "circle") {
        const double value = 2.0 * std::numbers::pi / config.length;
        std::fill(k.begin(), k.end(), value);
    } else if (config.preset == "random-smooth") {
        std::mt19937_64 rng(config.seed);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
        std::uniform_real_distribution<double> amp(-1.0, 1.0);
        for (unsigned m = 1; m <= 4; ++m) {
            const double a = 0.4 * amp(rng) / static_cast<double>(m * m);
            const double p = phase(rng);
            for (std::size_t j = 0; j < config.n; ++j) {
                const double s = static_cast<double>(j) * h;
                k[j] += a * std::cos(2.0 * std::numbers::pi * m * s / config.length + p);
            }
        }
    }
    return k;
}

RunResult run_simulation(const RunConfig& config) {
    const Characteristic flow{parse(config.expression)};
    CurvatureState state(initial_profile(config), config.length, 0.0);
    const std::vector<double> initial_samples = state.samples;

    const auto steps = static_cast<std::size_t>(std::llround(config.t_end / config.dt));
    const unsigned frames = std::max(2u, config.frames);
    FlowStepper stepper(flow, config.n, config.length);

    RunResult result;
    Gauge gauge{config.theta0, config.origin};
    result.frames.push_back(state);
    result.gauges.push_back(gauge);

    std::vector<std::size_t> save_at;
    for (unsigned f = 1; f < frames; ++f)
        save_at.push_back(static_cast<std::size_t>(
            std::llround(static_cast<double>(f) * static_cast<double>(steps) / (frames - 1))));
    save_at.erase(std::unique(save_at.begin(), save_at.end()), save_at.end());
    std::size_t next_save = 0;
    for (std::size_t i = 0; i < steps; ++i) {
        CurvatureState next = stepper.step(state, config.dt);
        gauge = advance_gauge(state, next, gauge);
        state = std::move(next);
        while (next_save < save_at.size() && save_at[next_save] <= i + 1) {
            if (save_at[next_save] == i + 1) {
                result.frames.push_back(state);
                result.gauges.push_back(gauge);
            }
            ++next_save;
        }
    }
    if (result.frames.back().time != state.time) {
        result.frames.push_back(state);
        result.gauges.push_back(gauge);
    }

    for (std::size_t i = 0; i < result.frames.size(); ++i)
        result.curves.push_back(
            reconstruct(result.frames[i], result.gauges[i].theta0, result.gauges[i].origin));
    result.conserved = conserved_report(result.frames);

    double worst = 0.0;
    for (std::size_t j = 0; j < state.size(); ++j)
        worst = std::max(worst, std::abs(state.samples[j] - initial_samples[j]));
    result.stationary = worst <= 1e-12;
    return result;
}

void write_csv(const std::string& path, const RunResult& result) {
    std::FILE* out = std::fopen(path.c_str(), "w");
    if (!out) throw std::runtime_error("cannot open " + path);
    std::fputs("t,s,k,x,y,H0,H1,TK\n", out);
    for (std::size_t i = 0; i < result.frames.size(); ++i) {
        const CurvatureState& state = result.frames[i];
        const PlaneCurve& curve = result.curves[i];
        const double h = state.spacing();
        for (std::size_t j = 0; j < state.size(); ++j) {
            std::fprintf(out, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", state.time,
                         static_cast<double>(j) * h, state.samples[j], curve.points[j][0],
                         curve.points[j][1], result.conserved.h0[i], result.conserved.h1[i],
                         result.conserved.turning[i]);
        }
    }
    std::fclose(out);
}

void write_manifest(const std::string& path, const RunConfig& config) {
    nlohmann::json manifest{
        {"N", config.n},         {"L", config.length},
        {"dt", config.dt},       {"T", config.t_end},
        {"characteristic", config.expression},
        {"seed", config.seed},   {"preset", config.preset},
        {"frames", config.frames},
    };
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << manifest.dump(2) << "\n";
}

void write_svg(const std::string& path, const std::vector<PlaneCurve>& curves) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const PlaneCurve& curve : curves) {
        for (const Vec2& p : curve.points) {
            xmin = std::min(xmin, p[0]);
            xmax = std::max(xmax, p[0]);
            ymin = std::min(ymin, p[1]);
            ymax = std::max(ymax, p[1]);
        }
    }
    if (curves.empty()) xmin = ymin = 0.0, xmax = ymax = 1.0;
    const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin) + 1e-9;
    xmin -= pad, ymin -= pad, xmax += pad, ymax += pad;

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin << " " << ymin << " "
        << (xmax - xmin) << " " << (ymax - ymin) << "\">\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const double opacity =
            curves.size() > 1 ? 0.25 + 0.75 * static_cast<double>(i) / (curves.size() - 1) : 1.0;
        out << "  <polyline fill=\"none\" stroke=\"#0b5394\" stroke-opacity=\"" << opacity
            << "\" stroke-width=\"" << 0.004 * (xmax - xmin) << "\" points=\"";
        for (const Vec2& p : curves[i].points) out << p[0] << "," << -p[1] << " ";
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace curveflow
