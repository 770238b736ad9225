#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curveflow/pfsim.hpp"

namespace curveflow {

struct RunConfig {
    std::string preset;  // "soliton", "circle", "random-smooth", or empty
    std::string expression = "k''' + 3/2 k^2 k'";
    std::size_t n = 512;
    double length = 40.0;
    double dt = 1e-4;
    double t_end = 0.5;
    unsigned frames = 11;  // snapshots including t = 0
    std::uint64_t seed = 0;
    double theta0 = 0.0;
    Vec2 origin{0.0, 0.0};
};

/// Fills grid defaults and the initial curvature profile for a named preset.
RunConfig apply_preset(RunConfig config);
std::vector<double> initial_profile(const RunConfig& config);

struct RunResult {
    std::vector<CurvatureState> frames;
    std::vector<Gauge> gauges;
    std::vector<PlaneCurve> curves;
    ConservedSeries conserved;
    bool stationary = false;  // terminal state equals the initial one to roundoff
};

RunResult run_simulation(const RunConfig& config);

// Artifact writers.  CSV rows are (t, s) nodes with 17 significant digits.
void write_csv(const std::string& path, const RunResult& result);
void write_manifest(const std::string& path, const RunConfig& config);
void write_svg(const std::string& path, const std::vector<PlaneCurve>& curves);

}  // namespace curveflow
