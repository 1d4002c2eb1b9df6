#pragma once

#include <stdexcept>
#include <string>

namespace fnolab {

/// Malformed or unsupported on-disk data (bad magic, version, truncation).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Iterative solver hit its iteration cap before reaching tolerance.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_residual(achieved) {}
    double achieved_residual;
};

/// Time integration produced NaN/Inf; `time` is where it happened.
struct DivergenceError : std::runtime_error {
    DivergenceError(const std::string& msg, double t)
        : std::runtime_error(msg), time(t) {}
    double time;
};

/// Training loss became NaN at `epoch`.
struct TrainingDivergedError : std::runtime_error {
    TrainingDivergedError(const std::string& msg, int ep)
        : std::runtime_error(msg), epoch(ep) {}
    int epoch;
};

/// Oracle or optimization failure inside an attack; carries the restart index.
struct AttackError : std::runtime_error {
    AttackError(const std::string& msg, int r)
        : std::runtime_error(msg), restart(r) {}
    int restart;
};

/// Invalid configuration value (including violated stability bounds).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fnolab
