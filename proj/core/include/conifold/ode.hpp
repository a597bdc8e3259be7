#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include <Eigen/Core>

#include "conifold/errors.hpp"

namespace conifold::ode {

struct Options {
    double rtol = 1e-10;
    double atol = 1e-10;
    double initial_step = 0.0; // 0 picks (t1 - t0) / 100
    double min_step = 1e-14;   // relative to |t1 - t0|
    std::size_t max_steps = 200000;
};

struct Stats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t rhs_evaluations = 0;
    double smallest_step = 0.0;
    double largest_step = 0.0;
};

template <class State>
struct Solution {
    State y;
    Stats stats;
};

/// Step size fell below Options::min_step; `state` is the last accepted value.
template <class State>
class StepUnderflow : public IntegrationError {
public:
    StepUnderflow(const std::string& what, double t, State state)
        : IntegrationError(what), t_(t), state_(std::move(state)) {}
    double t() const { return t_; }
    const State& state() const { return state_; }

private:
    double t_;
    State state_;
};

/// Dormand-Prince 5(4) coefficients.
namespace dp {
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                        b6 = 11.0 / 84;
// error weights: 5th-order minus embedded 4th-order
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
} // namespace dp

/// Mixed absolute/relative max-norm of an error estimate for Eigen-like states.
template <class State>
double scaled_error(const State& err, const State& y0, const State& y1, const Options& opt) {
    double worst = 0.0;
    for (Eigen::Index k = 0; k < err.size(); ++k) {
        const double scale = opt.atol + opt.rtol * std::max(std::abs(y0(k)), std::abs(y1(k)));
        worst = std::max(worst, std::abs(err(k)) / scale);
    }
    return worst;
}

/// Adaptive explicit integration of y' = f(t, y) from t0 to t1 > t0.
///
/// FSAL is used: the last stage of an accepted step is the first of the next.
template <class State, class Rhs>
Solution<State> integrate(Rhs&& f, double t0, double t1, State y, const Options& opt) {
    using namespace dp;
    const double span = t1 - t0;
    if (!(span > 0)) throw InputError("integration interval must be increasing");
    const double h_min = opt.min_step * span;
    double h = opt.initial_step > 0 ? opt.initial_step : span / 100;

    Solution<State> sol;
    sol.stats.smallest_step = span;
    double t = t0;
    State k1 = f(t, y);
    ++sol.stats.rhs_evaluations;

    while (t < t1) {
        if (sol.stats.accepted + sol.stats.rejected >= opt.max_steps) {
            throw ResourceError("tolerance not achieved within " + std::to_string(opt.max_steps) +
                                " steps (t = " + std::to_string(t) + ")");
        }
        bool last = false;
        if (t + h >= t1) {
            h = t1 - t;
            last = true;
        }
        const State k2 = f(t + c2 * h, State(y + h * (a21 * k1)));
        const State k3 = f(t + c3 * h, State(y + h * (a31 * k1 + a32 * k2)));
        const State k4 = f(t + c4 * h, State(y + h * (a41 * k1 + a42 * k2 + a43 * k3)));
        const State k5 = f(t + c5 * h, State(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
        const State k6 =
            f(t + h, State(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
        const State y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const State k7 = f(t + h, y_new);
        sol.stats.rhs_evaluations += 6;

        const State err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double norm = scaled_error(err, y, y_new, opt);

        if (norm <= 1.0) {
            t = last ? t1 : t + h;
            y = y_new;
            k1 = k7;
            ++sol.stats.accepted;
            sol.stats.smallest_step = std::min(sol.stats.smallest_step, h);
            sol.stats.largest_step = std::max(sol.stats.largest_step, h);
        } else {
            ++sol.stats.rejected;
        }
        const double factor =
            norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, norm <= 1.0 ? 5.0 : 1.0);
        h *= factor;
        if (t < t1 && h < h_min) {
            throw StepUnderflow<State>("step size underflow at t = " + std::to_string(t), t, y);
        }
    }
    sol.y = std::move(y);
    return sol;
}

} // namespace conifold::ode
