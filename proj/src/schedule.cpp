#include "vedit/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vedit {

void NoiseSchedule::validate() const {
    if (!(s_min >= 0.0 && s_min < 0.5))
        throw std::domain_error("NoiseSchedule: s_min must lie in [0, 0.5)");
    if (!(s_max > 0.5 && s_max <= 1.0))
        throw std::domain_error("NoiseSchedule: s_max must lie in (0.5, 1]");
    if (!(lambda_clamp > 0.0) || !std::isfinite(lambda_clamp))
        throw std::domain_error("NoiseSchedule: lambda_clamp must be positive and finite");
}

SchedulePoint eval_schedule(const NoiseSchedule& sched, double s) {
    if (!std::isfinite(s)) throw std::domain_error("eval_schedule: non-finite s");
    double sc = std::clamp(s, sched.s_min, sched.s_max);
    double alpha = std::cos(M_PI * sc / 2.0);
    double sigma = std::sin(M_PI * sc / 2.0);
    double lambda;
    if (sigma == 0.0) {
        lambda = sched.lambda_clamp;
    } else if (alpha <= 0.0) {
        lambda = -sched.lambda_clamp;
    } else {
        lambda = std::clamp(std::log(alpha / sigma), -sched.lambda_clamp, sched.lambda_clamp);
    }
    return {alpha, sigma, lambda};
}

double gamma_coeff(const NoiseSchedule& sched, double s) {
    SchedulePoint p = eval_schedule(sched, s);
    return std::sqrt(std::max(0.0, 1.0 - p.sigma * p.sigma)) + p.sigma;
}

std::vector<double> step_grid(const NoiseSchedule& sched, int steps) {
    if (steps < 1) throw std::domain_error("step_grid: steps must be >= 1");
    std::vector<double> grid(steps + 1);
    for (int i = 0; i <= steps; ++i)
        grid[i] = sched.s_max + (sched.s_min - sched.s_max) * double(i) / double(steps);
    grid.front() = sched.s_max;
    grid.back() = sched.s_min;
    return grid;
}

}  // namespace vedit
