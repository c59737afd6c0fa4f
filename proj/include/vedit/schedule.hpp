#pragma once

#include <vector>

namespace vedit {

// Cosine variance-preserving noise schedule over diffusion time s in [0,1]:
// alpha = cos(pi*s/2), sigma = sin(pi*s/2), lambda = log(alpha/sigma).
// s is clipped into [s_min, s_max] before evaluation and lambda is clamped
// to +-lambda_clamp so conditioning embeddings stay finite.
struct NoiseSchedule {
    enum class Kind { cosine_vp };
    Kind kind = Kind::cosine_vp;
    double s_min = 1e-3;
    double s_max = 1.0 - 1e-3;
    double lambda_clamp = 20.0;

    void validate() const;
};

struct SchedulePoint {
    double alpha;
    double sigma;
    double lambda;
};

SchedulePoint eval_schedule(const NoiseSchedule& sched, double s);

// sqrt(1 - sigma^2) + sigma; equals alpha + sigma under the VP schedule.
double gamma_coeff(const NoiseSchedule& sched, double s);

// S+1 values uniformly spaced on [s_min, s_max], strictly decreasing:
// grid[0] = s_max, grid[S] = s_min.
std::vector<double> step_grid(const NoiseSchedule& sched, int steps);

}  // namespace vedit
