#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace he3 {

template <class State>
struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;

    std::size_t size() const { return times.size(); }
};

/// Classical fixed-step RK4 with strided dense output. The final step is
/// shortened to land exactly on t_end, and the final state is always stored.
/// Throws on non-finite state.
template <class State, class Rhs>
Trajectory<State> integrate(Rhs&& rhs, State y, double t0, double t_end, double dt,
                            long output_stride = 1) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
    if (output_stride < 1) throw std::invalid_argument("integrate: stride must be >= 1");
    Trajectory<State> traj;
    const long nsteps = static_cast<long>(std::ceil((t_end - t0) / dt - 1e-12));
    traj.times.reserve(static_cast<std::size_t>(nsteps / output_stride) + 2);
    traj.states.reserve(traj.times.capacity());

    double t = t0;
    traj.times.push_back(t);
    traj.states.push_back(y);
    for (long k = 0; k < nsteps; ++k) {
        const double h = std::min(dt, t_end - t);
        const State k1 = rhs(y);
        const State k2 = rhs(State(y + 0.5 * h * k1));
        const State k3 = rhs(State(y + 0.5 * h * k2));
        const State k4 = rhs(State(y + h * k3));
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
        if (!y.allFinite())
            throw std::runtime_error("integrate: non-finite state at t = " + std::to_string(t));
        if ((k + 1) % output_stride == 0 || k + 1 == nsteps) {
            traj.times.push_back(t);
            traj.states.push_back(y);
        }
    }
    return traj;
}

} // namespace he3
