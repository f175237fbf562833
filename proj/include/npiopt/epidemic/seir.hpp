/*
* Copyright (C) 2026 npiopt contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef NPIOPT_EPIDEMIC_SEIR_HPP
#define NPIOPT_EPIDEMIC_SEIR_HPP

#include "npiopt/core/error.hpp"
#include "npiopt/epidemic/state.hpp"
#include "npiopt/epidemic/trajectory.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace npiopt {

/// Time derivatives (ds, de, di, dr) of the compartment fractions. The four
/// components sum to zero: the flows only move mass between compartments.
inline std::array<double, 4> seir_derivative(const EpidemicState& state, const SeirParams& params)
{
    const double exposure  = params.beta * state.s * state.i;
    const double onset     = params.sigma * state.e;
    const double recovery  = params.gamma * state.i;
    return {-exposure, exposure - onset, onset - recovery, recovery};
}

namespace detail {

inline std::array<double, 4> seir_rhs(const std::array<double, 4>& y, const SeirParams& p)
{
    const double exposure = p.beta * y[0] * y[2];
    const double onset    = p.sigma * y[1];
    const double recovery = p.gamma * y[2];
    return {-exposure, exposure - onset, onset - recovery, recovery};
}

/// Clamp integrator round-off and restore the unit-sum invariant, or throw
/// when the drift exceeds the tolerated budget.
inline void restore_conservation(std::array<double, 4>& y, double t)
{
    double sum = 0.0;
    for (double& c : y) {
        if (c < 0.0) {
            if (c < -1e-9) {
                throw NumericalDrift("compartment went negative (" + std::to_string(c) + ") at t=" +
                                     std::to_string(t));
            }
            c = 0.0;
        }
        sum += c;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
        throw NumericalDrift("compartment sum drifted to " + std::to_string(sum) + " at t=" + std::to_string(t));
    }
    for (double& c : y) {
        c /= sum;
    }
}

} // namespace detail

/// One classical 4th-order Runge-Kutta step of size `dt` days.
inline EpidemicState step_rk4(const EpidemicState& state, const SeirParams& params, double dt)
{
    if (!(dt > 0.0)) {
        throw std::invalid_argument("step_rk4 requires dt > 0");
    }
    const std::array<double, 4> y0 = {state.s, state.e, state.i, state.r};

    const auto k1 = detail::seir_rhs(y0, params);
    std::array<double, 4> y1;
    for (int c = 0; c < 4; ++c) {
        y1[c] = y0[c] + 0.5 * dt * k1[c];
    }
    const auto k2 = detail::seir_rhs(y1, params);
    std::array<double, 4> y2;
    for (int c = 0; c < 4; ++c) {
        y2[c] = y0[c] + 0.5 * dt * k2[c];
    }
    const auto k3 = detail::seir_rhs(y2, params);
    std::array<double, 4> y3;
    for (int c = 0; c < 4; ++c) {
        y3[c] = y0[c] + dt * k3[c];
    }
    const auto k4 = detail::seir_rhs(y3, params);

    std::array<double, 4> y;
    for (int c = 0; c < 4; ++c) {
        y[c] = y0[c] + dt / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    }
    detail::restore_conservation(y, state.t + dt);

    EpidemicState next = state;
    next.s             = y[0];
    next.e             = y[1];
    next.i             = y[2];
    next.r             = y[3];
    next.t             = state.t + dt;
    return next;
}

/// Daily new cases along a day-resolution state sequence. The day-over-day
/// difference of the counted progress equals the integral of the inflow
/// (sigma*e, or beta*s*i for the exposed-inflow switch) over each day because
/// the flows are telescoping sums of the compartment equations.
inline std::vector<double> new_cases_of(const std::vector<EpidemicState>& states,
                                        NewCaseDefinition def = NewCaseDefinition::InfectiousInflow)
{
    return new_cases_from_states(states, [def](const EpidemicState& s) {
        return infection_progress(s, def);
    });
}

/// SEIR dynamics whose NPI choices are infectious-rate settings. Integrates
/// with fixed RK4 sub-steps and reports states at day resolution.
class SeirModel {
public:
    using State = EpidemicState;

    SeirModel(std::vector<SeirParams> choice_params, double dt = 0.25,
              NewCaseDefinition new_case_def = NewCaseDefinition::InfectiousInflow)
        : choice_params_(std::move(choice_params))
        , dt_(dt)
        , new_case_def_(new_case_def)
        , substeps_per_day_(static_cast<int>(std::lround(1.0 / dt)))
    {
        if (choice_params_.empty()) {
            throw std::invalid_argument("SeirModel needs at least one NPI choice");
        }
        for (const auto& p : choice_params_) {
            p.validate();
        }
        if (!(dt > 0.0) || substeps_per_day_ < 1 || std::abs(substeps_per_day_ * dt - 1.0) > 1e-12) {
            throw std::invalid_argument("SeirModel dt must evenly divide one day");
        }
    }

    std::size_t num_choices() const
    {
        return choice_params_.size();
    }

    const SeirParams& params(std::size_t choice) const
    {
        return choice_params_.at(choice);
    }

    NewCaseDefinition new_case_definition() const
    {
        return new_case_def_;
    }

    /// Run `horizon` days under the fixed NPI choice. The returned trajectory
    /// holds horizon+1 states (the input state first) and horizon new-case
    /// counts.
    Trajectory<EpidemicState> simulate(const EpidemicState& state, std::size_t npi, int horizon) const
    {
        if (horizon < 1) {
            throw std::invalid_argument("simulate requires horizon >= 1");
        }
        const SeirParams& p = choice_params_.at(npi);

        Trajectory<EpidemicState> trajectory;
        trajectory.states.reserve(static_cast<std::size_t>(horizon) + 1);
        trajectory.states.push_back(state);
        EpidemicState current = state;
        for (int day = 0; day < horizon; ++day) {
            for (int sub = 0; sub < substeps_per_day_; ++sub) {
                current = step_rk4(current, p, dt_);
            }
            current.t = state.t + day + 1; // keep day indices exact
            trajectory.states.push_back(current);
        }
        trajectory.new_cases = new_cases_of(trajectory.states, new_case_def_);
        return trajectory;
    }

private:
    std::vector<SeirParams> choice_params_;
    double dt_;
    NewCaseDefinition new_case_def_;
    int substeps_per_day_;
};

} // namespace npiopt

#endif // NPIOPT_EPIDEMIC_SEIR_HPP
