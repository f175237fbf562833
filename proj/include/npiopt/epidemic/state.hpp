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
#ifndef NPIOPT_EPIDEMIC_STATE_HPP
#define NPIOPT_EPIDEMIC_STATE_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace npiopt {

/// Which compartment inflow counts as a "new case" for a day.
/// InfectiousInflow is the daily flow E -> I (the default); ExposedInflow is
/// the daily flow S -> E, kept as a sensitivity switch.
enum class NewCaseDefinition {
    InfectiousInflow,
    ExposedInflow,
};

/// Rates of the SEIR flows. All rates are per day.
struct SeirParams {
    double beta  = 0.0; ///< infectious rate
    double sigma = 0.2; ///< incubation rate
    double gamma = 0.1; ///< recovery rate

    /// Basic reproduction number beta/gamma; requires gamma > 0.
    double r0() const
    {
        if (gamma <= 0.0) {
            throw std::invalid_argument("SeirParams::r0 requires gamma > 0");
        }
        return beta / gamma;
    }

    void validate() const
    {
        if (!(beta >= 0.0) || !(sigma >= 0.0) || !(gamma >= 0.0)) {
            throw std::invalid_argument("SeirParams rates must be nonnegative");
        }
    }
};

/// Compartment fractions of a population of size `population` at day `t`.
/// The fractions always sum to one within 1e-9.
struct EpidemicState {
    double s = 1.0;
    double e = 0.0;
    double i = 0.0;
    double r = 0.0;
    double population = 1.0;
    double t          = 0.0;

    void validate() const
    {
        const auto in_unit = [](double x) {
            return x >= 0.0 && x <= 1.0;
        };
        if (!in_unit(s) || !in_unit(e) || !in_unit(i) || !in_unit(r)) {
            throw std::invalid_argument("EpidemicState fractions must lie in [0, 1]");
        }
        if (std::abs(s + e + i + r - 1.0) > 1e-9) {
            throw std::invalid_argument("EpidemicState fractions must sum to 1 within 1e-9, got " +
                                        std::to_string(s + e + i + r));
        }
        if (!(population > 0.0)) {
            throw std::invalid_argument("EpidemicState population must be positive");
        }
    }

    /// State seeded with person counts; seeds below one person are kept as
    /// exact fractions (e.g. E(0) = 1 on N = 3e6 is 1/3e6).
    static EpidemicState seeded(double population, double exposed_persons, double infected_persons = 0.0,
                                double removed_persons = 0.0)
    {
        EpidemicState state;
        state.population = population;
        state.e          = exposed_persons / population;
        state.i          = infected_persons / population;
        state.r          = removed_persons / population;
        state.s          = 1.0 - state.e - state.i - state.r;
        state.t          = 0.0;
        state.validate();
        return state;
    }
};

/// Fraction of the population that has progressed past the compartment
/// boundary the new-case definition counts. Daily new cases are day-over-day
/// differences of this quantity, which equals the integral of the
/// corresponding inflow (sigma*e or beta*s*i) over the day.
inline double infection_progress(const EpidemicState& state, NewCaseDefinition def)
{
    return def == NewCaseDefinition::InfectiousInflow ? state.i + state.r : 1.0 - state.s;
}

inline double population_of(const EpidemicState& state)
{
    return state.population;
}

} // namespace npiopt

#endif // NPIOPT_EPIDEMIC_STATE_HPP
