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
#ifndef NPIOPT_EPIDEMIC_TRAJECTORY_HPP
#define NPIOPT_EPIDEMIC_TRAJECTORY_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace npiopt {

/// A day-resolution run of a model: consecutive states one day apart plus the
/// daily new-case counts between them (persons per day, one fewer entry than
/// states).
template <class State>
struct Trajectory {
    std::vector<State> states;
    std::vector<double> new_cases;

    const State& end_state() const
    {
        assert(!states.empty());
        return states.back();
    }

    double max_new_cases() const
    {
        if (new_cases.empty()) {
            return 0.0;
        }
        return *std::max_element(new_cases.begin(), new_cases.end());
    }

    double cumulative_new_cases() const
    {
        return std::accumulate(new_cases.begin(), new_cases.end(), 0.0);
    }

    /// First day index (1-based) whose new-case count exceeds `tau`, or 0 if
    /// no day does.
    int first_violation_day(double tau) const
    {
        for (std::size_t d = 0; d < new_cases.size(); ++d) {
            if (new_cases[d] > tau) {
                return static_cast<int>(d) + 1;
            }
        }
        return 0;
    }

    /// Append `other`, which must start at this trajectory's end state day.
    void append(const Trajectory& other)
    {
        if (states.empty()) {
            *this = other;
            return;
        }
        if (other.states.empty()) {
            return;
        }
        states.insert(states.end(), other.states.begin() + 1, other.states.end());
        new_cases.insert(new_cases.end(), other.new_cases.begin(), other.new_cases.end());
    }
};

/// Daily new cases implied by consecutive day states: the day-over-day
/// increase of the counted infection progress, scaled to persons. Entries are
/// clamped at zero to absorb integrator round-off.
template <class State, class Progress>
std::vector<double> new_cases_from_states(const std::vector<State>& states, Progress&& progress)
{
    if (states.size() < 2) {
        throw std::invalid_argument("new_cases_from_states needs at least two states");
    }
    std::vector<double> counts;
    counts.reserve(states.size() - 1);
    for (std::size_t d = 0; d + 1 < states.size(); ++d) {
        const double inflow = progress(states[d + 1]) - progress(states[d]);
        counts.push_back(std::max(0.0, inflow * population_of(states[d])));
    }
    return counts;
}

} // namespace npiopt

#endif // NPIOPT_EPIDEMIC_TRAJECTORY_HPP
