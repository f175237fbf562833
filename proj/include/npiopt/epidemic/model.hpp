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
#ifndef NPIOPT_EPIDEMIC_MODEL_HPP
#define NPIOPT_EPIDEMIC_MODEL_HPP

#include "npiopt/epidemic/trajectory.hpp"

#include <concepts>
#include <cstddef>

namespace npiopt {

/// Contract every epidemic model exposes to the optimizer: given a state, an
/// NPI choice index and a horizon in days, produce a day-resolution
/// trajectory with daily new-case counts. Models are immutable values and
/// simulate() is pure, so calls may run from any number of threads.
template <class M>
concept EpidemicModel = requires(const M& model, const typename M::State& state, std::size_t npi, int horizon) {
    typename M::State;
    { model.simulate(state, npi, horizon) } -> std::same_as<Trajectory<typename M::State>>;
    { model.num_choices() } -> std::convertible_to<std::size_t>;
};

} // namespace npiopt

#endif // NPIOPT_EPIDEMIC_MODEL_HPP
