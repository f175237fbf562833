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
#ifndef NPIOPT_CORE_ERROR_HPP
#define NPIOPT_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace npiopt {

/// Compartment sums drifted beyond the tolerated budget during integration.
class NumericalDrift : public std::runtime_error {
public:
    explicit NumericalDrift(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/// Every candidate NPI scored zero and the configured fallback is to abort.
class Infeasible : public std::runtime_error {
public:
    Infeasible(const std::string& what, int day)
        : std::runtime_error(what)
        , day_(day)
    {
    }
    int day() const
    {
        return day_;
    }

private:
    int day_;
};

/// Scenario or training configuration failed validation.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/// Training curves carry no variance; a surrogate cannot be fit.
class DegenerateData : public std::runtime_error {
public:
    explicit DegenerateData(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/// A surrogate was queried for an NPI choice it was never trained on.
class UntrainedNpi : public std::runtime_error {
public:
    explicit UntrainedNpi(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/// Requested look-ahead exceeds what chained surrogate predictions can serve.
class HorizonTooLong : public std::runtime_error {
public:
    explicit HorizonTooLong(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/// Exhaustive search would enumerate more policies than the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

} // namespace npiopt

#endif // NPIOPT_CORE_ERROR_HPP
