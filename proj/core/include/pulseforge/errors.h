// Copyright 2026 The PulseForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PULSEFORGE_ERRORS_H
#define PULSEFORGE_ERRORS_H

#include <stdexcept>
#include <string>

namespace pulseforge {

/// c1 lies outside [c1_lower, c1_upper]; cos(phi2 - phi1) would drop below -1.
class OutOfBounds : public std::domain_error {
  public:
    explicit OutOfBounds(const std::string &what) : std::domain_error(what) {}
};

/// Family indices produce a non-positive flip angle or violate index minima.
class InvalidIndices : public std::invalid_argument {
  public:
    explicit InvalidIndices(const std::string &what) : std::invalid_argument(what) {}
};

/// The Newton oracle found no admissible root from any start.
class NoConvergence : public std::runtime_error {
  public:
    explicit NoConvergence(const std::string &what) : std::runtime_error(what) {}
};

/// An infidelity fell under the floor used by power-law fitting.
class FloorReached : public std::runtime_error {
  public:
    explicit FloorReached(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace pulseforge

#endif  // PULSEFORGE_ERRORS_H
