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

#ifndef PULSEFORGE_TOOLS_CLI_H
#define PULSEFORGE_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace pulseforge::cli {

inline constexpr double kVerifyResidualThreshold = 1e-10;
inline constexpr double kVerifyDistanceThreshold = 1e-9;

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 domain failure, 2 argument error.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

/// Parses "1.5", "pi", "-pi/2", "3pi/4", "3*pi/4". Plain numbers are scaled
/// by pi/180 when degrees is set; pi literals are always radians.
/// Throws std::invalid_argument on anything else.
double parse_angle(const std::string &text, bool degrees = false);

}  // namespace pulseforge::cli

#endif  // PULSEFORGE_TOOLS_CLI_H
