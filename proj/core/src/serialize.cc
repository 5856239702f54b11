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

#include "pulseforge/serialize.h"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pulseforge {

namespace {

std::string number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_angles(std::ostream &out, double theta, double phi) {
    out << "{\"theta\": " << number(theta) << ", \"phi\": " << number(reduce_angle(phi)) << '}';
}

void write_body(std::ostream &out, const TargetRotation &target, const std::array<Pulse, 3> &pulses,
                const WindingNumbers &w, Branch branch) {
    out << "{\n  \"target\": ";
    write_angles(out, target.theta(), target.phi());
    out << ",\n  \"pulses\": [\n";
    for (size_t i = 0; i < pulses.size(); i++) {
        out << "    ";
        write_angles(out, pulses[i].theta(), pulses[i].phi());
        out << (i + 1 < pulses.size() ? ",\n" : "\n");
    }
    out << "  ],\n  \"windings\": [" << w.n1() << ", " << w.n2() << ", " << w.n3() << "],\n";
    out << "  \"branch\": \"" << branch_symbol(branch) << '"';
}

double angle_field(const nlohmann::json &node, const char *key, const std::string &where) {
    if (!node.is_object() || !node.contains(key) || !node.at(key).is_number()) {
        throw std::invalid_argument("sequence JSON: " + where + "." + key + " must be a number");
    }
    return node.at(key).get<double>();
}

}  // namespace

std::string to_json(const CompositeSequence &seq) {
    std::ostringstream out;
    write_body(out, seq.target, seq.pulses, seq.windings, seq.solution.branch);
    out << "\n}\n";
    return out.str();
}

std::string to_json(const FamilySequence &seq) {
    std::ostringstream out;
    write_body(out, seq.target, seq.pulses, principal_windings(seq.pulses), Branch::kPlus);
    out << ",\n  \"family\": \"" << family_name(seq.kind) << "\",\n";
    out << "  \"implemented_sign\": " << seq.implemented_sign << "\n}\n";
    return out.str();
}

SequenceDocument parse_sequence_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("sequence JSON is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("sequence JSON: top level must be an object");
    }
    if (!doc.contains("target")) {
        throw std::invalid_argument("sequence JSON: missing field 'target'");
    }
    const auto &target_node = doc.at("target");
    TargetRotation target(angle_field(target_node, "theta", "target"), angle_field(target_node, "phi", "target"));

    if (!doc.contains("pulses") || !doc.at("pulses").is_array() || doc.at("pulses").size() != 3) {
        throw std::invalid_argument("sequence JSON: 'pulses' must be an array of exactly 3 pulses");
    }
    const auto &pn = doc.at("pulses");
    auto pulse_at = [&](size_t i) {
        std::string where = "pulses[" + std::to_string(i) + "]";
        return Pulse(angle_field(pn.at(i), "theta", where), angle_field(pn.at(i), "phi", where));
    };
    std::array<Pulse, 3> pulses{pulse_at(0), pulse_at(1), pulse_at(2)};

    WindingNumbers windings;
    if (doc.contains("windings")) {
        const auto &wn = doc.at("windings");
        if (!wn.is_array() || wn.size() != 3) {
            throw std::invalid_argument("sequence JSON: 'windings' must be an array of 3 integers");
        }
        for (const auto &x : wn) {
            if (!x.is_number_integer()) {
                throw std::invalid_argument("sequence JSON: 'windings' entries must be integers");
            }
        }
        windings = WindingNumbers(wn.at(0).get<int>(), wn.at(1).get<int>(), wn.at(2).get<int>());
    }

    Branch branch = Branch::kPlus;
    if (doc.contains("branch")) {
        if (!doc.at("branch").is_string()) {
            throw std::invalid_argument("sequence JSON: 'branch' must be \"+\" or \"-\"");
        }
        branch = parse_branch(doc.at("branch").get<std::string>());
    }

    SequenceDocument out{target, pulses, windings, branch, std::nullopt, 1};
    if (doc.contains("family")) {
        if (!doc.at("family").is_string()) {
            throw std::invalid_argument("sequence JSON: 'family' must be a string");
        }
        out.family = doc.at("family").get<std::string>();
    }
    if (doc.contains("implemented_sign")) {
        const auto &sn = doc.at("implemented_sign");
        if (!sn.is_number_integer() || (sn.get<int>() != 1 && sn.get<int>() != -1)) {
            throw std::invalid_argument("sequence JSON: 'implemented_sign' must be 1 or -1");
        }
        out.implemented_sign = sn.get<int>();
    }
    return out;
}

}  // namespace pulseforge
