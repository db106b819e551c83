// Copyright 2026 The ketsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * State-file serialization and stable number formatting.
 *
 * A state file is a JSON array of term records
 *   {"basis": "x1...xn", "re": <float>, "im": <float>}
 * with the bit string MSB first; the width is inferred from the first record
 * and enforced across all of them. Duplicate basis records merge by amplitude
 * addition.
 */

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ketsim/state.hpp"

namespace ketsim {

/// Fixed 12 significant digits, negative zero normalized to zero; used for
/// every floating-point value we print so output is byte-stable.
inline std::string format_number(double value) {
    if (value == 0.0) {
        value = 0.0; // drops the sign of -0.0
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

/// The same 12-significant-digit rounding, as a double for JSON payloads.
inline double round_for_output(double value) {
    return std::strtod(format_number(value).c_str(), nullptr);
}

inline StateVector state_from_json(const nlohmann::json &doc) {
    if (!doc.is_array() || doc.empty()) {
        throw std::invalid_argument("state file: expected a non-empty JSON array of terms");
    }
    std::vector<std::pair<BasisState, Amplitude>> terms;
    terms.reserve(doc.size());
    int width = 0;
    for (const auto &record : doc) {
        if (!record.is_object() || !record.contains("basis") || !record.contains("re") ||
            !record.contains("im")) {
            throw std::invalid_argument(
                "state file: each term needs \"basis\", \"re\", and \"im\"");
        }
        const auto basis_text = record.at("basis").get<std::string>();
        std::vector<int> bits;
        bits.reserve(basis_text.size());
        for (char c : basis_text) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("state file: basis string \"" + basis_text +
                                            "\" contains a digit other than 0 or 1");
            }
            bits.push_back(c - '0');
        }
        if (bits.empty()) {
            throw std::invalid_argument("state file: empty basis string");
        }
        if (width == 0) {
            width = static_cast<int>(bits.size());
        } else if (static_cast<int>(bits.size()) != width) {
            throw std::invalid_argument("state file: basis \"" + basis_text +
                                        "\" does not match the width of the first record");
        }
        if (!record.at("re").is_number() || !record.at("im").is_number()) {
            throw std::invalid_argument("state file: amplitudes must be numbers");
        }
        terms.emplace_back(BasisState::from_bits(bits),
                           Amplitude{record.at("re").get<double>(),
                                     record.at("im").get<double>()});
    }
    return StateVector::from_terms(width, terms);
}

inline StateVector load_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("state file: cannot open " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument("state file: " + path + " is not valid JSON: " + e.what());
    }
    return state_from_json(doc);
}

} // namespace ketsim
