// Copyright 2026 The fockfringe Authors
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

#include "fockfringe/state.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "fockfringe/errors.h"

namespace fockfringe {

namespace {

int parse_count(std::string_view s, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ArgumentError("bad particle count '" + std::string(s) + "' in state '" + std::string(whole) + "'");
    }
    return value;
}

double parse_real(std::string_view s, std::string_view whole) {
    // std::from_chars for double is missing from older libstdc++; strtod on a copy.
    std::string copy(s);
    char *end = nullptr;
    double v = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(v)) {
        throw ArgumentError("bad phase '" + copy + "' in state '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

void validate(const StateDescriptor &state) {
    if (const auto *f = std::get_if<FockState>(&state)) {
        if (f->n1 < 0 || f->n2 < 0 || f->total() < 1) {
            throw ArgumentError("fock state needs n1 >= 0, n2 >= 0 and n1 + n2 >= 1");
        }
    } else {
        const auto &p = std::get<PhaseState>(state);
        if (p.d < 1) {
            throw ArgumentError("phase state needs d >= 1");
        }
        if (p.phi && !std::isfinite(*p.phi)) {
            throw ArgumentError("phase state phi must be finite");
        }
    }
}

StateDescriptor parse_state(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ArgumentError("state '" + std::string(text) + "' must look like fock:n1,n2 or phase:d[,phi]");
    }
    auto kind = text.substr(0, colon);
    auto rest = text.substr(colon + 1);
    auto comma = rest.find(',');
    StateDescriptor out;
    if (kind == "fock") {
        if (comma == std::string_view::npos) {
            throw ArgumentError("fock state '" + std::string(text) + "' needs two counts");
        }
        out = FockState{parse_count(rest.substr(0, comma), text), parse_count(rest.substr(comma + 1), text)};
    } else if (kind == "phase") {
        PhaseState p;
        p.d = parse_count(rest.substr(0, comma), text);
        if (comma != std::string_view::npos) {
            auto phi = rest.substr(comma + 1);
            if (phi != "random") {
                p.phi = parse_real(phi, text);
            }
        }
        out = p;
    } else {
        throw ArgumentError("unknown state kind '" + std::string(kind) + "'");
    }
    validate(out);
    return out;
}

std::string format_state(const StateDescriptor &state) {
    if (const auto *f = std::get_if<FockState>(&state)) {
        return "fock:" + std::to_string(f->n1) + "," + std::to_string(f->n2);
    }
    const auto &p = std::get<PhaseState>(state);
    std::string out = "phase:" + std::to_string(p.d);
    if (p.phi) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", *p.phi);
        out += ",";
        out += buf;
    } else {
        out += ",random";
    }
    return out;
}

int max_detections(const StateDescriptor &state) {
    if (const auto *f = std::get_if<FockState>(&state)) {
        return f->total();
    }
    return std::get<PhaseState>(state).d;
}

}  // namespace fockfringe
