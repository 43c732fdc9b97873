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

#include "fockfringe/records.h"

#include <cstdio>
#include <istream>
#include <ostream>

#include "fockfringe/errors.h"
#include "json.hpp"

namespace fockfringe {

namespace {

std::string json_string(std::string_view s) {
    return nlohmann::json(std::string(s)).dump();
}

}  // namespace

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string to_jsonl(const DetectionRecord &record) {
    std::string out = "{\"state\":" + json_string(format_state(record.state));
    out += ",\"pair\":" + json_string(record.pair);
    out += ",\"d\":" + std::to_string(record.d);
    out += ",\"seed\":" + std::to_string(record.seed);
    out += ",\"stream\":" + std::to_string(record.stream);
    if (record.phi) {
        out += ",\"phi\":" + format_real(*record.phi);
    }
    out += ",\"positions\":[";
    for (std::size_t i = 0; i < record.positions.size(); i++) {
        if (i > 0) {
            out += ',';
        }
        out += format_real(record.positions[i]);
    }
    out += "]}";
    return out;
}

DetectionRecord record_from_jsonl(std::string_view line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("malformed detection record: ") + e.what());
    }
    try {
        DetectionRecord rec;
        rec.state = parse_state(j.at("state").get<std::string>());
        rec.pair = j.at("pair").get<std::string>();
        rec.d = j.at("d").get<int>();
        rec.seed = j.at("seed").get<std::uint64_t>();
        rec.stream = j.at("stream").get<std::uint64_t>();
        if (j.contains("phi")) {
            rec.phi = j.at("phi").get<double>();
        }
        rec.positions = j.at("positions").get<std::vector<double>>();
        if (static_cast<int>(rec.positions.size()) != rec.d) {
            throw ArgumentError("detection record lists " + std::to_string(rec.positions.size()) +
                                " positions but d=" + std::to_string(rec.d));
        }
        return rec;
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("malformed detection record: ") + e.what());
    }
}

void write_records_jsonl(std::ostream &out, std::span<const DetectionRecord> records) {
    for (const auto &r : records) {
        out << to_jsonl(r) << '\n';
    }
}

std::vector<DetectionRecord> read_records_jsonl(std::istream &in) {
    std::vector<DetectionRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        out.push_back(record_from_jsonl(line));
    }
    return out;
}

}  // namespace fockfringe
