// Copyright 2026 The laurent-duality Authors
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

#include "ldual/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace ldual {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::undetermined: return "undetermined";
    }
    return "fail";
}

Assertion& Report::add(std::string id, std::string anchor, Status status, std::string message) {
    assertions.push_back(Assertion{std::move(id), std::move(anchor), status, std::move(message), {}});
    return assertions.back();
}

Assertion& Report::check(std::string id, std::string anchor, bool ok, std::string message) {
    return add(std::move(id), std::move(anchor), ok ? Status::pass : Status::fail, std::move(message));
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto a : other.assertions) {
        a.id = prefix + a.id;
        assertions.push_back(std::move(a));
    }
    for (const auto& d : other.input_digests) input_digests.push_back(d);
}

bool Report::passed(bool allow_undetermined) const {
    for (const auto& a : assertions) {
        if (a.status == Status::fail) return false;
        if (a.status == Status::undetermined && !allow_undetermined) return false;
    }
    return true;
}

std::size_t Report::count(Status s) const {
    std::size_t n = 0;
    for (const auto& a : assertions)
        if (a.status == s) ++n;
    return n;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << "\n";
    for (const auto& a : assertions) {
        os << "  [" << to_string(a.status) << "] " << a.id << " (" << a.anchor << ")";
        if (!a.message.empty()) os << ": " << a.message;
        os << "\n";
    }
    os << "  " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
       << count(Status::undetermined) << " undetermined";
    os << " in " << std::fixed << std::setprecision(3) << seconds << " s\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    auto& digests = j["input_digests"] = nlohmann::ordered_json::array();
    for (const auto& [path, hex] : input_digests) digests.push_back({{"input", path}, {"sha256", hex}});
    auto& list = j["assertions"] = nlohmann::ordered_json::array();
    for (const auto& a : assertions) {
        nlohmann::ordered_json e;
        e["id"] = a.id;
        e["anchor"] = a.anchor;
        e["status"] = to_string(a.status);
        e["message"] = a.message;
        nlohmann::ordered_json w = nlohmann::ordered_json::object();
        for (const auto& [key, value] : a.witness)
            std::visit([&](const auto& v) { w[key] = v; }, value);
        e["witness"] = std::move(w);
        list.push_back(std::move(e));
    }
    j["summary"] = {{"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"undetermined", count(Status::undetermined)}};
    return j.dump(2) + "\n";
}

}  // namespace ldual
