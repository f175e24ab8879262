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

#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ldual {

enum class Status { pass, fail, undetermined };
std::string to_string(Status s);

/// Witness payload: a scalar string or a matrix of scalar strings.
using WitnessValue = std::variant<std::string, std::vector<std::vector<std::string>>>;

struct Assertion {
    std::string id;
    /// What the check establishes, or "plumbing".
    std::string anchor;
    Status status = Status::pass;
    std::string message;
    std::vector<std::pair<std::string, WitnessValue>> witness;
};

struct Report {
    std::string suite;
    std::vector<Assertion> assertions;
    std::vector<std::pair<std::string, std::string>> input_digests;
    /// Wall time, shown in text output only.
    double seconds = 0.0;

    Assertion& add(std::string id, std::string anchor, Status status, std::string message = {});
    Assertion& check(std::string id, std::string anchor, bool ok, std::string message = {});
    /// Appends the assertions of `other`, prefixing their ids.
    void merge(const Report& other, const std::string& prefix);

    bool passed(bool allow_undetermined) const;
    std::size_t count(Status s) const;
    std::string to_text() const;
    /// Deterministic machine-readable form (no timing).
    std::string to_json() const;
};

}  // namespace ldual
