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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldual/crossed.hpp"
#include "ldual/finmod.hpp"
#include "ldual/zalg.hpp"

namespace ldual {

struct NamedModule {
    std::string name;
    FinLengthModule module;
};

struct ModuleFile {
    Field field;
    std::size_t rank = 0;
    std::vector<NamedModule> modules;
};

struct CrossedFile {
    Field field;
    CrossedAlgebra algebra;
    std::vector<CrossedModule> modules;
};

struct NamedFinDimModule {
    std::string name;
    FinDimModule module;
};

struct ZalgFile {
    Field field;
    ZFiniteAlgebra algebra;
    std::vector<std::pair<std::string, ZFiniteAlgebra::Elt>> central_elements;
    std::vector<NamedFinDimModule> modules;
    std::map<std::string, std::string> parameters;
};

enum class AlgebraKind { crossed, zalg };

/// Smallest cyclotomic field containing both (Q when both are rational).
Field common_field(Field a, Field b);

/// Loaders. Scalars are read in the field declared by the file and then
/// embedded into `target` when given; ParseError on malformed documents,
/// EmbeddingError when the declared field does not embed, InvalidInput when
/// the mathematical content fails validation.
ModuleFile parse_module_document(const std::string& text, std::optional<Field> target = std::nullopt);
ModuleFile load_module_file(const std::filesystem::path& path, std::optional<Field> target = std::nullopt);

AlgebraKind algebra_kind(const std::string& text);
CrossedFile parse_crossed_document(const std::string& text, std::optional<Field> target = std::nullopt);
ZalgFile parse_zalg_document(const std::string& text, std::optional<Field> target = std::nullopt);
CrossedFile load_crossed_file(const std::filesystem::path& path, std::optional<Field> target = std::nullopt);
ZalgFile load_zalg_file(const std::filesystem::path& path, std::optional<Field> target = std::nullopt);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace ldual
