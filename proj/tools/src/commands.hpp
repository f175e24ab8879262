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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "ldual/dualities.hpp"
#include "ldual/io.hpp"
#include "ldual/report.hpp"

namespace ldual::cli {

struct Options {
    std::optional<Field> field;
    std::size_t bound = 8;
    int box = 2;
    bool allow_undetermined = false;
    DualEngine engine = DualEngine::groebner;
    std::size_t threads = 1;
};

Report ext_report(const NamedModule& m, const NamedModule& n);

enum class DualizeMode { homological, gs, verify };
Report dualize_report(const ModuleFile& file, DualizeMode mode, const Options& opt);

enum class CrossedAction { build, center, fsg, ext_r };
Report crossed_report(const CrossedFile& file, CrossedAction action, const Options& opt);

enum class ZalgAction { resolve, nakayama, serre, hom_center, fsg_probe };
Report zalg_report(const ZalgFile& file, ZalgAction action, const Options& opt);

/// The full bundled corpus, items run concurrently on opt.threads workers and
/// merged in item-id order.
Report suite_report(const std::filesystem::path& data_dir, const Options& opt);

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace ldual::cli
