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

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "ldual/errors.hpp"

namespace ldual::cli {

namespace {

std::size_t env_threads() {
    const char* v = std::getenv("LAURENT_DUALITY_THREADS");
    if (!v || !*v) return 1;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1) throw ParseError("LAURENT_DUALITY_THREADS must be a positive integer");
    return static_cast<std::size_t>(n);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact duality checks for finite-length modules over Laurent rings and finite algebras", "laurent-duality"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_text, json_out, engine_text = "groebner";
    std::size_t bound = 8;
    int box = 2;
    bool allow_undetermined = false;
    app.add_option("--field", field_text, "Working field: Q or cyclotomic:N (inputs are embedded into it)");
    app.add_option("--bound", bound, "Resolution length bound")->check(CLI::PositiveNumber);
    app.add_option("--box", box, "Exponent box for bounded searches")->check(CLI::NonNegativeNumber);
    app.add_option("--json-out", json_out, "Write the machine-readable report here");
    app.add_flag("--allow-undetermined", allow_undetermined, "Count undetermined assertions as passing");
    app.add_option("--engine", engine_text, "Cohomology engine for dualize: groebner or smith")
        ->check(CLI::IsMember({"groebner", "smith"}));

    std::vector<std::string> files;
    std::string mode, data_dir = LDUAL_DEFAULT_DATA_DIR;

    auto* ext = app.add_subcommand("ext", "Ext^i(M, N) of two finite-length modules");
    ext->add_option("M", files, "Module files M and N (first module of each)")->required()->expected(2);

    auto* dualize = app.add_subcommand("dualize", "Homological, Grothendieck-Serre or three-way duality check");
    dualize->add_option("mode", mode)->required()->check(CLI::IsMember({"homological", "gs", "verify"}));
    dualize->add_option("file", files)->required()->expected(1);

    auto* crossed = app.add_subcommand("crossed", "Crossed-product algebra checks");
    crossed->add_option("action", mode)->required()->check(CLI::IsMember({"build", "center", "fsg", "ext-r"}));
    crossed->add_option("file", files)->required()->expected(1);

    auto* zalg = app.add_subcommand("zalg", "Algebras finite over a designated center");
    zalg->add_option("action", mode)
        ->required()
        ->check(CLI::IsMember({"resolve", "nakayama", "serre", "hom-center", "fsg-probe"}));
    zalg->add_option("file", files)->required()->expected(1);

    auto* suite = app.add_subcommand("suite", "Run the bundled acceptance corpus");
    suite->add_option("--data-dir", data_dir, "Directory holding the bundled data files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Options opt;
        if (!field_text.empty()) opt.field = Field::parse(field_text);
        opt.bound = bound;
        opt.box = box;
        opt.allow_undetermined = allow_undetermined;
        opt.engine = engine_text == "smith" ? DualEngine::smith : DualEngine::groebner;
        opt.threads = env_threads();

        const auto start = std::chrono::steady_clock::now();
        Report report;
        std::vector<std::filesystem::path> inputs(files.begin(), files.end());
        if (*ext) {
            auto m = load_module_file(files[0], opt.field);
            auto n = load_module_file(files[1], opt.field);
            if (!opt.field && m.field != n.field) {
                const Field common = common_field(m.field, n.field);
                m = load_module_file(files[0], common);
                n = load_module_file(files[1], common);
            }
            if (m.modules.empty() || n.modules.empty()) throw ParseError("module file lists no modules");
            report = ext_report(m.modules.front(), n.modules.front());
        } else if (*dualize) {
            const DualizeMode dm = mode == "homological" ? DualizeMode::homological
                                   : mode == "gs"        ? DualizeMode::gs
                                                         : DualizeMode::verify;
            report = dualize_report(load_module_file(files[0], opt.field), dm, opt);
        } else if (*crossed) {
            const CrossedAction act = mode == "build"    ? CrossedAction::build
                                      : mode == "center" ? CrossedAction::center
                                      : mode == "fsg"    ? CrossedAction::fsg
                                                         : CrossedAction::ext_r;
            report = crossed_report(load_crossed_file(files[0], opt.field), act, opt);
        } else if (*zalg) {
            const ZalgAction act = mode == "resolve"      ? ZalgAction::resolve
                                   : mode == "nakayama"   ? ZalgAction::nakayama
                                   : mode == "serre"      ? ZalgAction::serre
                                   : mode == "hom-center" ? ZalgAction::hom_center
                                                          : ZalgAction::fsg_probe;
            report = zalg_report(load_zalg_file(files[0], opt.field), act, opt);
        } else {
            report = suite_report(data_dir, opt);
            inputs.clear();
            for (const auto& entry : std::filesystem::directory_iterator(data_dir))
                if (entry.is_regular_file()) inputs.push_back(entry.path());
            std::sort(inputs.begin(), inputs.end());
        }
        for (const auto& p : inputs) report.input_digests.emplace_back(p.string(), sha256_file(p));
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        out << report.to_text();
        if (!json_out.empty()) {
            std::ofstream f(json_out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + json_out);
            f << report.to_json();
        }
        return report.passed(opt.allow_undetermined) ? 0 : 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const EmbeddingError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const FieldMismatch& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ldual::cli
