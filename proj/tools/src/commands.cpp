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

#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>

#include "ldual/crossed.hpp"
#include "ldual/errors.hpp"
#include "ldual/koszul_util.hpp"
#include "ldual/syzygy.hpp"
#include "ldual/zalg.hpp"
#include "random_modules.hpp"

namespace ldual::cli {

namespace {

std::string dims_text(const std::map<int, FinLengthModule>& ext) {
    std::string out;
    for (const auto& [i, m] : ext) out += (out.empty() ? "" : ", ") + std::to_string(i) + ":" + std::to_string(m.dimension());
    return out;
}

void attach_module(Assertion& a, const std::string& label, const FinLengthModule& m) {
    a.witness.emplace_back(label + " dim", std::to_string(m.dimension()));
    for (std::size_t j = 0; j < m.rank(); ++j)
        a.witness.emplace_back(label + " x" + std::to_string(j + 1), m.op(j).to_strings());
}

Status iso_status(const IsoResult& r) {
    if (r.isomorphic()) return Status::pass;
    return r.verdict == IsoResult::Verdict::undetermined ? Status::undetermined : Status::fail;
}

Matrix constant_matrix(const LaurentMatrix& m) {
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).constant_term();
    return out;
}

std::vector<std::vector<std::string>> elt_strings(const ZFiniteAlgebra& a, const ZFiniteAlgebra::Elt& x) {
    std::vector<std::vector<std::string>> out(1);
    for (const auto& c : x) out[0].push_back(c.to_string(a.center().variables));
    return out;
}

// Cross-check of the two cohomology engines in every degree (rank 1 only).
Report engine_cross_check(const std::string& name, const FinLengthModule& m) {
    Report r;
    const FreeComplex dual = koszul_resolution(m).dual();
    for (int i = 0; i <= 1; ++i) {
        const FinLengthModule g = cohomology_at(dual, i);
        const FinLengthModule s = cohomology_at_snf(dual, i);
        const IsoResult iso = is_isomorphic(g, s);
        auto& a = r.add(name + ".degree-" + std::to_string(i) + "-groebner-matches-smith", "plumbing", iso_status(iso),
                        "dims " + std::to_string(g.dimension()) + " and " + std::to_string(s.dimension()) + "; " +
                            iso.certificate);
        if (iso.witness) a.witness.emplace_back("intertwiner", iso.witness->to_strings());
    }
    return r;
}

}  // namespace

std::string sha256_file(const std::filesystem::path& path) {
    const std::string bytes = read_text_file(path);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

Report ext_report(const NamedModule& m, const NamedModule& n) {
    Report r;
    r.suite = "ext";
    if (m.module.rank() != n.module.rank()) throw InvalidInput("modules live over different lattice ranks");
    const auto ext = ext_finite(m.module, n.module);
    long euler = 0;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(ext[i].dimension());
        auto& a = r.add("ext-" + std::to_string(i), "plumbing", Status::pass,
                        "dim Ext^" + std::to_string(i) + "(" + m.name + "," + n.name + ") = " +
                            std::to_string(ext[i].dimension()));
        attach_module(a, "Ext^" + std::to_string(i), ext[i]);
    }
    if (m.module.rank() >= 1)
        r.check("euler-characteristic", "koszul-euler-characteristic", euler == 0,
                "alternating sum of dimensions = " + std::to_string(euler));
    const std::size_t hom = hom_basis(m.module, n.module).size();
    r.check("ext0-equals-hom", "plumbing", hom == ext[0].dimension(),
            "intertwiner space has dimension " + std::to_string(hom));
    return r;
}

Report dualize_report(const ModuleFile& file, DualizeMode mode, const Options& opt) {
    Report r;
    r.suite = mode == DualizeMode::homological ? "homological-dual" : mode == DualizeMode::gs ? "gs-dual" : "three-dualities";
    for (const auto& [name, m] : file.modules) {
        if (mode == DualizeMode::verify) {
            r.merge(verify_three_dualities(m, opt.engine), name + ".");
            if (m.rank() == 1) r.merge(engine_cross_check(name, m), "");
            continue;
        }
        const auto ext = mode == DualizeMode::homological ? homological_dual(m, opt.engine) : gs_dual(m);
        auto& a = r.add(name + ".computed", mode == DualizeMode::homological ? "homological-duality" : "grothendieck-serre-duality",
                        Status::pass, "dimensions by degree: " + dims_text(ext));
        for (const auto& [i, module] : ext) attach_module(a, "degree " + std::to_string(i), module);
    }
    return r;
}

Report crossed_report(const CrossedFile& file, CrossedAction action, const Options& opt) {
    const CrossedAlgebra& alg = file.algebra;
    Report r;
    switch (action) {
        case CrossedAction::build: {
            r = alg.relation_report();
            auto& a = r.add("center-lattice", "center-is-invariant-lattice", Status::pass,
                            "center lattice index " + lattice_index(alg.center_basis()).get_str());
            std::vector<std::vector<std::string>> h;
            for (std::size_t i = 0; i < alg.center_basis().rows(); ++i) {
                h.emplace_back();
                for (std::size_t j = 0; j < alg.center_basis().cols(); ++j) h.back().push_back(alg.center_basis()(i, j).get_str());
            }
            a.witness.emplace_back("hermite basis", h);
            break;
        }
        case CrossedAction::center: {
            r.suite = "crossed-center";
            const CenterCheck c = verify_center(alg, opt.box);
            auto& a = r.check("center-equals-invariants", "center-is-invariant-lattice", c.ok, c.message);
            a.witness.emplace_back("solution dimension", std::to_string(c.solution_dimension));
            a.witness.emplace_back("fixed monomials", std::to_string(c.expected_dimension));
            break;
        }
        case CrossedAction::fsg: {
            r.suite = "crossed-fsg";
            const TraceCertificate cert = trace_fsg_certificate(alg);
            const auto vars = default_variables(alg.lattice().rank, "y");
            r.check("gram-symmetric", "trace-pairing", cert.symmetric, "tr(ab) = tr(ba) on the basis");
            auto& a = r.check("gram-determinant-unit", "trace-pairing-certifies-fsg", cert.unit,
                              "det = " + cert.determinant.to_string(vars));
            a.witness.emplace_back("gram", cert.gram.to_strings(vars));
            const FsgVerdict v = fsg_probe(alg.over_center(), opt.box, opt.threads);
            r.add("fsg-probe", "symmetric-frobenius-form",
                  v.kind == FsgVerdict::Kind::certified_yes ? Status::pass
                  : v.kind == FsgVerdict::Kind::undetermined ? Status::undetermined
                                                              : Status::fail,
                  to_string(v.kind) + ": " + v.certificate);
            break;
        }
        case CrossedAction::ext_r: {
            r.suite = "crossed-ext";
            const TraceCertificate cert = trace_fsg_certificate(alg);
            r.check("fsg-certificate", "trace-pairing-certifies-fsg", cert.unit,
                    cert.unit ? "unit Gram determinant" : "Gram determinant is not a unit; reduction unavailable");
            if (!cert.unit) break;
            for (const auto& v : file.modules) r.merge(ext_R_against_R(alg, v, cert).report, v.name + ".");
            break;
        }
    }
    return r;
}

namespace {

std::string module_pair(const NamedFinDimModule& m, const NamedFinDimModule& n) { return m.name + "," + n.name; }

}  // namespace

Report zalg_report(const ZalgFile& file, ZalgAction action, const Options& opt) {
    const ZFiniteAlgebra& a = file.algebra;
    Report r;
    auto need_field = [&] {
        if (a.center().kind != CenterKind::field)
            throw InvalidInput("this subcommand needs an algebra over the ground field");
    };
    switch (action) {
        case ZalgAction::resolve: {
            need_field();
            r.suite = "zalg-resolve";
            for (const auto& [name, m] : file.modules) {
                const auto res = free_resolution(a, m, opt.bound);
                auto& x = r.add(name + ".resolution", "plumbing", Status::pass,
                                res.truncated ? "truncated at bound " + std::to_string(opt.bound)
                                              : "length " + std::to_string(res.length()));
                std::string gens;
                for (auto g : res.generator_counts) gens += (gens.empty() ? "" : ",") + std::to_string(g);
                x.witness.emplace_back("generators per term", gens);
                x.witness.emplace_back("truncated", res.truncated ? "true" : "false");
            }
            break;
        }
        case ZalgAction::nakayama: {
            need_field();
            r.suite = "zalg-nakayama";
            for (const auto& [name, m] : file.modules) {
                try {
                    const NakayamaComplex nu = nakayama_dual(a, m, opt.bound);
                    std::string dims;
                    for (const auto& [deg, h] : nu.cohomology)
                        dims += (dims.empty() ? "" : ", ") + std::to_string(deg) + ":" + std::to_string(h.dimension());
                    auto& x = r.add(name + ".nakayama", "nakayama-functor", Status::pass, "cohomology by degree: " + dims);
                    for (const auto& [deg, h] : nu.cohomology)
                        for (std::size_t i = 0; i < h.actions().size(); ++i)
                            x.witness.emplace_back("H^" + std::to_string(deg) + " " + a.labels()[i], h.action(i).to_strings());
                } catch (const InvalidInput& e) {
                    r.add(name + ".nakayama", "nakayama-functor", Status::undetermined, e.what());
                }
            }
            break;
        }
        case ZalgAction::serre: {
            need_field();
            r.suite = "zalg-serre";
            for (const auto& m : file.modules)
                for (const auto& n : file.modules) {
                    try {
                        r.merge(verify_serre_pairing(a, m.module, n.module, opt.bound), module_pair(m, n) + ".");
                    } catch (const InvalidInput& e) {
                        r.add(module_pair(m, n) + ".serre", "serre-functor-duality", Status::undetermined, e.what());
                    }
                }
            break;
        }
        case ZalgAction::hom_center: {
            r.suite = "zalg-hom-center";
            const std::size_t n = a.size();
            r.add("structure-constants", "plumbing", Status::pass, "associativity and unit laws hold on all triples");
            bool free = true;
            for (std::size_t i = 0; i < n; ++i) {
                const LaurentMatrix l = a.left_regular(i);
                for (std::size_t k = 0; k < n; ++k) {
                    const LaurentElt want = k == i ? LaurentElt::constant(a.field(), a.center().rank, a.field().one())
                                                   : LaurentElt(a.field(), a.center().rank);
                    if (l(k, a.unit_index()) != want) free = false;
                }
            }
            r.check("rank-over-center", "free-over-center", free,
                    "free of rank " + std::to_string(n) + " over " + to_string(a.center().kind) + " center; b_i . 1 = b_i");
            for (const auto& [name, z] : file.central_elements) {
                auto& x = r.check("central-" + name, "declared-center-is-central", a.is_central(z),
                                  "commutes with every basis element");
                x.witness.emplace_back("coordinates", elt_strings(a, z));
            }
            const HomCenter hc = hom_center(a);
            auto& act = r.add("hom-center-action", "hom-into-center", Status::pass,
                              "left and right actions on the dual basis, rank " + std::to_string(hc.rank));
            for (std::size_t i = 0; i < n; ++i) {
                act.witness.emplace_back("left " + a.labels()[i], hc.left[i].to_strings(a.center().variables));
                act.witness.emplace_back("right " + a.labels()[i], hc.right[i].to_strings(a.center().variables));
            }
            r.check("double-dual", "hom-into-center", hc.double_dual_matches,
                    "double dual agrees with the regular representation on the canonical basis");

            if (a.center().kind == CenterKind::field) {
                std::vector<Matrix> reg, dual;
                for (std::size_t i = 0; i < n; ++i) {
                    reg.push_back(a.left_regular_k(i));
                    dual.push_back(constant_matrix(hc.left[i]));
                }
                const auto basis = intertwiners(reg, dual, n, n, a.field());
                const auto s = find_invertible_in_span(basis, n, a.field());
                auto& x = r.add("dual-isomorphic-to-algebra", "hom-into-center",
                                s.verdict == InvertibleSearch::Verdict::none_sampled ? Status::undetermined : Status::pass,
                                s.verdict == InvertibleSearch::Verdict::found       ? "isomorphic as left modules"
                                : s.verdict == InvertibleSearch::Verdict::none_exact ? "not isomorphic as left modules"
                                                                                      : "no invertible intertwiner met");
                if (s.witness) x.witness.emplace_back("intertwiner", s.witness->to_strings());
            } else {
                const FsgVerdict v = fsg_probe(a, opt.box, opt.threads);
                std::string msg;
                if (v.kind == FsgVerdict::Kind::certified_yes)
                    msg = "isomorphic as bimodules: " + v.certificate;
                else if (v.frobenius_functional)
                    msg = "open as bimodules; isomorphic as left modules through a non-symmetric Frobenius form; " + v.certificate;
                else
                    msg = "open: " + v.certificate;
                auto& x = r.add("dual-isomorphic-to-algebra", "hom-into-center-isomorphism",
                                v.kind == FsgVerdict::Kind::certified_yes ? Status::pass : Status::undetermined, msg);
                x.witness.emplace_back("candidates tested", std::to_string(v.candidates_tested));
                if (v.functional) x.witness.emplace_back("functional", elt_strings(a, *v.functional));
                if (v.frobenius_functional)
                    x.witness.emplace_back("frobenius functional", elt_strings(a, *v.frobenius_functional));
            }
            break;
        }
        case ZalgAction::fsg_probe: {
            r.suite = "zalg-fsg";
            const FsgVerdict v = fsg_probe(a, opt.box, opt.threads);
            auto& x = r.add("fsg-verdict", "symmetric-frobenius-form",
                            v.kind == FsgVerdict::Kind::undetermined ? Status::undetermined : Status::pass,
                            to_string(v.kind) + ": " + v.certificate);
            x.witness.emplace_back("verdict", to_string(v.kind));
            if (v.functional) x.witness.emplace_back("functional", elt_strings(a, *v.functional));
            if (v.determinant) x.witness.emplace_back("determinant", v.determinant->to_string(a.center().variables));
            break;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

struct Item {
    std::string id;
    std::function<Report()> run;
};

Report expect_fsg(const ZFiniteAlgebra& a, FsgVerdict::Kind expected, const Options& opt) {
    Report r;
    const FsgVerdict v = fsg_probe(a, opt.box, opt.threads);
    r.check("fsg-verdict", "symmetric-frobenius-form", v.kind == expected,
            "expected " + to_string(expected) + ", got " + to_string(v.kind) + ": " + v.certificate);
    return r;
}

}  // namespace

Report suite_report(const std::filesystem::path& dir, const Options& opt) {
    Options inner = opt;
    inner.threads = 1;
    std::vector<Item> items;
    for (const char* f : {"k_a_d1.mod", "corpus_d1.mod", "corpus_d1_cyclotomic3.mod", "corpus_d1_cyclotomic4.mod",
                          "corpus_d2.mod", "trivial_d3.mod"}) {
        const auto path = dir / f;
        items.push_back({std::string("dualize/") + f, [path, inner] {
                             return dualize_report(load_module_file(path, inner.field), DualizeMode::verify, inner);
                         }});
    }
    for (const char* f : {"z2_cross.alg", "z3_cross.alg"}) {
        const auto path = dir / f;
        items.push_back({std::string("crossed/") + f, [path, inner] {
                             const CrossedFile file = load_crossed_file(path, inner.field);
                             Report r;
                             for (auto act : {CrossedAction::build, CrossedAction::center, CrossedAction::fsg,
                                              CrossedAction::ext_r})
                                 r.merge(crossed_report(file, act, inner), "");
                             return r;
                         }});
    }
    for (const char* f : {"group_z2.alg", "ut2.alg"}) {
        const auto path = dir / f;
        items.push_back({std::string("serre/") + f, [path, inner] {
                             return zalg_report(load_zalg_file(path, inner.field), ZalgAction::serre, inner);
                         }});
    }
    const std::vector<std::pair<const char*, FsgVerdict::Kind>> fsg = {
        {"ut2.alg", FsgVerdict::Kind::certified_no},
        {"group_z2.alg", FsgVerdict::Kind::certified_yes},
        {"m2.alg", FsgVerdict::Kind::certified_yes},
        {"dual_numbers.alg", FsgVerdict::Kind::certified_yes}};
    for (const auto& [f, kind] : fsg) {
        const auto path = dir / f;
        const auto expected = kind;
        items.push_back({std::string("fsg/") + f, [path, expected, inner] {
                             return expect_fsg(load_zalg_file(path, inner.field).algebra, expected, inner);
                         }});
    }
    {
        const auto path = dir / "hecke_a1.alg";
        items.push_back({"hom-center/hecke_a1.alg", [path, inner] {
                             return zalg_report(load_zalg_file(path, inner.field), ZalgAction::hom_center, inner);
                         }});
    }
    items.push_back({"euler/random-pairs", [] {
                         Report r;
                         std::mt19937 rng(20261019);
                         const Field q = Field::rational();
                         std::size_t bad = 0;
                         for (int k = 0; k < 100; ++k) {
                             const std::size_t d = 1 + k % 2;
                             const FinLengthModule m = random_module(q, d, 1 + (k / 2) % 3, rng);
                             const FinLengthModule n = random_module(q, d, 1 + (k / 3) % 3, rng);
                             long euler = 0;
                             const auto ext = ext_finite(m, n);
                             for (std::size_t i = 0; i < ext.size(); ++i)
                                 euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(ext[i].dimension());
                             if (euler != 0) ++bad;
                         }
                         r.check("euler-characteristic", "koszul-euler-characteristic", bad == 0,
                                 std::to_string(100 - bad) + " of 100 random pairs have vanishing Euler characteristic");
                         return r;
                     }});
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.id < y.id; });

    std::vector<Report> results(items.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min(opt.threads, items.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                results[i] = items[i].run();
            } catch (const std::exception& e) {
                results[i].add("load", "plumbing", Status::fail, e.what());
            }
        }
    };
    std::vector<std::future<void>> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();

    Report out;
    out.suite = "acceptance-corpus";
    for (std::size_t i = 0; i < items.size(); ++i) out.merge(results[i], items[i].id + ":");
    return out;
}

}  // namespace ldual::cli
