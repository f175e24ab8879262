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

#include "ldual/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "ldual/errors.hpp"
#include "ldual/parse.hpp"

namespace ldual {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

std::size_t as_size(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::string as_text(const json& j, const std::string& what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError(what + " must be a string");
}

// Reads scalars in the declared field, hands them out in the working field.
struct Context {
    Field declared;
    Field working;

    Scalar scalar(const json& j, const std::string& what) const {
        return embed(parse_scalar(as_text(j, what), declared), working);
    }

    Matrix matrix(const json& j, std::size_t n, const std::string& what) const {
        if (!j.is_array() || j.size() != n) throw ParseError(what + " must have " + std::to_string(n) + " rows");
        Matrix m(working, n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!j[r].is_array() || j[r].size() != n)
                throw ParseError(what + " row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar(j[r][c], what);
        }
        return m;
    }

    std::vector<Matrix> matrices(const json& j, std::size_t count, std::size_t n, const std::string& what) const {
        if (!j.is_array() || j.size() != count)
            throw ParseError(what + " must list " + std::to_string(count) + " matrices");
        std::vector<Matrix> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(matrix(j[i], n, what + "[" + std::to_string(i) + "]"));
        return out;
    }

    LaurentElt laurent(const json& j, std::size_t rank, std::span<const std::string> vars, const std::string& what) const {
        const LaurentElt raw = LaurentElt::parse(as_text(j, what), declared, rank, vars);
        LaurentElt out(working, rank);
        for (const auto& [e, c] : raw.terms()) out.add_term(e, embed(c, working));
        return out;
    }
};

Context make_context(const json& doc, std::optional<Field> target) {
    const Field declared = Field::parse(as_text(require(doc, "field", "document"), "field"));
    const Field working = target ? *target : declared;
    if (!embeds_into(declared, working))
        throw EmbeddingError("declared field " + declared.name() + " does not embed into " + working.name());
    return {declared, working};
}

std::string module_name(const json& j, std::size_t index) {
    if (j.contains("name")) return as_text(j.at("name"), "name");
    return "module-" + std::to_string(index);
}

}  // namespace

Field common_field(Field a, Field b) {
    const int n = std::lcm(a.is_rational() ? 1 : a.order(), b.is_rational() ? 1 : b.order());
    return n <= 2 ? Field::rational() : Field::cyclotomic(n);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ModuleFile parse_module_document(const std::string& text, std::optional<Field> target) {
    const json doc = parse_json(text);
    const Context ctx = make_context(doc, target);
    ModuleFile out;
    out.field = ctx.working;
    out.rank = as_size(require(doc, "rank", "document"), "rank");

    auto read_one = [&](const json& j, std::size_t index) {
        const std::string name = module_name(j, index);
        const std::size_t n = as_size(require(j, "dimension", name), "dimension");
        auto ops = ctx.matrices(require(j, "operators", name), out.rank, n, name + ".operators");
        try {
            out.modules.push_back({name, FinLengthModule(ctx.working, out.rank, n, std::move(ops))});
        } catch (const InvalidInput& e) {
            throw InvalidInput(name + ": " + e.what());
        }
    };
    if (doc.contains("modules")) {
        const json& list = doc.at("modules");
        if (!list.is_array()) throw ParseError("\"modules\" must be an array");
        for (std::size_t i = 0; i < list.size(); ++i) read_one(list[i], i);
    } else {
        read_one(doc, 0);
    }
    return out;
}

ModuleFile load_module_file(const std::filesystem::path& path, std::optional<Field> target) {
    return parse_module_document(read_text_file(path), target);
}

AlgebraKind algebra_kind(const std::string& text) {
    const json doc = parse_json(text);
    const std::string kind = as_text(require(doc, "kind", "document"), "kind");
    if (kind == "crossed") return AlgebraKind::crossed;
    if (kind == "zalg") return AlgebraKind::zalg;
    throw ParseError("unknown algebra kind \"" + kind + "\"");
}

CrossedFile parse_crossed_document(const std::string& text, std::optional<Field> target) {
    const json doc = parse_json(text);
    if (as_text(require(doc, "kind", "document"), "kind") != "crossed") throw ParseError("not a crossed-product document");
    const Context ctx = make_context(doc, target);
    const std::size_t d = as_size(require(doc, "rank", "document"), "rank");

    const json& chars = require(doc, "characters", "document");
    if (!chars.is_array()) throw ParseError("\"characters\" must be an array");
    std::vector<std::vector<Scalar>> elements;
    for (const auto& c : chars) {
        if (!c.is_array() || c.size() != d) throw ParseError("each character lists " + std::to_string(d) + " values");
        std::vector<Scalar> vals;
        for (const auto& v : c) vals.push_back(ctx.scalar(v, "character value"));
        elements.push_back(std::move(vals));
    }
    CharacterGroup group(ctx.working, d, std::move(elements));

    Cocycle cocycle = Cocycle::trivial(ctx.working, group.size());
    if (doc.contains("cocycle")) {
        const json& t = doc.at("cocycle");
        if (!t.is_array()) throw ParseError("\"cocycle\" must be a table");
        std::vector<std::vector<Scalar>> table;
        for (const auto& row : t) {
            if (!row.is_array()) throw ParseError("\"cocycle\" rows must be arrays");
            std::vector<Scalar> r;
            for (const auto& v : row) r.push_back(ctx.scalar(v, "cocycle value"));
            table.push_back(std::move(r));
        }
        cocycle = Cocycle(std::move(table));
    }

    CrossedFile out;
    out.field = ctx.working;
    out.algebra = CrossedAlgebra::build(Lattice{d}, std::move(group), std::move(cocycle));
    if (doc.contains("modules")) {
        const json& list = doc.at("modules");
        if (!list.is_array()) throw ParseError("\"modules\" must be an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const json& j = list[i];
            CrossedModule v;
            v.name = module_name(j, i);
            const std::size_t n = as_size(require(j, "dimension", v.name), "dimension");
            auto ops = ctx.matrices(require(j, "x", v.name), d, n, v.name + ".x");
            v.base = FinLengthModule(ctx.working, d, n, std::move(ops));
            v.b = ctx.matrices(require(j, "b", v.name), out.algebra.group().size(), n, v.name + ".b");
            validate_module(out.algebra, v);
            out.modules.push_back(std::move(v));
        }
    }
    return out;
}

ZalgFile parse_zalg_document(const std::string& text, std::optional<Field> target) {
    const json doc = parse_json(text);
    if (as_text(require(doc, "kind", "document"), "kind") != "zalg") throw ParseError("not a zalg document");
    const Context ctx = make_context(doc, target);

    CenterRing z;
    if (doc.contains("center")) {
        const json& c = doc.at("center");
        const std::string type = as_text(require(c, "type", "center"), "center.type");
        if (type == "field") z.kind = CenterKind::field;
        else if (type == "laurent") z.kind = CenterKind::laurent;
        else if (type == "polynomial") z.kind = CenterKind::polynomial;
        else throw ParseError("unknown center type \"" + type + "\"");
        z.rank = z.kind == CenterKind::field ? 0 : as_size(require(c, "rank", "center"), "center.rank");
        if (c.contains("variables")) {
            for (const auto& v : c.at("variables")) z.variables.push_back(as_text(v, "center variable"));
            if (z.variables.size() != z.rank) throw ParseError("center lists the wrong number of variables");
        } else {
            z.variables = default_variables(z.rank, "y");
        }
    }

    const json& basis = require(doc, "basis", "document");
    if (!basis.is_array() || basis.empty()) throw ParseError("\"basis\" must be a non-empty array");
    std::vector<std::string> labels;
    for (const auto& b : basis) labels.push_back(as_text(b, "basis label"));
    const std::size_t r = labels.size();
    const std::size_t unit = as_size(require(doc, "unit", "document"), "unit");
    if (unit >= r) throw ParseError("unit index out of range");

    const LaurentElt zero(ctx.working, z.rank);
    std::vector<std::vector<ZFiniteAlgebra::Elt>> c(r, std::vector<ZFiniteAlgebra::Elt>(r, ZFiniteAlgebra::Elt(r, zero)));
    for (const auto& t : require(doc, "structure", "document")) {
        if (!t.is_array() || t.size() != 4) throw ParseError("structure entries are [i, j, m, coefficient]");
        const std::size_t i = as_size(t[0], "structure index");
        const std::size_t j = as_size(t[1], "structure index");
        const std::size_t m = as_size(t[2], "structure index");
        if (i >= r || j >= r || m >= r) throw ParseError("structure index out of range");
        c[i][j][m] += ctx.laurent(t[3], z.rank, z.variables, "structure coefficient");
    }

    ZalgFile out;
    out.field = ctx.working;
    out.algebra = ZFiniteAlgebra(ctx.working, z, std::move(labels), unit, std::move(c));
    if (doc.contains("parameters"))
        for (const auto& [k, v] : doc.at("parameters").items()) out.parameters[k] = as_text(v, "parameter");
    if (doc.contains("central_elements")) {
        for (const auto& e : doc.at("central_elements")) {
            const std::string name = as_text(require(e, "name", "central element"), "name");
            const json& coords = require(e, "coordinates", name);
            if (!coords.is_array() || coords.size() != r) throw ParseError(name + ": needs one coordinate per basis element");
            ZFiniteAlgebra::Elt x;
            for (const auto& v : coords) x.push_back(ctx.laurent(v, z.rank, z.variables, name));
            out.central_elements.emplace_back(name, std::move(x));
        }
    }
    if (doc.contains("modules")) {
        const json& list = doc.at("modules");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string name = module_name(list[i], i);
            const std::size_t n = as_size(require(list[i], "dimension", name), "dimension");
            auto acts = ctx.matrices(require(list[i], "actions", name), r, n, name + ".actions");
            try {
                out.modules.push_back({name, FinDimModule(out.algebra, n, std::move(acts))});
            } catch (const InvalidInput& e) {
                throw InvalidInput(name + ": " + e.what());
            }
        }
    }
    return out;
}

CrossedFile load_crossed_file(const std::filesystem::path& path, std::optional<Field> target) {
    return parse_crossed_document(read_text_file(path), target);
}

ZalgFile load_zalg_file(const std::filesystem::path& path, std::optional<Field> target) {
    return parse_zalg_document(read_text_file(path), target);
}

}  // namespace ldual
