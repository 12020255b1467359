// Copyright 2026 The mubkit Authors
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

#include "mubkit/document.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mubkit/errors.hpp"

namespace mubkit::io {

using nlohmann::json;

namespace {

constexpr std::string_view kDescending = "k descending (d-1, ..., 0), k = j + m";

struct KindName {
    DocumentKind kind;
    std::string_view name;
};

constexpr KindName kKindNames[] = {
    {DocumentKind::Operator, "operator"},
    {DocumentKind::Basis, "basis"},
    {DocumentKind::Hadamard, "hadamard"},
    {DocumentKind::OverlapReport, "overlap-report"},
    {DocumentKind::CensusReport, "census-report"},
};

[[noreturn]] void parse_fail(const std::string &what) { throw Error(ErrorKind::ParseError, what); }

}  // namespace

std::string_view to_string(DocumentKind kind) {
    for (const auto &k : kKindNames)
        if (k.kind == kind) return k.name;
    return "unknown";
}

DocumentKind kind_from_string(std::string_view s) {
    for (const auto &k : kKindNames)
        if (k.name == s) return k.kind;
    parse_fail("unknown document kind '" + std::string(s) + "'");
}

OperatorMatrix ExactEntries::dense(int dimension) const {
    OperatorMatrix out(exps.rows(), exps.cols());
    for (Eigen::Index r = 0; r < exps.rows(); ++r)
        for (Eigen::Index c = 0; c < exps.cols(); ++c)
            out(r, c) = scale * root_phase(exps(r, c), dimension);
    return out;
}

MatrixDocument basis_document(const mub::Basis &b, const json &params, bool exact) {
    const int d = b.dim();
    MatrixDocument doc;
    doc.kind = DocumentKind::Basis;
    doc.dimension = d;
    doc.params = params;
    doc.params["label"] = b.label;
    doc.row_order = kDescending;
    doc.column_order = "alpha ascending (column alpha is basis vector alpha)";
    doc.entries = b.vectors;
    doc.check_tag = "eigenbasis";
    if (exact && b.exact) {
        ExactEntries ex{decltype(ExactEntries::exps)(d, d), b.exact->scale()};
        for (int i = 0; i < d; ++i)
            for (int al = 0; al < d; ++al) ex.exps(i, al) = b.exact->exponent(d - 1 - i, al);
        doc.exact = std::move(ex);
    }
    return doc;
}

MatrixDocument hadamard_document(const PhaseMatrix &h, int a, bool exact) {
    const int d = h.dim();
    MatrixDocument doc;
    doc.kind = DocumentKind::Hadamard;
    doc.dimension = d;
    doc.params = {{"d", d}, {"a", a}};
    doc.row_order = kDescending;
    doc.column_order = "alpha descending (d-1, ..., 0)";
    doc.entries = h.unscaled_matrix();
    doc.check_tag = "generalized-hadamard";
    if (exact) {
        ExactEntries ex{decltype(ExactEntries::exps)(d, d), 1.0};
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < d; ++c) ex.exps(i, c) = h.exponent(d - 1 - i, d - 1 - c);
        doc.exact = std::move(ex);
    }
    return doc;
}

MatrixDocument operator_document(const std::string &name, const AngularSpace &sp,
                                 const OperatorMatrix &m, const json &params) {
    MatrixDocument doc;
    doc.kind = DocumentKind::Operator;
    doc.dimension = sp.dim();
    doc.params = params;
    doc.params["operator"] = name;
    doc.params["two_j"] = sp.two_j();
    doc.row_order = kDescending;
    doc.column_order = kDescending;
    doc.entries = m;
    doc.check_tag = "operator:" + name;
    return doc;
}

mub::Basis basis_from_document(const MatrixDocument &doc) {
    if (doc.kind != DocumentKind::Basis)
        throw Error(ErrorKind::InvalidArgument,
                    "expected a basis document, got " + std::string(to_string(doc.kind)));
    const int d = doc.dimension;
    mub::Basis b{doc.params.value("label", std::string("basis")), doc.entries, std::nullopt};
    if (doc.exact) {
        std::vector<std::int64_t> exps(static_cast<std::size_t>(d) * d);
        for (int i = 0; i < d; ++i)
            for (int al = 0; al < d; ++al)
                exps[static_cast<std::size_t>(d - 1 - i) * d + al] = doc.exact->exps(i, al);
        b.exact = PhaseMatrix(d, std::move(exps));
    }
    return b;
}

json to_json(const MatrixDocument &doc) {
    json entries = json::array();
    for (Eigen::Index r = 0; r < doc.entries.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < doc.entries.cols(); ++c)
            row.push_back({doc.entries(r, c).real(), doc.entries(r, c).imag()});
        entries.push_back(std::move(row));
    }
    json out = {
        {"schema", kSchemaVersion},
        {"kind", to_string(doc.kind)},
        {"dimension", doc.dimension},
        {"params", doc.params},
        {"row_order", doc.row_order},
        {"column_order", doc.column_order},
        {"entries", std::move(entries)},
        {"metadata", {{"tool_version", doc.tool_version}, {"check", doc.check_tag}}},
    };
    if (doc.exact) {
        json rows = json::array();
        for (Eigen::Index r = 0; r < doc.exact->exps.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < doc.exact->exps.cols(); ++c)
                row.push_back({{"exp", doc.exact->exps(r, c)}, {"denom", 2 * doc.dimension}});
            rows.push_back(std::move(row));
        }
        out["exact"] = {{"scale", doc.exact->scale}, {"entries", std::move(rows)}};
    }
    return out;
}

MatrixDocument from_json(const json &j) {
    try {
        if (j.at("schema").get<int>() != kSchemaVersion)
            parse_fail("unsupported schema " + j.at("schema").dump());
        MatrixDocument doc;
        doc.kind = kind_from_string(j.at("kind").get<std::string>());
        doc.dimension = j.at("dimension").get<int>();
        doc.params = j.value("params", json::object());
        doc.row_order = j.value("row_order", std::string());
        doc.column_order = j.value("column_order", std::string());
        if (j.contains("metadata")) {
            doc.tool_version = j["metadata"].value("tool_version", std::string());
            doc.check_tag = j["metadata"].value("check", std::string());
        }
        const json &rows = j.at("entries");
        const auto nr = static_cast<Eigen::Index>(rows.size());
        const auto nc = nr == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows[0].size());
        doc.entries.resize(nr, nc);
        for (Eigen::Index r = 0; r < nr; ++r) {
            if (static_cast<Eigen::Index>(rows[r].size()) != nc) parse_fail("ragged entries");
            for (Eigen::Index c = 0; c < nc; ++c)
                doc.entries(r, c) = {rows[r][c].at(0).get<double>(), rows[r][c].at(1).get<double>()};
        }
        if (j.contains("exact")) {
            const json &ex = j["exact"];
            const json &er = ex.at("entries");
            ExactEntries e{decltype(ExactEntries::exps)(nr, nc), ex.at("scale").get<double>()};
            if (static_cast<Eigen::Index>(er.size()) != nr) parse_fail("exact entries shape mismatch");
            for (Eigen::Index r = 0; r < nr; ++r) {
                if (static_cast<Eigen::Index>(er[r].size()) != nc)
                    parse_fail("exact entries shape mismatch");
                for (Eigen::Index c = 0; c < nc; ++c) {
                    if (er[r][c].at("denom").get<std::int64_t>() != 2 * doc.dimension)
                        parse_fail("exact record denominator must be 2d");
                    e.exps(r, c) = er[r][c].at("exp").get<std::int64_t>();
                }
            }
            if (max_abs_diff(e.dense(doc.dimension), doc.entries) > 1e-12)
                parse_fail("exact and floating entries disagree");
            doc.exact = std::move(e);
        }
        return doc;
    } catch (const json::exception &e) {
        parse_fail(e.what());
    }
}

std::string write_json(const MatrixDocument &doc) { return to_json(doc).dump(1) + "\n"; }

std::string write_csv(const MatrixDocument &doc) {
    std::ostringstream os;
    os.precision(17);
    os << "# mubkit " << to_string(doc.kind) << " d=" << doc.dimension
       << " (lossy: floating entries only, exact records omitted)\n";
    os << "# rows: " << doc.row_order << "; columns: " << doc.column_order << "\n";
    for (Eigen::Index r = 0; r < doc.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < doc.entries.cols(); ++c) {
            if (c) os << ',';
            os << doc.entries(r, c).real() << ',' << doc.entries(r, c).imag();
        }
        os << '\n';
    }
    return os.str();
}

MatrixDocument read_document_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        parse_fail(path + ": " + e.what());
    }
    return from_json(j);
}

RunConfig RunConfig::from_environment() {
    RunConfig cfg;
    if (const char *env = std::getenv("MUBKIT_TOL")) {
        char *end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0')
            throw Error(ErrorKind::InvalidArgument, std::string("MUBKIT_TOL is not a number: ") + env);
        cfg.tolerance = v;
    }
    cfg.validate();
    return cfg;
}

void RunConfig::validate() const {
    if (!(tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
}

}  // namespace mubkit::io
