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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mubkit/angular.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/phase.hpp"

namespace mubkit::io {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class DocumentKind { Operator, Basis, Hadamard, OverlapReport, CensusReport };

std::string_view to_string(DocumentKind kind);
DocumentKind kind_from_string(std::string_view s);

/// Exact entries: value(row, col) = scale * exp(i pi exps[row][col] / dimension).
struct ExactEntries {
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> exps;
    double scale = 1.0;

    OperatorMatrix dense(int dimension) const;
};

struct MatrixDocument {
    DocumentKind kind = DocumentKind::Operator;
    int dimension = 0;
    nlohmann::json params = nlohmann::json::object();
    std::string row_order;
    std::string column_order;
    OperatorMatrix entries;
    std::optional<ExactEntries> exact;
    std::string tool_version{kToolVersion};
    std::string check_tag;
};

MatrixDocument basis_document(const mub::Basis &b, const nlohmann::json &params, bool exact);
MatrixDocument hadamard_document(const PhaseMatrix &h, int a, bool exact);
MatrixDocument operator_document(const std::string &name, const AngularSpace &sp,
                                 const OperatorMatrix &m, const nlohmann::json &params);

/// Rebuilds a basis (with exact exponents when present) from a basis document.
mub::Basis basis_from_document(const MatrixDocument &doc);

nlohmann::json to_json(const MatrixDocument &doc);
/// Throws ParseError on malformed input or when exact and float entries disagree.
MatrixDocument from_json(const nlohmann::json &j);

std::string write_json(const MatrixDocument &doc);
/// Floating entries only; exact records are dropped.
std::string write_csv(const MatrixDocument &doc);

MatrixDocument read_document_file(const std::string &path);

enum class OutputFormat { Json, Csv };

struct RunConfig {
    double tolerance = 1e-10;
    OutputFormat format = OutputFormat::Json;
    bool exact = false;
    std::uint64_t seed = 20260101;

    /// Defaults with MUBKIT_TOL applied when set.
    static RunConfig from_environment();
    /// Throws InvalidArgument unless tolerance > 0.
    void validate() const;
};

}  // namespace mubkit::io
