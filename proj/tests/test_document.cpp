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

#include <gtest/gtest.h>

#include <cstdlib>
#include <cstring>

#include "mubkit/document.hpp"
#include "mubkit/errors.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/su2ops.hpp"

using namespace mubkit;
using namespace mubkit::io;

namespace {

bool bit_equal(const OperatorMatrix &a, const OperatorMatrix &b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           std::memcmp(a.data(), b.data(), sizeof(Complex) * a.size()) == 0;
}

}  // namespace

TEST(Document, basis_round_trip_exact) {
    const auto b = mub::as_basis(mub::eigenbasis(AngularSpace(4), 0.0, 2));
    const MatrixDocument doc = basis_document(b, {{"d", 5}, {"r", 0.0}, {"a", 2}}, true);
    ASSERT_TRUE(doc.exact.has_value());
    const MatrixDocument back = from_json(nlohmann::json::parse(write_json(doc)));
    EXPECT_EQ(back.kind, DocumentKind::Basis);
    EXPECT_EQ(back.exact->exps, doc.exact->exps);
    EXPECT_TRUE(bit_equal(back.entries, doc.entries));
    const mub::Basis rb = basis_from_document(back);
    ASSERT_TRUE(rb.exact.has_value());
    EXPECT_EQ(*rb.exact, *b.exact);
    EXPECT_EQ(rb.label, b.label);
}

TEST(Document, float_round_trip_is_bit_exact) {
    const auto b = mub::as_basis(mub::eigenbasis(AngularSpace(5), 0.123456789, 3));
    const MatrixDocument doc = basis_document(b, {{"r", 0.123456789}}, false);
    EXPECT_FALSE(doc.exact.has_value());
    const MatrixDocument back = from_json(nlohmann::json::parse(write_json(doc)));
    EXPECT_TRUE(bit_equal(back.entries, doc.entries));
}

TEST(Document, metadata_records_ordering_and_schema) {
    const nlohmann::json j = to_json(hadamard_document(mub::hadamard_matrix(3, 1), 1, true));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["kind"], "hadamard");
    EXPECT_NE(j["row_order"].get<std::string>().find("descending"), std::string::npos);
    EXPECT_NE(j["column_order"].get<std::string>().find("descending"), std::string::npos);
    EXPECT_EQ(j["exact"]["entries"][0][0]["denom"], 6);
    EXPECT_EQ(j["metadata"]["tool_version"], std::string(kToolVersion));
}

TEST(Document, operator_document) {
    const AngularSpace sp(2);
    const auto doc = operator_document("v", sp, su2::v_ra_matrix(sp, {0.5, 1}), {{"r", 0.5}, {"a", 1}});
    const auto back = from_json(to_json(doc));
    EXPECT_EQ(back.params["operator"], "v");
    EXPECT_TRUE(bit_equal(back.entries, doc.entries));
    EXPECT_THROW(basis_from_document(back), Error);
}

TEST(Document, csv_is_flagged_lossy) {
    const auto doc = basis_document(mub::computational_basis(2), {}, false);
    const std::string csv = write_csv(doc);
    EXPECT_NE(csv.find("lossy"), std::string::npos);
    EXPECT_NE(csv.find("1,0,0,0"), std::string::npos);
}

TEST(Document, rejects_malformed_input) {
    const auto doc = basis_document(mub::as_basis(mub::eigenbasis(AngularSpace(2), 0.0, 1)), {}, true);
    nlohmann::json j = to_json(doc);
    j["exact"]["entries"][0][0]["exp"] = 1;
    const auto expect_parse_error = [](const nlohmann::json &x) {
        try {
            from_json(x);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError);
        }
    };
    expect_parse_error(j);
    nlohmann::json k = to_json(doc);
    k["schema"] = 2;
    expect_parse_error(k);
    nlohmann::json m = to_json(doc);
    m.erase("entries");
    expect_parse_error(m);
    nlohmann::json n = to_json(doc);
    n["kind"] = "matrix";
    expect_parse_error(n);
    EXPECT_THROW(read_document_file("/nonexistent/file.json"), Error);
}

TEST(RunConfig, environment_override) {
    ::unsetenv("MUBKIT_TOL");
    EXPECT_DOUBLE_EQ(RunConfig::from_environment().tolerance, 1e-10);
    ::setenv("MUBKIT_TOL", "1e-6", 1);
    EXPECT_DOUBLE_EQ(RunConfig::from_environment().tolerance, 1e-6);
    ::setenv("MUBKIT_TOL", "-1", 1);
    EXPECT_THROW(RunConfig::from_environment(), Error);
    ::setenv("MUBKIT_TOL", "abc", 1);
    EXPECT_THROW(RunConfig::from_environment(), Error);
    ::unsetenv("MUBKIT_TOL");
}
