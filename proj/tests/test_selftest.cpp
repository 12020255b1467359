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

#include "mubkit/errors.hpp"
#include "mubkit/selftest.hpp"

using namespace mubkit;
using namespace mubkit::selftest;

TEST(Selftest, every_suite_passes) {
    for (Suite s : {Suite::Quon, Suite::Su2, Suite::Mub, Suite::Gauss, Suite::Wigner}) {
        const Result r = run(s, 7);
        EXPECT_GT(r.checks, 0);
        for (const auto &f : r.failures) ADD_FAILURE() << f.tag << ": " << f.detail;
    }
}

TEST(Selftest, deterministic_for_fixed_seed) {
    EXPECT_EQ(run(Suite::Gauss, 99).checks, run(Suite::Gauss, 99).checks);
}

TEST(Selftest, injected_hadamard_fault_is_named) {
    const Result r = run(Suite::Mub, 1, 1e-10, Fault::CorruptHadamardExponent);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].tag, "generalized-hadamard");
}

TEST(Selftest, suite_names) {
    EXPECT_EQ(suite_from_string("all"), Suite::All);
    EXPECT_EQ(suite_from_string("wigner"), Suite::Wigner);
    EXPECT_THROW(suite_from_string("nope"), Error);
}
