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
#include <string>
#include <string_view>
#include <vector>

namespace mubkit::selftest {

enum class Suite { Quon, Su2, Mub, Gauss, Wigner, All };

Suite suite_from_string(std::string_view s);

enum class Fault { None, CorruptHadamardExponent };

struct Failure {
    std::string tag;
    std::string detail;
};

struct Result {
    int checks = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
};

Result run(Suite suite, std::uint64_t seed, double tol = 1e-10, Fault fault = Fault::None);

}  // namespace mubkit::selftest
