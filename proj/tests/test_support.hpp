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
#include <random>

#include "mubkit/angular.hpp"

namespace mubkit::testing {

/// Runs `prop` on `count` cases drawn by `gen` from a seeded engine.
template <typename Gen, typename Prop>
void for_all(std::uint64_t seed, int count, Gen gen, Prop prop) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) prop(gen(rng));
}

inline int uniform_int(std::mt19937_64 &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// exp(2 pi i x / d) through std::exp, independent of the library helpers.
inline Complex oracle_q(double x, int d) {
    return std::exp(Complex(0.0, 2.0 * 3.14159265358979323846 * x / d));
}

}  // namespace mubkit::testing
