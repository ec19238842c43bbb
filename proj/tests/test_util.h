// Copyright 2026 The hwalk Authors
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

#ifndef HWALK_TESTS_TEST_UTIL_H
#define HWALK_TESTS_TEST_UTIL_H

#include <cstdint>
#include <random>
#include <vector>

#include "hwalk/exact/rational_series.h"

namespace hwalk::testutil {

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) { return std::mt19937_64(20261014 + salt); }

inline Rational random_rational(std::mt19937_64& rng, long range = 9) {
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, range);
    return make_rational(num(rng), den(rng));
}

inline RationalSeries random_series(std::mt19937_64& rng, int order, bool unit_constant = false) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = random_rational(rng);
    if (unit_constant) c[0] = 1;
    return RationalSeries(std::move(c), order);
}

}  // namespace hwalk::testutil

#endif  // HWALK_TESTS_TEST_UTIL_H
