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

#include "hwalk/genfun/numeric_checks.h"

#include "gtest/gtest.h"

using namespace hwalk;

TEST(numeric_checks, cauchy_extraction) {
    CheckReport rep = cauchy_extraction_check(10, 3, 1e-10);
    ASSERT_TRUE(rep.passed) << rep.witness.value_or("");
    ASSERT_EQ(rep.cases, 11u * 16u);
    ASSERT_LT(*rep.max_error, 1e-12);
    ASSERT_NEAR(cauchy_coefficient(2, 0, 0), -0.5, 1e-13);
}

TEST(numeric_checks, integral_identities) {
    CheckReport rep = integral_identity_check(5, 1e-10);
    ASSERT_TRUE(rep.passed) << rep.witness.value_or("");
}
