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

#ifndef HWALK_REPORT_H
#define HWALK_REPORT_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hwalk {

/// Outcome of an exhaustive check over a parameter range.
///
/// `witness` holds a human-readable description of the first failing case.
/// `vacuous` marks a check whose range contained no non-trivial case.
struct CheckReport {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    bool vacuous = false;
    std::optional<std::string> witness;
    /// Largest absolute deviation seen, for numeric checks.
    std::optional<double> max_error;

    void fail(std::string w) {
        if (passed) {
            passed = false;
            witness = std::move(w);
        }
    }
    void record_error(double e) {
        if (!max_error || e > *max_error) max_error = e;
    }
};

/// Merges several reports into one, keeping the first witness.
CheckReport combine(std::string name, const std::vector<CheckReport>& parts);

}  // namespace hwalk

#endif  // HWALK_REPORT_H
