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

#include "hwalk/report.h"

namespace hwalk {

CheckReport combine(std::string name, const std::vector<CheckReport>& parts) {
    CheckReport out;
    out.name = std::move(name);
    out.vacuous = !parts.empty();
    for (const auto& p : parts) {
        out.cases += p.cases;
        out.vacuous = out.vacuous && p.vacuous;
        if (!p.passed) out.fail(p.name + ": " + p.witness.value_or("failed"));
        if (p.max_error) out.record_error(*p.max_error);
    }
    if (parts.empty()) out.vacuous = true;
    return out;
}

}  // namespace hwalk
