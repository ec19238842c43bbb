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

#ifndef HWALK_ERRORS_H
#define HWALK_ERRORS_H

#include <stdexcept>
#include <string>

namespace hwalk {

/// Argument outside the mathematical domain of an operation (|n| > t, parity, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Exact-arithmetic operation with no result in the scalar ring or series ring.
class RingError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Binary series operation on operands with different truncation orders.
class OrderMismatchError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation point lies on (or within tolerance of) a branch cut of omega.
class BranchCutError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Parameter lies outside the region where an asymptotic formula is valid.
class ValidityError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Fourier grid too coarse to represent the walk support without wraparound.
class AliasingError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric routine could not reach the requested tolerance within its budget.
class BudgetError : public std::runtime_error {
   public:
    BudgetError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved estimate " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

   private:
    double achieved_;
};

}  // namespace hwalk

#endif  // HWALK_ERRORS_H
