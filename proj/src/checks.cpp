// Copyright 2026 The Spider Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spider/checks.hpp"

#include <utility>

#include "spider/errors.hpp"

namespace spider {

BoundCheck make_check(std::string name, std::int64_t lhs, Relation relation, std::int64_t rhs) {
  bool passed = false;
  switch (relation) {
    case Relation::kGreaterEqual: passed = lhs >= rhs; break;
    case Relation::kLessEqual: passed = lhs <= rhs; break;
    case Relation::kEqual: passed = lhs == rhs; break;
  }
  return {std::move(name), lhs, rhs, relation, passed};
}

std::string render(const BoundCheck& check) {
  const char* op = check.relation == Relation::kGreaterEqual ? " ≥ "
                   : check.relation == Relation::kLessEqual  ? " ≤ "
                                                             : " = ";
  return check.name + ": " + std::to_string(check.lhs) + op + std::to_string(check.rhs) +
         (check.passed ? " PASS" : " FAIL") + (check.advisory ? " (advisory)" : "");
}

void enforce(const BoundCheck& check, Mode mode, CheckLog* log) {
  if (log != nullptr) log->push_back(check);
  if (!check.passed && !check.advisory && mode == Mode::kChecked) throw InvariantViolation(render(check));
}

BoundCheck advisory(BoundCheck check) {
  check.advisory = true;
  return check;
}

}  // namespace spider
