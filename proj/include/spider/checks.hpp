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

#ifndef SPIDER_CHECKS_HPP_
#define SPIDER_CHECKS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace spider {

// kChecked turns every bound below into a hard failure and enables the
// per-run audits (properness, path revalidation, final re-verification).
// kFast records bounds but never throws and skips the audits.
enum class Mode { kChecked, kFast };

enum class Relation { kGreaterEqual, kLessEqual, kEqual };

// One inequality evaluated on a concrete run.
struct BoundCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  Relation relation = Relation::kGreaterEqual;
  bool passed = false;
  // Recorded for inspection but never fatal, even in checked mode.
  bool advisory = false;

  friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

using CheckLog = std::vector<BoundCheck>;

BoundCheck make_check(std::string name, std::int64_t lhs, Relation relation, std::int64_t rhs);

// "name: lhs >= rhs PASS" with the relation rendered as ≥, ≤ or =, plus
// " (advisory)" for advisory checks.
std::string render(const BoundCheck& check);

// Appends to `log` (when given); throws InvariantViolation on failure in
// checked mode unless the check is advisory.
void enforce(const BoundCheck& check, Mode mode, CheckLog* log);

BoundCheck advisory(BoundCheck check);

}  // namespace spider

#endif  // SPIDER_CHECKS_HPP_
