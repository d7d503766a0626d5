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

#ifndef SPIDER_GENERATORS_HPP_
#define SPIDER_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "spider/digraph.hpp"

namespace spider {

// All n(n-1) ordered pairs. Throws std::invalid_argument for n == 0.
Digraph gen_complete_digraph(std::size_t n);

// Every vertex gets exactly d out-neighbours drawn uniformly without
// replacement from the other n-1 vertices, stored in ascending order.
// Deterministic in `seed`. Throws std::invalid_argument when d >= n.
Digraph gen_random_out_regular(std::size_t n, std::size_t d, std::uint64_t seed);

// Circulant orientation u -> u+j (mod n), j = 1..(n-1)/2, followed by a
// seeded relabelling. Throws std::invalid_argument for even or zero n.
Digraph gen_regular_tournament(std::size_t n, std::uint64_t seed);

enum class Family { kComplete, kRandomOutRegular, kTournament };

// "complete", "random-out-regular", "tournament".
std::string_view to_string(Family family) noexcept;
std::optional<Family> family_from_string(std::string_view name) noexcept;

// A family plus its size parameters; d is used by kRandomOutRegular only.
struct GeneratorSpec {
  Family family = Family::kComplete;
  std::size_t n = 0;
  std::size_t d = 0;
};

Digraph generate(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace spider

#endif  // SPIDER_GENERATORS_HPP_
