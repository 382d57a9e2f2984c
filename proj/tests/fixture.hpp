/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// The worked example: digest 39cf0c951da2210198e0db94f91a4b3a, p_law 0.5,
// an AND split at E0, Domination (j ∨ T ≡ T) at E1, then literal closure.
// Expected pair: "(p ∨ T) ∧ p" and "T ∧ p".

#ifndef QGEN_TESTS_FIXTURE_HPP_
#define QGEN_TESTS_FIXTURE_HPP_

#include <vector>

#include "qgen/derivation.hpp"

namespace qgen::testing {

inline constexpr const char* kExampleDigest = "39cf0c951da2210198e0db94f91a4b3a";

inline DifficultyConfig example_config() {
  DifficultyConfig c;
  c.p_law_init = 0.5;
  // Both literal draws (digits 1 and 13) must land on p.
  c.pool_size = 1;
  c.min_leaf_count = 1;
  return c;
}

inline std::vector<RuleChoice> example_script() {
  return {
      RuleChoice::structural(StructuralKind::kAnd),        // E0
      RuleChoice::law(law_by_name("Domination-∨")->id),    // E1
      RuleChoice::structural(StructuralKind::kLiteral),    // E3
      RuleChoice::structural(StructuralKind::kLiteral),    // E2
  };
}

}  // namespace qgen::testing

#endif  // QGEN_TESTS_FIXTURE_HPP_
