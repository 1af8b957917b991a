// Copyright 2026 The ppo Authors
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

#ifndef PPO_VERIFY_H
#define PPO_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace ppo {

struct VerifyCheck {
    std::string suite;
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

/// field, group, hilbert, coords, orbits, spectra.
const std::vector<std::string> &verify_suite_names();

/// Runs one suite, or every suite for "all". Randomized checks draw from a
/// generator seeded with `seed`. Throws InvalidModulus for n not an odd
/// prime at most 11, InvalidArgument for an unknown suite.
std::vector<VerifyCheck> run_verify(const std::string &suite, std::uint32_t n, std::uint64_t seed);

}  // namespace ppo

#endif
