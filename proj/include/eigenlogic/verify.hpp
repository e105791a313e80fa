// Copyright 2026 The Eigenlogic Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eigenlogic {

inline constexpr std::uint64_t kDefaultVerifySeed = 20160722;

struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    /// First failure, if any.
    std::string detail;

    bool ok() const noexcept { return passed == total; }
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool ok() const noexcept;
    std::size_t passed() const noexcept;
    std::size_t total() const noexcept;
};

/// table1, minmax, fuzzy, bound, oracle.
std::span<const std::string_view> suite_names() noexcept;

/// Throws InvalidArgumentError for an unknown suite name.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed = kDefaultVerifySeed);

}  // namespace eigenlogic
