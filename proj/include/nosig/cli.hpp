// Copyright 2026 The nosig Authors
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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace nosig {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_SELFTEST_FAILED = 1;
inline constexpr int EXIT_USAGE = 2;
inline constexpr int EXIT_CONFIG = 3;
inline constexpr int EXIT_SCENARIO = 4;

/// Runs the acceptance checks, printing one line per check; returns 0 when all pass.
using SelftestFn = std::function<int(std::ostream &)>;

/// Entry point of the command-line tool. `args` excludes the program name.
/// Output goes to `out`, diagnostics to `err`. Without a selftest callback
/// `nosig selftest` is a usage error.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
             const SelftestFn &selftest = {});

}  // namespace nosig
