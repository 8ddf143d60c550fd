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

#include <iosfwd>
#include <string>
#include <vector>

namespace nosig {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
};

/// Evaluates every acceptance criterion in order.
std::vector<CriterionResult> evaluate_acceptance();

/// Prints one PASS/FAIL line per criterion and returns 0 when all pass.
int run_acceptance(std::ostream &out);

}  // namespace nosig
