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

#include <stdexcept>
#include <string>

namespace nosig {

// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define NOSIG_DEFINE_ERROR(Name)          \
    class Name : public Error {           \
       public:                            \
        using Error::Error;               \
    };

NOSIG_DEFINE_ERROR(NotSquare)
NOSIG_DEFINE_ERROR(NotHermitian)
NOSIG_DEFINE_ERROR(DimMismatch)
NOSIG_DEFINE_ERROR(ConvergenceFailure)
NOSIG_DEFINE_ERROR(OutOfRange)
NOSIG_DEFINE_ERROR(NotAQubit)
NOSIG_DEFINE_ERROR(NotNormalized)
NOSIG_DEFINE_ERROR(NotADensityMatrix)
NOSIG_DEFINE_ERROR(BadSubsystemIndex)
NOSIG_DEFINE_ERROR(NotOrthonormal)
NOSIG_DEFINE_ERROR(EmptyEnsemble)
NOSIG_DEFINE_ERROR(UnmatchedTerm)
NOSIG_DEFINE_ERROR(BadConfig)
NOSIG_DEFINE_ERROR(NoClosedForm)
NOSIG_DEFINE_ERROR(BadSpec)

#undef NOSIG_DEFINE_ERROR

}  // namespace nosig
