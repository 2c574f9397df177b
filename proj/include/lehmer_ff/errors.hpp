/*
   Copyright 2026 The lehmer-ff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace lehmer_ff {

/// Base of every error raised by the library. The CLI maps subclasses of
/// ResourceError to exit code 3 and everything else to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments or malformed input.
class InputError : public Error {
public:
    using Error::Error;
};

/// A request that is well formed but exceeds a configured budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

#define LEHMER_FF_ERROR(Name, Base)          \
    class Name : public Base {               \
    public:                                  \
        using Base::Base;                    \
    }

LEHMER_FF_ERROR(InvalidPrime, InputError);
LEHMER_FF_ERROR(InvalidDegree, InputError);
LEHMER_FF_ERROR(DivisionByZero, InputError);
LEHMER_FF_ERROR(FieldMismatch, InputError);
LEHMER_FF_ERROR(UndefinedGcd, InputError);
LEHMER_FF_ERROR(InvalidModulus, InputError);
LEHMER_FF_ERROR(InvalidInput, InputError);
LEHMER_FF_ERROR(CannotFactorZero, InputError);
LEHMER_FF_ERROR(UndefinedValuation, InputError);
LEHMER_FF_ERROR(ParseError, InputError);

LEHMER_FF_ERROR(OracleOverflow, ResourceError);
LEHMER_FF_ERROR(FactoringBudgetExceeded, ResourceError);
LEHMER_FF_ERROR(SieveBudgetExceeded, ResourceError);

// A transcendental comparison landed too close to equality to be trusted.
LEHMER_FF_ERROR(PrecisionAlert, Error);

// An internal consistency check failed; indicates a bug, not bad input.
LEHMER_FF_ERROR(InvariantViolation, Error);

#undef LEHMER_FF_ERROR

}  // namespace lehmer_ff
