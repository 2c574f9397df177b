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

#include <ostream>
#include <string>
#include <vector>

namespace lehmer_ff::cli {

enum ExitCode : int {
    ok = 0,
    verification_failed = 1,
    usage_error = 2,
    resource_error = 3,
};

/// Runs the lehmer-ff command line. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lehmer_ff::cli
