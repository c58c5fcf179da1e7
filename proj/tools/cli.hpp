/*
   Copyright (c) 2026 The mlculp Authors

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

// Command-line front end. `run_cli` holds the whole program so tests can drive
// it in-process; the executable only forwards argv.

#include <iosfwd>
#include <string>
#include <vector>

namespace mlculp::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_bad_flags = 1,
  exit_load_failure = 2,
  exit_infeasible = 3,
  exit_self_test = 4,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlculp::cli
