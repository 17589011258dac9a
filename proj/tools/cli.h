// Copyright 2026 The motrack Authors
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

#ifndef MOTRACK_TOOLS_CLI_H_
#define MOTRACK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace motrack::cli {

// Runs the motrack command line. `args` excludes the program name. Normal
// output goes to `out`, diagnostics to `err`. Returns the process exit code:
// 0 on success, nonzero after reporting an error.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace motrack::cli

#endif  // MOTRACK_TOOLS_CLI_H_
