// Copyright 2026 The trisample Authors.
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

#ifndef TRISAMPLE_TOOLS_CLI_HPP_
#define TRISAMPLE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace trisample::cli {

// Entry point shared by main() and the tests. args excludes the program
// name. Results go to `out` (or --output), diagnostics to `err`. Returns
// the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisample::cli

#endif  // TRISAMPLE_TOOLS_CLI_HPP_
