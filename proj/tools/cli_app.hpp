// Copyright 2026 The Authors.
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

#ifndef MAXCOV_TOOLS_CLI_APP_HPP_
#define MAXCOV_TOOLS_CLI_APP_HPP_

namespace maxcov {

// Parses argv and runs one subcommand. Returns 0 on success, 1 on usage
// errors (bad flags, bad values, missing paths), 2 on data errors (malformed
// files, solver failures). The MAXCOV_LOG env var (debug|info|warn|error)
// sets stderr verbosity; every run echoes its resolved config at info level.
int run_cli(int argc, const char* const* argv);

}  // namespace maxcov

#endif  // MAXCOV_TOOLS_CLI_APP_HPP_
