// Copyright 2026 The dmeter Authors
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

#ifndef DMETER_TOOLS_CLI_H_
#define DMETER_TOOLS_CLI_H_

#include <iosfwd>

namespace dmeter::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFatal = 1;
inline constexpr int kMetricFailures = 2;

// Runs the dmeter command line. Human summaries go to `out`, diagnostics to
// `err`; machine output only ever goes to files.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace dmeter::cli

#endif  // DMETER_TOOLS_CLI_H_
