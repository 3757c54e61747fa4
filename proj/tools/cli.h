// Copyright 2026 The hcauthor Authors.
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


// The hcauthor command line, callable in-process so tests can drive it.

#ifndef HCAUTHOR_TOOLS_CLI_H_
#define HCAUTHOR_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace hcauthor {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

// args excludes the program name.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace hcauthor

#endif  // HCAUTHOR_TOOLS_CLI_H_
