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
//
// Copyright 2026 The readctl Authors.
#ifndef READCTL_TOOLS_CLI_H_
#define READCTL_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace readctl::cli {

// Exit codes: 0 success, 1 internal error, 2 bad input or flags.
// args[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace readctl::cli

#endif  // READCTL_TOOLS_CLI_H_
