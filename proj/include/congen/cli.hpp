// Copyright 2026 the congen authors
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

// cli.hpp : command-line front end, callable in-process for tests.

#ifndef CONGEN_CLI_HPP
#define CONGEN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace congen {

// argv-style arguments without the program name. Returns the process exit
// code: 0 success, 1 pipeline error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace congen

#endif  // CONGEN_CLI_HPP
