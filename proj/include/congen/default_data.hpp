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

// default_data.hpp : bundled marker inventory and network topology, embedded
// at build time from data/markers.lex and data/networks.net.

#ifndef CONGEN_DEFAULT_DATA_HPP
#define CONGEN_DEFAULT_DATA_HPP

#include <string>

namespace congen {

const std::string& default_lexicon_text();
const std::string& default_network_text();

}  // namespace congen

#endif  // CONGEN_DEFAULT_DATA_HPP
