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

// scenario.hpp : declarative scenario files (JSON) binding a situation to
// goals, style defaults, and metadata. Format documented in README.md.

#ifndef CONGEN_SCENARIO_HPP
#define CONGEN_SCENARIO_HPP

#include <map>
#include <string>

#include "congen/knowledge.hpp"
#include "congen/linearize.hpp"

namespace congen {

class Scenario {
 public:
  ConcessionSituation situation;
  GoalConfig goals;
  StyleParams style;  // defaults; CLI flags override
  std::string label;
  std::map<std::string, std::string> metadata;
};

// Throws ScenarioParseError (syntax, bad enum values, malformed clause text)
// or ScenarioReferenceError (acts/rules/presuppositions naming undeclared
// propositions).
Scenario parse_scenario(const std::string& json_text,
                        const std::string& origin = "<string>");
Scenario parse_scenario_file(const std::string& path);

}  // namespace congen

#endif  // CONGEN_SCENARIO_HPP
