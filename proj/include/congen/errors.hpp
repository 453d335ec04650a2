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

// errors.hpp : exception hierarchy; every error names the pipeline stage
// that raised it so the CLI can report "error [stage x]: ..." uniformly.

#ifndef CONGEN_ERRORS_HPP
#define CONGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace congen {

class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& msg)
      : std::runtime_error(msg), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Goal configuration matches no known concession pattern.
class UnmappableGoalConfig : public Error {
 public:
  explicit UnmappableGoalConfig(const std::string& msg)
      : Error("classify", msg) {}
};

// Lexicon file is syntactically broken (carries a 1-based line number).
class LexiconParseError : public Error {
 public:
  LexiconParseError(int line, const std::string& msg)
      : Error("lexicon", "line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Lexicon content violates a structural invariant (duplicates, empty group).
class LexiconInvariantError : public Error {
 public:
  explicit LexiconInvariantError(const std::string& msg)
      : Error("lexicon", msg) {}
};

// A marker query matched nothing; the caller decides how to fall back.
class NoCandidate : public Error {
 public:
  explicit NoCandidate(const std::string& msg) : Error("realize", msg) {}
};

// A proposition lacks the clause-form variant the plan needs.
class MissingClauseForm : public Error {
 public:
  explicit MissingClauseForm(const std::string& msg) : Error("realize", msg) {}
};

// The feature bundle has no path through the choice network.
class InvalidFeatureCombination : public Error {
 public:
  explicit InvalidFeatureCombination(const std::string& msg)
      : Error("realize", msg) {}
};

// Network description file is broken.
class NetworkParseError : public Error {
 public:
  explicit NetworkParseError(const std::string& msg)
      : Error("network", msg) {}
};

// Scenario file is syntactically broken.
class ScenarioParseError : public Error {
 public:
  explicit ScenarioParseError(const std::string& msg) : Error("parse", msg) {}
};

// Scenario references an id that is not declared.
class ScenarioReferenceError : public Error {
 public:
  explicit ScenarioReferenceError(const std::string& msg)
      : Error("parse", msg) {}
};

// Structural problem detected mid-pipeline (validation, constraints, ...).
class PipelineError : public Error {
 public:
  PipelineError(const std::string& stage, const std::string& msg)
      : Error(stage, msg) {}
};

}  // namespace congen

#endif  // CONGEN_ERRORS_HPP
