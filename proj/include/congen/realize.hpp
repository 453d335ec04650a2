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

// realize.hpp : surface realization of sentence plans.
//
// Marker choice: hypotactic links walk the systemic networks; all other
// groups query the lexicon with style-derived feature sets. Clause content
// comes pre-rendered from the scenario; the realizer only composes clauses,
// places markers, and handles language-specific punctuation and word-order
// adjustments.

#ifndef CONGEN_REALIZE_HPP
#define CONGEN_REALIZE_HPP

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "congen/discourse.hpp"
#include "congen/knowledge.hpp"
#include "congen/lexicon.hpp"
#include "congen/linearize.hpp"
#include "congen/network.hpp"

namespace congen {

struct RealizationResources {
  const Lexicon* lexicon = nullptr;
  std::shared_ptr<const NetworkSet> networks;

  static RealizationResources bundled();
};

// What the realizer chose for one plan; exposed for tests and debugging.
struct RealizeTrace {
  std::optional<MarkerGroup> group;
  std::optional<std::string> lemma;        // concessive marker (split joined '+')
  std::optional<std::string> slot_lemma;   // conjunctive-slot adjunct
  std::optional<std::string> prefix;       // thematization prefix
  bool preposition_used = false;
};

class MarkerPicker {
 public:
  explicit MarkerPicker(RankPolicy policy = {});
  const MarkerEntry* pick(const std::vector<const MarkerEntry*>& candidates);

 private:
  RankPolicy policy_;
  std::mt19937 rng_;
};

// Renders one plan as one sentence (the English thematized-emphasis pattern
// yields a two-sentence text chunk). Throws MissingClauseForm, NoCandidate,
// InvalidFeatureCombination.
std::string realize_plan(const SentencePlan& plan,
                         const ConcessionSituation& situation,
                         const RealizationResources& resources,
                         Language language, const StyleParams& style,
                         ConcessionKind kind, MarkerPicker& picker,
                         RealizeTrace* trace = nullptr);

struct LanguageOutput {
  Language language = Language::En;
  std::vector<std::string> sentences;  // one entry per plan
  std::vector<RealizeTrace> traces;
};

struct RealizationResult {
  DiscourseTree tree;
  std::string notation;
  std::vector<SentencePlan> plans;
  std::vector<LanguageOutput> outputs;
};

class Scenario;  // scenario.hpp

// Full pipeline: validate, classify, build tree, check constraints,
// linearize, realize per language. Throws Error subclasses whose stage()
// identifies the failing step.
RealizationResult realize_scenario(const Scenario& scenario,
                                   const std::vector<Language>& languages,
                                   const StyleParams& style,
                                   const RealizationResources& resources,
                                   const RankPolicy& policy = {});

}  // namespace congen

#endif  // CONGEN_REALIZE_HPP
