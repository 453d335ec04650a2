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

// linearize.hpp : from discourse tree to ordered sentence plans.
//
// A sentence plan is one output sentence: one or two concessively linked
// segments, an optional trailing causal attachment ("because ..."), and the
// constraints the realizer must respect (taxis, admissible marker groups,
// adjunct slot, thematization, exclamation). Plans are language-neutral;
// everything language-specific happens at realization.

#ifndef CONGEN_LINEARIZE_HPP
#define CONGEN_LINEARIZE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "congen/discourse.hpp"
#include "congen/knowledge.hpp"
#include "congen/lexicon.hpp"

namespace congen {

enum class Taxis { Hypotactic, Paratactic, Cohesive };

std::string to_string(Taxis t);

enum class SegmentRole { Conceded, Asserted, Evidence, Cause };

std::string to_string(SegmentRole r);

struct Segment {
  PropRef content;
  SegmentRole role = SegmentRole::Asserted;
  ClauseVariantKind variant = ClauseVariantKind::DeclarativeMain;
};

// Causal tail rendered as ", because X" / ", weil X".
struct CausalAttachment {
  PropRef content;
};

struct SentencePlan {
  std::vector<Segment> segments;  // 1 or 2
  Taxis taxis = Taxis::Hypotactic;
  std::set<MarkerGroup> marker_constraint;  // empty: no concessive link here
  std::optional<CausalAttachment> causal_link;
  bool conjunctive_slot = false;  // add an emphatic adjunct inside the nucleus
  std::optional<int> theme_override;  // index of a segment moved to theme
  bool exclamatory = false;
};

struct StyleParams {
  Formality formality = Formality::Neutral;
  bool emphasis = false;
  bool intensify = false;
  SpeechRegister speech_register = SpeechRegister::Written;
  int complexity_threshold = 1;  // >= 1; propositions per segment that count
                                 // as complex
};

// Number of proposition leaves under the node.
int complexity(const NodePtr& node);

// Deterministic: same tree and style, same plans. Throws PipelineError
// (stage "linearize") on trees outside the supported shapes.
std::vector<SentencePlan> linearize(const DiscourseTree& tree,
                                    const StyleParams& style);

// Stable one-line dump per plan, used by --emit-plans and tests.
std::string plans_to_text(const std::vector<SentencePlan>& plans);

}  // namespace congen

#endif  // CONGEN_LINEARIZE_HPP
