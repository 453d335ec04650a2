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

// discourse.hpp : mononuclear rhetorical trees for concessive text.
//
// Trees are tiny: a concessive root (presentational CONCESSION or
// subject-matter EXT-CONCESSION) whose nucleus side may carry one nested
// argumentative relation (EVIDENCE / MOTIVATION / CAUSE). Leaves reference
// situation propositions under a polarity.

#ifndef CONGEN_DISCOURSE_HPP
#define CONGEN_DISCOURSE_HPP

#include <memory>
#include <string>

#include "congen/knowledge.hpp"
#include "congen/types.hpp"

namespace congen {

enum class RelationLabel { RstConcession, ExtConcession, Evidence, Motivation, Cause };

std::string to_string(RelationLabel label);
bool is_concessive(RelationLabel label);

struct DiscourseNode;
using NodePtr = std::shared_ptr<const DiscourseNode>;

// Immutable: leaf (content set) or relation (label + nucleus + satellite).
struct DiscourseNode {
  bool is_leaf = true;
  PropRef content;              // leaf only
  RelationLabel label = RelationLabel::RstConcession;  // relation only
  NodePtr nucleus;
  NodePtr satellite;

  static NodePtr leaf(PropRef content);
  static NodePtr relation(RelationLabel label, NodePtr nucleus, NodePtr satellite);
};

struct DiscourseTree {
  NodePtr root;
  ConcessionClass cls = ConcessionClass::ConcedeI;
  ConcessionKind kind = ConcessionKind::ViolatedImplication;
};

// Builds the tree for a classified goal configuration. Throws PipelineError
// (stage "build-tree") if the goals and situation fall apart on the way.
DiscourseTree build_tree(const GoalConfig& goals,
                         const ConcessionSituation& situation);

// One failed semantic precondition on a relation node.
struct ConstraintViolation {
  std::string relation;
  std::string message;
};

struct ConstraintReport {
  std::vector<ConstraintViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_text() const;
};

// Checks every concessive node: the satellite side must carry a default rule
// whose consequent the nucleus side contradicts. Pure report, never throws.
ConstraintReport check_relation_constraints(const DiscourseTree& tree,
                                            const ConcessionSituation& situation);

// Bracketed notation, e.g. "(CONCESSION (EVIDENCE NOT-C B) A)".
std::string tree_to_notation(const DiscourseTree& tree);
std::string tree_to_notation(const NodePtr& node);

}  // namespace congen

#endif  // CONGEN_DISCOURSE_HPP
