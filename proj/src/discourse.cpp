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

#include "congen/discourse.hpp"

#include <functional>

#include "congen/errors.hpp"

namespace congen {

std::string to_string(RelationLabel label) {
  switch (label) {
    case RelationLabel::RstConcession: return "CONCESSION";
    case RelationLabel::ExtConcession: return "EXT-CONCESSION";
    case RelationLabel::Evidence: return "EVIDENCE";
    case RelationLabel::Motivation: return "MOTIVATION";
    case RelationLabel::Cause: return "CAUSE";
  }
  return "?";
}

bool is_concessive(RelationLabel label) {
  return label == RelationLabel::RstConcession ||
         label == RelationLabel::ExtConcession;
}

NodePtr DiscourseNode::leaf(PropRef content) {
  auto n = std::make_shared<DiscourseNode>();
  n->is_leaf = true;
  n->content = std::move(content);
  return n;
}

NodePtr DiscourseNode::relation(RelationLabel label, NodePtr nucleus,
                                NodePtr satellite) {
  auto n = std::make_shared<DiscourseNode>();
  n->is_leaf = false;
  n->label = label;
  n->nucleus = std::move(nucleus);
  n->satellite = std::move(satellite);
  return n;
}

namespace {

void check_leaf_realizable(const PropRef& ref, const ConcessionSituation& s) {
  const Proposition* p = s.find(ref.id);
  if (!p) {
    throw PipelineError("build-tree",
                        "tree leaf references undeclared proposition " + ref.id);
  }
  if (!p->verbalized) {
    throw PipelineError("build-tree", "tree leaf references " + ref.id +
                                          ", which is not verbalized");
  }
}

NodePtr checked_leaf(PropRef ref, const ConcessionSituation& s) {
  check_leaf_realizable(ref, s);
  return DiscourseNode::leaf(std::move(ref));
}

}  // namespace

DiscourseTree build_tree(const GoalConfig& goals,
                         const ConcessionSituation& situation) {
  const GoalPattern& pattern = match_goal_pattern(goals, situation);
  ConcessionKind kind = concession_kind(situation);

  std::optional<PropRef> out = situation.outcome();
  if (!out) {
    throw PipelineError("build-tree", "situation has no derivable outcome");
  }
  PropRef a{"A", Polarity::Positive};
  PropRef b{"B", Polarity::Positive};

  DiscourseTree tree;
  tree.cls = pattern.result;
  tree.kind = kind;

  // Substitution verbalizes A and B and leaves the expectation implicit, so
  // the schema collapses to compensation-over-concession.
  if (kind == ConcessionKind::Substitution) {
    RelationLabel root = pattern.result == ConcessionClass::ConcedeIII
                             ? RelationLabel::ExtConcession
                             : RelationLabel::RstConcession;
    tree.root = DiscourseNode::relation(root, checked_leaf(b, situation),
                                        checked_leaf(a, situation));
    return tree;
  }

  switch (pattern.shape) {
    case TreeShape::ConvinceEvidence:
      tree.root = DiscourseNode::relation(
          RelationLabel::RstConcession,
          DiscourseNode::relation(RelationLabel::Evidence,
                                  checked_leaf(*out, situation),
                                  checked_leaf(b, situation)),
          checked_leaf(a, situation));
      break;
    case TreeShape::ActivateMotivation:
      tree.root = DiscourseNode::relation(
          RelationLabel::RstConcession,
          DiscourseNode::relation(RelationLabel::Motivation,
                                  checked_leaf(*out, situation),
                                  checked_leaf(b, situation)),
          checked_leaf(a, situation));
      break;
    case TreeShape::Afterthought: {
      // Satellite denies the implicature: with B as grounds when the goals
      // mention it, as a bare denial otherwise.
      bool with_b = false;
      for (const auto& act : goals.minor_acts) {
        if (content_role(act.content, situation) == ContentRole::B) with_b = true;
      }
      NodePtr satellite =
          with_b ? DiscourseNode::relation(RelationLabel::Evidence,
                                           checked_leaf(*out, situation),
                                           checked_leaf(b, situation))
                 : checked_leaf(*out, situation);
      tree.root = DiscourseNode::relation(RelationLabel::RstConcession,
                                          checked_leaf(a, situation),
                                          std::move(satellite));
      break;
    }
    case TreeShape::SurprisePlain:
      tree.root = DiscourseNode::relation(RelationLabel::ExtConcession,
                                          checked_leaf(*out, situation),
                                          checked_leaf(a, situation));
      break;
    case TreeShape::SurpriseCause:
      tree.root = DiscourseNode::relation(
          RelationLabel::ExtConcession,
          DiscourseNode::relation(RelationLabel::Cause,
                                  checked_leaf(*out, situation),
                                  checked_leaf(b, situation)),
          checked_leaf(a, situation));
      break;
  }
  return tree;
}

std::string ConstraintReport::to_text() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "\n";
    out += v.relation + ": " + v.message;
  }
  return out;
}

namespace {

// Collects the proposition references at the leaves under a node.
void collect_leaves(const NodePtr& node, std::vector<PropRef>& out) {
  if (!node) return;
  if (node->is_leaf) {
    out.push_back(node->content);
    return;
  }
  collect_leaves(node->nucleus, out);
  collect_leaves(node->satellite, out);
}

// True when some default rule rooted in `from_side` raises an expectation
// that `against_side` defeats: the other side either asserts the consequent
// with opposite polarity or carries the antecedent of an overriding rule.
bool side_contradicts(const std::vector<PropRef>& from_side,
                      const std::vector<PropRef>& against_side,
                      const ConcessionSituation& s) {
  for (const auto& ref : from_side) {
    for (const auto& r : s.rules) {
      if (r.antecedent != ref.id) continue;
      for (const auto& other : against_side) {
        if (other.id == r.consequent &&
            other.polarity == opposite(r.consequent_polarity)) {
          return true;  // outcome asserted against the expectation
        }
        for (const auto& r2 : s.rules) {
          if (r2.antecedent == other.id && r2.consequent == r.consequent &&
              r2.consequent_polarity == opposite(r.consequent_polarity)) {
            return true;  // overriding rule fires from this side
          }
        }
      }
    }
  }
  return false;
}

bool any_rule_from(const std::vector<PropRef>& leaves,
                   const ConcessionSituation& s) {
  for (const auto& ref : leaves) {
    for (const auto& r : s.rules) {
      if (r.antecedent == ref.id) return true;
    }
  }
  return false;
}

}  // namespace

ConstraintReport check_relation_constraints(const DiscourseTree& tree,
                                            const ConcessionSituation& s) {
  ConstraintReport report;
  std::function<void(const NodePtr&)> walk = [&](const NodePtr& node) {
    if (!node || node->is_leaf) return;
    if (is_concessive(node->label)) {
      // Semantic precondition: one side raises an expectation via a default
      // rule and the other side defeats it. The raising side is the satellite
      // in the counterargument schemas and the nucleus in the afterthought
      // schema, so both directions are admissible.
      std::vector<PropRef> sat_leaves, nuc_leaves;
      collect_leaves(node->satellite, sat_leaves);
      collect_leaves(node->nucleus, nuc_leaves);
      if (!side_contradicts(sat_leaves, nuc_leaves, s) &&
          !side_contradicts(nuc_leaves, sat_leaves, s)) {
        if (!any_rule_from(sat_leaves, s) && !any_rule_from(nuc_leaves, s)) {
          report.violations.push_back(
              {to_string(node->label),
               "neither side carries a default rule; nothing is conceded"});
        } else {
          report.violations.push_back(
              {to_string(node->label),
               "no default rule from either side is defeated by the other"});
        }
      }
    }
    walk(node->nucleus);
    walk(node->satellite);
  };
  walk(tree.root);
  return report;
}

std::string tree_to_notation(const NodePtr& node) {
  if (!node) return "()";
  if (node->is_leaf) return to_notation(node->content);
  return "(" + to_string(node->label) + " " + tree_to_notation(node->nucleus) +
         " " + tree_to_notation(node->satellite) + ")";
}

std::string tree_to_notation(const DiscourseTree& tree) {
  return tree_to_notation(tree.root);
}

}  // namespace congen
