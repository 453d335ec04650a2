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

// Routing rules, by pragmatic class:
//
// Concede-I   counterargument first. Simple counterargument: one hypotactic
//             sentence (subordinator only; a preposition would demote the
//             conceded statement below clause rank, which argumentative use
//             forbids). A motivating nucleus (action prompt) coordinates
//             instead and exclaims. Complex counterargument: its own
//             sentence, the own argument follows cohesively, grounds last.
// Concede-II  main statement first, the implicature denial follows as a
//             cohesive afterthought; a simple denial may stay inside one
//             paratactic sentence.
// Concede-III surprising fact: conceded circumstance fronted hypotactically
//             (subordinator, or preposition over a nominal in formal style);
//             emphasis flips the nucleus into the theme and exclaims.

#include "congen/linearize.hpp"

#include <sstream>

#include "congen/errors.hpp"

namespace congen {

std::string to_string(Taxis t) {
  switch (t) {
    case Taxis::Hypotactic: return "hypotactic";
    case Taxis::Paratactic: return "paratactic";
    case Taxis::Cohesive: return "cohesive";
  }
  return "?";
}

std::string to_string(SegmentRole r) {
  switch (r) {
    case SegmentRole::Conceded: return "conceded";
    case SegmentRole::Asserted: return "asserted";
    case SegmentRole::Evidence: return "evidence";
    case SegmentRole::Cause: return "cause";
  }
  return "?";
}

int complexity(const NodePtr& node) {
  if (!node) return 0;
  if (node->is_leaf) return 1;
  return complexity(node->nucleus) + complexity(node->satellite);
}

namespace {

[[noreturn]] void bad_tree(const std::string& msg) {
  throw PipelineError("linearize", msg);
}

// Nucleus side decomposed: the asserted outcome plus optional grounds B.
struct NucleusSide {
  PropRef out;
  std::optional<PropRef> grounds;
  std::optional<RelationLabel> label;
};

NucleusSide decompose_nucleus(const NodePtr& nucleus) {
  NucleusSide side;
  if (!nucleus) bad_tree("concessive node has no nucleus");
  if (nucleus->is_leaf) {
    side.out = nucleus->content;
    return side;
  }
  if (!nucleus->nucleus || !nucleus->nucleus->is_leaf || !nucleus->satellite ||
      !nucleus->satellite->is_leaf) {
    bad_tree("nested nucleus relation must pair two leaves");
  }
  side.out = nucleus->nucleus->content;
  side.grounds = nucleus->satellite->content;
  side.label = nucleus->label;
  return side;
}

Segment seg(PropRef ref, SegmentRole role, ClauseVariantKind variant) {
  return Segment{std::move(ref), role, variant};
}

// A complex satellite becomes its own opening sentence: lead leaf as the
// clause, a second leaf attached causally when the relation is argumentative.
SentencePlan satellite_plan(const NodePtr& satellite) {
  SentencePlan plan;
  plan.taxis = Taxis::Cohesive;
  if (satellite->is_leaf) {
    plan.segments = {seg(satellite->content, SegmentRole::Conceded,
                         ClauseVariantKind::DeclarativeMain)};
    return plan;
  }
  if (!satellite->nucleus || !satellite->nucleus->is_leaf || !satellite->satellite ||
      !satellite->satellite->is_leaf) {
    bad_tree("complex satellite nests deeper than one relation");
  }
  plan.segments = {seg(satellite->nucleus->content, SegmentRole::Conceded,
                       ClauseVariantKind::DeclarativeMain)};
  plan.causal_link = CausalAttachment{satellite->satellite->content};
  return plan;
}

}  // namespace

std::vector<SentencePlan> linearize(const DiscourseTree& tree,
                                    const StyleParams& style) {
  if (style.complexity_threshold < 1) {
    bad_tree("complexity_threshold must be >= 1");
  }
  const NodePtr& root = tree.root;
  if (!root || root->is_leaf || !is_concessive(root->label)) {
    bad_tree("root must be a concessive relation");
  }

  std::vector<SentencePlan> plans;

  // Substitution: both statements side by side, linked by a particle pair.
  if (tree.kind == ConcessionKind::Substitution) {
    if (!root->nucleus->is_leaf || !root->satellite->is_leaf) {
      bad_tree("substitution trees pair two leaves");
    }
    SentencePlan plan;
    plan.taxis = Taxis::Paratactic;
    plan.marker_constraint = {MarkerGroup::SplitParticle};
    plan.segments = {seg(root->satellite->content, SegmentRole::Conceded,
                         ClauseVariantKind::DeclarativeMain),
                     seg(root->nucleus->content, SegmentRole::Asserted,
                         ClauseVariantKind::Elliptical)};
    plans.push_back(std::move(plan));
    return plans;
  }

  int sat_cx = complexity(root->satellite);
  bool sat_complex = sat_cx >= style.complexity_threshold + 1;

  switch (tree.cls) {
    case ConcessionClass::ConcedeI: {
      NucleusSide nuc = decompose_nucleus(root->nucleus);
      if (!sat_complex) {
        if (!root->satellite->is_leaf) bad_tree("simple satellite must be a leaf");
        PropRef a = root->satellite->content;
        if (nuc.label == RelationLabel::Motivation) {
          // Action prompt: subordinating the concession would bury the
          // appeal, so coordinate and exclaim.
          SentencePlan plan;
          plan.taxis = Taxis::Paratactic;
          plan.marker_constraint = {MarkerGroup::CoordinatingConjunction};
          plan.segments = {seg(a, SegmentRole::Conceded,
                               ClauseVariantKind::DeclarativeMain),
                           seg(nuc.out, SegmentRole::Asserted,
                               ClauseVariantKind::DeclarativeMain)};
          if (nuc.grounds) plan.causal_link = CausalAttachment{*nuc.grounds};
          plan.exclamatory = true;
          plans.push_back(std::move(plan));
        } else {
          SentencePlan plan;
          plan.taxis = Taxis::Hypotactic;
          plan.marker_constraint = {MarkerGroup::SubordinatingConjunction};
          plan.segments = {seg(a, SegmentRole::Conceded,
                               ClauseVariantKind::Subordinate),
                           seg(nuc.out, SegmentRole::Asserted,
                               ClauseVariantKind::DeclarativeMain)};
          if (nuc.grounds) plan.causal_link = CausalAttachment{*nuc.grounds};
          plan.conjunctive_slot = style.emphasis;
          plans.push_back(std::move(plan));
        }
      } else {
        plans.push_back(satellite_plan(root->satellite));
        SentencePlan own;
        own.taxis = Taxis::Cohesive;
        own.marker_constraint = {MarkerGroup::ConjunctiveAdjunct,
                                 MarkerGroup::CoordinatingConjunction};
        own.segments = {seg(nuc.out, SegmentRole::Asserted,
                            ClauseVariantKind::DeclarativeMain)};
        plans.push_back(std::move(own));
        if (nuc.grounds) {
          // The grounds keep their own causal sentence.
          SentencePlan because;
          because.taxis = Taxis::Cohesive;
          because.segments = {seg(*nuc.grounds, SegmentRole::Cause,
                                  ClauseVariantKind::DeclarativeMain)};
          plans.push_back(std::move(because));
        }
      }
      break;
    }

    case ConcessionClass::ConcedeII: {
      // Nucleus carries the main statement, satellite the denial.
      if (!root->nucleus->is_leaf) bad_tree("afterthought nucleus must be a leaf");
      PropRef main_stmt = root->nucleus->content;
      NucleusSide denial = decompose_nucleus(root->satellite);
      bool paratactic = sat_cx < style.complexity_threshold + 1;
      if (paratactic) {
        SentencePlan plan;
        plan.taxis = Taxis::Paratactic;
        plan.marker_constraint = {MarkerGroup::CoordinatingConjunction};
        plan.segments = {seg(main_stmt, SegmentRole::Asserted,
                             ClauseVariantKind::DeclarativeMain),
                         seg(denial.out, SegmentRole::Conceded,
                             ClauseVariantKind::DeclarativeMain)};
        if (denial.grounds) plan.causal_link = CausalAttachment{*denial.grounds};
        plans.push_back(std::move(plan));
      } else {
        SentencePlan first;
        first.taxis = Taxis::Cohesive;
        first.segments = {seg(main_stmt, SegmentRole::Asserted,
                              ClauseVariantKind::DeclarativeMain)};
        plans.push_back(std::move(first));
        SentencePlan after;
        after.taxis = Taxis::Cohesive;
        after.marker_constraint = {MarkerGroup::ConjunctiveAdjunct};
        after.segments = {seg(denial.out, SegmentRole::Conceded,
                              ClauseVariantKind::DeclarativeMain)};
        if (denial.grounds) after.causal_link = CausalAttachment{*denial.grounds};
        plans.push_back(std::move(after));
      }
      break;
    }

    case ConcessionClass::ConcedeIII: {
      NucleusSide nuc = decompose_nucleus(root->nucleus);
      if (sat_complex) {
        plans.push_back(satellite_plan(root->satellite));
        SentencePlan rest;
        rest.taxis = Taxis::Cohesive;
        rest.marker_constraint = {MarkerGroup::ConjunctiveAdjunct};
        rest.segments = {seg(nuc.out, SegmentRole::Asserted,
                             ClauseVariantKind::DeclarativeMain)};
        plans.push_back(std::move(rest));
        if (nuc.grounds) {
          SentencePlan because;
          because.taxis = Taxis::Cohesive;
          because.segments = {seg(*nuc.grounds, SegmentRole::Cause,
                                  ClauseVariantKind::DeclarativeMain)};
          plans.push_back(std::move(because));
        }
        break;
      }
      if (!root->satellite->is_leaf) bad_tree("simple satellite must be a leaf");
      PropRef a = root->satellite->content;
      SentencePlan plan;
      plan.taxis = Taxis::Hypotactic;
      plan.marker_constraint = {MarkerGroup::SubordinatingConjunction,
                                MarkerGroup::Preposition};
      if (nuc.grounds) plan.causal_link = CausalAttachment{*nuc.grounds};
      if (style.emphasis) {
        // Nucleus takes the theme; the conceded clause trails as an
        // exclamative afterthought ("..., und das, obwohl ...!").
        plan.segments = {seg(nuc.out, SegmentRole::Asserted,
                             ClauseVariantKind::DeclarativeMain),
                         seg(a, SegmentRole::Conceded,
                             ClauseVariantKind::Subordinate)};
        plan.theme_override = 0;
        plan.exclamatory = true;
      } else {
        plan.segments = {seg(a, SegmentRole::Conceded,
                             ClauseVariantKind::Subordinate),
                         seg(nuc.out, SegmentRole::Asserted,
                             ClauseVariantKind::DeclarativeMain)};
        // A trailing explanation defuses the surprise mark.
        plan.exclamatory = style.intensify && !plan.causal_link;
      }
      plans.push_back(std::move(plan));
      break;
    }
  }

  return plans;
}

std::string plans_to_text(const std::vector<SentencePlan>& plans) {
  std::ostringstream out;
  for (size_t i = 0; i < plans.size(); ++i) {
    const SentencePlan& p = plans[i];
    out << "plan " << (i + 1) << ": taxis=" << to_string(p.taxis) << " segments=[";
    for (size_t j = 0; j < p.segments.size(); ++j) {
      if (j) out << ", ";
      out << to_notation(p.segments[j].content) << "/"
          << to_string(p.segments[j].variant) << "/"
          << to_string(p.segments[j].role);
    }
    out << "] markers={";
    bool first = true;
    for (MarkerGroup g : p.marker_constraint) {
      if (!first) out << ", ";
      first = false;
      out << to_string(g);
    }
    out << "} causal=" << (p.causal_link ? to_notation(p.causal_link->content) : "-")
        << " slot=" << (p.conjunctive_slot ? "yes" : "no") << " theme="
        << (p.theme_override ? std::to_string(*p.theme_override) : "-")
        << " excl=" << (p.exclamatory ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace congen
