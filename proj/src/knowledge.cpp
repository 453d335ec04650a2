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

#include "congen/knowledge.hpp"

#include <algorithm>

#include "congen/errors.hpp"

namespace congen {

std::string to_string(ClauseVariantKind k) {
  switch (k) {
    case ClauseVariantKind::DeclarativeMain: return "declarative_main";
    case ClauseVariantKind::Subordinate: return "subordinate";
    case ClauseVariantKind::Nominal: return "nominal";
    case ClauseVariantKind::Elliptical: return "elliptical";
  }
  return "?";
}

std::string to_string(ActKind k) {
  switch (k) {
    case ActKind::Inform: return "INFORM";
    case ActKind::Convince: return "CONVINCE";
    case ActKind::Activate: return "ACTIVATE";
  }
  return "?";
}

std::string to_string(ConcessionClass c) {
  switch (c) {
    case ConcessionClass::ConcedeI: return "Concede-I";
    case ConcessionClass::ConcedeII: return "Concede-II";
    case ConcessionClass::ConcedeIII: return "Concede-III";
  }
  return "?";
}

std::string to_string(ConcessionKind k) {
  return k == ConcessionKind::Substitution ? "substitution"
                                           : "violated-implication";
}

const ClauseFormVariant* Proposition::find_form(Language lang,
                                                ClauseVariantKind k) const {
  auto lit = clause_forms.find(lang);
  if (lit == clause_forms.end()) return nullptr;
  auto vit = lit->second.find(k);
  if (vit == lit->second.end()) return nullptr;
  return &vit->second;
}

const Proposition* ConcessionSituation::find(const std::string& id) const {
  for (const auto& p : propositions) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const DefaultRule* ConcessionSituation::expectation_rule() const {
  for (const auto& r : rules) {
    if (r.antecedent == "A") return &r;
  }
  return nullptr;
}

const DefaultRule* ConcessionSituation::context_rule() const {
  for (const auto& r : rules) {
    if (r.antecedent == "B") return &r;
  }
  return nullptr;
}

std::optional<PropRef> ConcessionSituation::outcome() const {
  if (const DefaultRule* ctx = context_rule()) {
    return PropRef{ctx->consequent, ctx->consequent_polarity};
  }
  if (const DefaultRule* exp = expectation_rule()) {
    return PropRef{exp->consequent, opposite(exp->consequent_polarity)};
  }
  return std::nullopt;
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "\n";
    out += v.code + ": " + v.message;
  }
  return out;
}

ValidationReport validate_situation(const ConcessionSituation& s,
                                    const std::vector<Language>& languages) {
  ValidationReport report;
  auto flag = [&](const std::string& code, const std::string& msg) {
    report.violations.push_back({code, msg});
  };

  const Proposition* a = s.find("A");
  const Proposition* b = s.find("B");
  const Proposition* c = s.find("C");

  if (!a) {
    flag("missing-a", "no proposition with role A");
  } else if (!a->verbalized) {
    flag("a-not-verbalized", "the conceded statement A must be verbalized");
  }
  if (!c) flag("missing-c", "no proposition with role C (shared expectation)");

  // Duplicate ids break role resolution.
  for (size_t i = 0; i < s.propositions.size(); ++i) {
    for (size_t j = i + 1; j < s.propositions.size(); ++j) {
      if (s.propositions[i].id == s.propositions[j].id) {
        flag("duplicate-id", "proposition id '" + s.propositions[i].id +
                                 "' declared twice");
      }
    }
  }

  const DefaultRule* exp = s.expectation_rule();
  const DefaultRule* ctx = s.context_rule();

  if (!exp) {
    flag("missing-expectation-rule", "no default rule with antecedent A");
  } else {
    if (exp->strength != RuleStrength::Default) {
      flag("expectation-strength", "rule A -> C must have default strength");
    }
    if (!s.find(exp->consequent)) {
      flag("dangling-consequent", "rule A -> " + exp->consequent +
                                      " names an undeclared proposition");
    }
  }
  if (b && !ctx) {
    flag("missing-context-rule",
         "B is declared but carries no rule B -> Not-C");
  }
  if (!b && ctx) {
    flag("spurious-context-rule",
         "a context rule exists but no proposition has role B");
  }
  if (ctx) {
    if (ctx->strength != RuleStrength::ContextSpecific) {
      flag("context-strength", "rule B -> Not-C must be context-specific");
    }
    if (!s.find(ctx->consequent)) {
      flag("dangling-consequent", "rule B -> " + ctx->consequent +
                                      " names an undeclared proposition");
    }
  }
  for (const auto& r : s.rules) {
    if (r.antecedent != "A" && r.antecedent != "B") {
      flag("stray-rule", "rule with antecedent '" + r.antecedent +
                             "' fits no role in the A/B/C scheme");
    }
  }

  // Common ground: both rules must argue about the same consequent, with
  // opposite polarity. Two rules about different consequents state two
  // unrelated facts and license no concession.
  if (exp && ctx) {
    if (exp->consequent != ctx->consequent) {
      flag("no-common-ground",
           "rules conclude about different propositions (" + exp->consequent +
               " vs " + ctx->consequent + "); no shared expectation to violate");
    } else if (exp->consequent_polarity == ctx->consequent_polarity) {
      flag("no-common-ground",
           "both rules conclude " + to_notation(PropRef{exp->consequent,
                                                        exp->consequent_polarity}) +
               "; nothing is contradicted");
    }
  }
  if (exp && exp->consequent != "C" && s.find("C")) {
    flag("expectation-off-c",
         "rule from A concludes about " + exp->consequent + ", not C");
  }

  // Every verbalized proposition needs at least the main declarative surface
  // in every requested language.
  for (const auto& p : s.propositions) {
    if (!p.verbalized) continue;
    for (Language lang : languages) {
      if (!p.find_form(lang, ClauseVariantKind::DeclarativeMain)) {
        flag("missing-clause-form", "proposition " + p.id + " (" +
                                        to_string(lang) +
                                        "): no declarative_main form");
      }
    }
  }

  // Degenerate case: A alone, nothing verbalizable to hold against it.
  bool b_verbal = b && b->verbalized;
  bool c_verbal = c && c->verbalized;
  if (a && !b_verbal && !c_verbal) {
    flag("no-contrast",
         "neither B nor C is verbalized; no realizable concession exists");
  }

  return report;
}

ConcessionKind concession_kind(const ConcessionSituation& s) {
  const Proposition* b = s.find("B");
  const Proposition* c = s.find("C");
  bool b_verbal = b && b->verbalized;
  bool c_verbal = c && c->verbalized;
  if (b_verbal && !c_verbal) return ConcessionKind::Substitution;
  return ConcessionKind::ViolatedImplication;
}

ContentRole content_role(const PropRef& ref, const ConcessionSituation& s) {
  if (ref.id == "A" && ref.polarity == Polarity::Positive) return ContentRole::A;
  if (ref.id == "B" && ref.polarity == Polarity::Positive) return ContentRole::B;
  std::optional<PropRef> out = s.outcome();
  if (out && ref == *out) return ContentRole::Outcome;
  return ContentRole::Other;
}

const std::vector<GoalPattern>& goal_patterns() {
  // One row per recognized goal shape. All patterns also require the
  // expectation rule to be presupposed (checked in match_goal_pattern).
  static const std::vector<GoalPattern> table = {
      {"convince-against-expectation", ActKind::Convince, ContentRole::Outcome,
       {ContentRole::B}, false,
       /*needs_presup_a=*/true, /*forbids_presup_a=*/false,
       /*needs_b_verbalized=*/true, /*forbids_b_verbalized=*/false,
       ConcessionClass::ConcedeI, TreeShape::ConvinceEvidence},
      {"activate-against-expectation", ActKind::Activate, ContentRole::Outcome,
       {ContentRole::B}, false,
       true, false, true, false,
       ConcessionClass::ConcedeI, TreeShape::ActivateMotivation},
      {"block-implicature", ActKind::Inform, ContentRole::A,
       {ContentRole::B, ContentRole::Outcome}, true,
       false, true, false, false,
       ConcessionClass::ConcedeII, TreeShape::Afterthought},
      {"surprising-fact", ActKind::Inform, ContentRole::Outcome,
       {ContentRole::A}, false,
       false, false, false, true,
       ConcessionClass::ConcedeIII, TreeShape::SurprisePlain},
      {"surprising-fact-explained", ActKind::Inform, ContentRole::Outcome,
       {ContentRole::A, ContentRole::B}, false,
       false, false, true, false,
       ConcessionClass::ConcedeIII, TreeShape::SurpriseCause},
  };
  return table;
}

namespace {

bool presup_has_prop(const GoalConfig& g, const std::string& id) {
  for (const auto& p : g.presuppositions) {
    if (p.kind == Presupposition::Kind::Proposition && p.prop.id == id &&
        p.prop.polarity == Polarity::Positive) {
      return true;
    }
  }
  return false;
}

bool presup_has_rule(const GoalConfig& g, const std::string& antecedent) {
  for (const auto& p : g.presuppositions) {
    if (p.kind == Presupposition::Kind::Rule && p.rule_antecedent == antecedent) {
      return true;
    }
  }
  return false;
}

// Multiset equality / subset over minor-act roles (INFORM acts only).
bool minors_match(const GoalPattern& pat, const std::vector<ContentRole>& roles) {
  if (pat.minors_subset_ok) {
    if (roles.empty()) return false;
    for (ContentRole r : roles) {
      if (std::find(pat.minor_roles.begin(), pat.minor_roles.end(), r) ==
          pat.minor_roles.end()) {
        return false;
      }
    }
    // No duplicates in the subset case.
    std::vector<ContentRole> sorted = roles;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  std::vector<ContentRole> want = pat.minor_roles;
  std::vector<ContentRole> got = roles;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  return want == got;
}

}  // namespace

const GoalPattern& match_goal_pattern(const GoalConfig& goals,
                                      const ConcessionSituation& situation) {
  if (!presup_has_rule(goals, "A")) {
    throw UnmappableGoalConfig(
        "goal configuration does not presuppose the expectation A -> C; "
        "without it no expectation is violated");
  }

  // Prompting the hearer only makes sense for an action still open.
  if (goals.main_act.kind == ActKind::Activate) {
    const Proposition* target = situation.find(goals.main_act.content.id);
    if (!target || !target->unrealized_action) {
      throw UnmappableGoalConfig("ACTIVATE targets " +
                                 to_notation(goals.main_act.content) +
                                 ", which is not an unrealized action");
    }
  }

  ContentRole main_role = content_role(goals.main_act.content, situation);
  std::vector<ContentRole> minor_roles;
  for (const auto& act : goals.minor_acts) {
    if (act.kind != ActKind::Inform) {
      throw UnmappableGoalConfig("minor act " + to_string(act.kind) +
                                 " is not a recognized configuration");
    }
    minor_roles.push_back(content_role(act.content, situation));
  }

  const Proposition* b = situation.find("B");
  bool b_verbal = b && b->verbalized;

  for (const auto& pat : goal_patterns()) {
    if (pat.main_kind != goals.main_act.kind) continue;
    if (pat.main_role != main_role) continue;
    if (!minors_match(pat, minor_roles)) continue;
    if (pat.needs_presup_a && !presup_has_prop(goals, "A")) continue;
    if (pat.forbids_presup_a && presup_has_prop(goals, "A")) continue;
    if (pat.needs_b_verbalized && !b_verbal) continue;
    if (pat.forbids_b_verbalized && b_verbal) continue;
    return pat;
  }

  throw UnmappableGoalConfig(
      "goal configuration (main " + to_string(goals.main_act.kind) + " " +
      to_notation(goals.main_act.content) + ", " +
      std::to_string(goals.minor_acts.size()) +
      " minor act(s)) matches no concession pattern");
}

ConcessionClass classify_concession(const GoalConfig& goals,
                                    const ConcessionSituation& situation) {
  return match_goal_pattern(goals, situation).result;
}

}  // namespace congen
