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

// knowledge.hpp : concession situations and their pragmatics.
//
// A concession situation holds three propositions in fixed roles:
//   A  the conceded statement (always present, always verbalized)
//   B  the counter-statement (optional)
//   C  the shared expectation both rules argue about
// plus two defeasible rules: A -> C (default world knowledge) and
// B -> Not-C (context-specific, and stronger). What the speaker wants to do
// with that material (convince, prompt to action, plain inform) is a goal
// configuration; classification maps it onto one of three pragmatic classes.

#ifndef CONGEN_KNOWLEDGE_HPP
#define CONGEN_KNOWLEDGE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congen/types.hpp"

namespace congen {

enum class ClauseVariantKind { DeclarativeMain, Subordinate, Nominal, Elliptical };

std::string to_string(ClauseVariantKind k);

// One pre-rendered surface variant of a proposition. text carries no terminal
// punctuation and no leading capital; the realizer adds both.
struct ClauseFormVariant {
  ClauseVariantKind kind = ClauseVariantKind::DeclarativeMain;
  std::string text;
  // German only: explicit verb-second surface for use after a fronted
  // constituent. When absent the realizer derives one mechanically.
  std::optional<std::string> inverted_text;
};

struct Proposition {
  std::string id;                    // symbolic role label, normally A/B/C
  Polarity polarity = Polarity::Positive;  // inherent polarity of the content
  bool verbalized = true;
  bool unrealized_action = false;    // true when the content is an action
                                     // that has not (yet) happened
  // language -> variant kind -> surface form
  std::map<Language, std::map<ClauseVariantKind, ClauseFormVariant>> clause_forms;

  const ClauseFormVariant* find_form(Language lang, ClauseVariantKind k) const;
};

enum class RuleStrength { Default, ContextSpecific };

// Defeasible implication antecedent -> (consequent, consequent_polarity).
struct DefaultRule {
  std::string antecedent;
  std::string consequent;
  Polarity consequent_polarity = Polarity::Positive;
  RuleStrength strength = RuleStrength::Default;
};

struct ConcessionSituation {
  std::vector<Proposition> propositions;
  std::vector<DefaultRule> rules;

  const Proposition* find(const std::string& id) const;
  // Rule with antecedent A (the violated expectation), if present.
  const DefaultRule* expectation_rule() const;
  // Rule with antecedent B (the context-specific override), if present.
  const DefaultRule* context_rule() const;
  // The state of affairs that actually holds: context-rule consequent when a
  // context rule exists, otherwise the negation of the expectation.
  std::optional<PropRef> outcome() const;
};

enum class ActKind { Inform, Convince, Activate };

std::string to_string(ActKind k);

struct CommunicativeAct {
  ActKind kind = ActKind::Inform;
  PropRef content;
};

// Presupposed material: either a proposition (under a polarity) or one of the
// situation's rules, referenced by its antecedent.
struct Presupposition {
  enum class Kind { Proposition, Rule };
  Kind kind = Kind::Proposition;
  PropRef prop;            // valid when kind == Proposition
  std::string rule_antecedent;  // valid when kind == Rule
};

struct GoalConfig {
  CommunicativeAct main_act;
  std::vector<CommunicativeAct> minor_acts;
  std::vector<Presupposition> presuppositions;
};

enum class ConcessionClass { ConcedeI, ConcedeII, ConcedeIII };
enum class ConcessionKind { ViolatedImplication, Substitution };

std::string to_string(ConcessionClass c);
std::string to_string(ConcessionKind k);

// One problem found by validation.
struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_text() const;
};

// Checks structural well-formedness. Never throws: every defect is reported.
// languages lists the realization languages whose clause forms must be there.
ValidationReport validate_situation(
    const ConcessionSituation& situation,
    const std::vector<Language>& languages = {Language::En, Language::De});

// Maps a goal configuration onto a pragmatic class. Throws
// UnmappableGoalConfig when the goals fit no known pattern.
ConcessionClass classify_concession(const GoalConfig& goals,
                                    const ConcessionSituation& situation);

// Substitution iff B is verbalized and C is not; ViolatedImplication else.
ConcessionKind concession_kind(const ConcessionSituation& situation);

// --- goal-pattern table ----------------------------------------------------
// The recognized configurations live in a declarative table so classification
// and tree building read from the same place. Content roles abstract over
// concrete ids.

enum class ContentRole { A, B, Outcome, Other };

// Resolves an act's content to its role within the situation.
ContentRole content_role(const PropRef& ref, const ConcessionSituation& s);

enum class TreeShape {
  ConvinceEvidence,   // (CONCESSION (EVIDENCE outcome B) A)
  ActivateMotivation, // (CONCESSION (MOTIVATION outcome B) A)
  Afterthought,       // (CONCESSION A (EVIDENCE outcome B)) / bare outcome
  SurprisePlain,      // (EXT-CONCESSION outcome A)
  SurpriseCause       // (EXT-CONCESSION (CAUSE outcome B) A)
};

struct GoalPattern {
  const char* name;
  ActKind main_kind;
  ContentRole main_role;
  // Multiset of required minor INFORM roles; Afterthought accepts any
  // non-empty subset of {B, Outcome}.
  std::vector<ContentRole> minor_roles;
  bool minors_subset_ok;
  bool needs_presup_a;       // presuppositions must contain A
  bool forbids_presup_a;     // presuppositions must NOT contain A
  bool needs_b_verbalized;   // situation must have a verbalized B
  bool forbids_b_verbalized; // situation must not have a verbalized B
  ConcessionClass result;
  TreeShape shape;
};

const std::vector<GoalPattern>& goal_patterns();

// Returns the matching pattern or throws UnmappableGoalConfig. All patterns
// additionally require the expectation rule A -> C to be presupposed.
const GoalPattern& match_goal_pattern(const GoalConfig& goals,
                                      const ConcessionSituation& situation);

}  // namespace congen

#endif  // CONGEN_KNOWLEDGE_HPP
