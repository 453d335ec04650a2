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

#include "congen/realize.hpp"

#include <algorithm>

#include "congen/errors.hpp"
#include "congen/scenario.hpp"
#include "congen/text.hpp"

namespace congen {

namespace {

const ClauseFormVariant& resolve(const ConcessionSituation& situation,
                                 const PropRef& ref, Language lang,
                                 ClauseVariantKind kind) {
  const Proposition* p = situation.find(ref.id);
  if (!p) {
    throw MissingClauseForm("proposition '" + ref.id + "' not in situation");
  }
  const ClauseFormVariant* form = p->find_form(lang, kind);
  if (!form) {
    throw MissingClauseForm("proposition '" + ref.id + "' has no " +
                            to_string(kind) + " form for " + to_string(lang));
  }
  return *form;
}

// Main-clause surface when something else occupies the forefield. Scenario
// authors can spell the inverted form out; the token swap only covers
// single-constituent subjects.
std::string inverted_main(const ConcessionSituation& situation,
                          const PropRef& ref, Language lang) {
  const ClauseFormVariant& form =
      resolve(situation, ref, lang, ClauseVariantKind::DeclarativeMain);
  if (lang != Language::De) return form.text;
  if (form.inverted_text) return *form.inverted_text;
  return text::invert_verb_second(form.text);
}

// Style-derived feature query. Structural requirements (the substitutive
// particle feature) are passed separately because relaxation never drops
// them.
struct Query {
  FeatureSet required;
  FeatureSet forbidden;
};

Query style_query(const StyleParams& style) {
  Query q;
  q.forbidden = {Feature::Dialogic, Feature::Archaic, Feature::Conditional};
  if (style.formality == Formality::Formal) {
    q.required.insert(Feature::Formal);
  } else {
    q.forbidden.insert(Feature::Formal);
    q.forbidden.insert(Feature::Legalistic);
  }
  if (style.intensify) {
    q.required.insert(Feature::Intensified);
  } else {
    q.forbidden.insert(Feature::Intensified);
  }
  if (style.speech_register == SpeechRegister::Spoken) {
    q.required.insert(Feature::Colloquial);
  } else {
    q.forbidden.insert(Feature::Colloquial);
  }
  return q;
}

// Progressive relaxation: style requirements go first, then everything but
// the hard register exclusions. Structural requirements stay throughout, so
// a group that simply lacks the needed marker kind still reports NoCandidate.
std::vector<const MarkerEntry*> select_relaxed(const Lexicon& lexicon,
                                               Language lang, MarkerGroup group,
                                               const FeatureSet& structural,
                                               const Query& q) {
  FeatureSet full_required = structural;
  full_required.insert(q.required.begin(), q.required.end());
  try {
    return select_candidates(lexicon, lang, group, full_required, q.forbidden);
  } catch (const NoCandidate&) {
  }
  try {
    return select_candidates(lexicon, lang, group, structural, q.forbidden);
  } catch (const NoCandidate&) {
  }
  FeatureSet minimal = {Feature::Dialogic, Feature::Archaic,
                        Feature::Conditional};
  return select_candidates(lexicon, lang, group, structural, minimal);
}

std::string capitalized_chunk(const std::string& body, bool exclamatory) {
  return text::capitalize_first(body) + (exclamatory ? "!" : ".");
}

std::string causal_tail(const ConcessionSituation& situation,
                        const std::optional<CausalAttachment>& link,
                        Language lang) {
  if (!link) return "";
  const std::string& conj = lang == Language::De ? ", weil " : ", because ";
  return conj +
         resolve(situation, link->content, lang, ClauseVariantKind::Subordinate)
             .text;
}

bool wants(const SentencePlan& plan, MarkerGroup g) {
  return plan.marker_constraint.count(g) != 0;
}

}  // namespace

RealizationResources RealizationResources::bundled() {
  return {&default_lexicon(), default_networks()};
}

MarkerPicker::MarkerPicker(RankPolicy policy)
    : policy_(policy), rng_(policy.seed) {}

const MarkerEntry* MarkerPicker::pick(
    const std::vector<const MarkerEntry*>& candidates) {
  return rank_and_pick(candidates, policy_, rng_);
}

namespace {

// Substitution: conceded statement carries the first particle part, the
// elliptical counter-statement hangs off the second. English has no
// substitutive pair, so it falls back to plain coordination.
std::string realize_substitution(const SentencePlan& plan,
                                 const ConcessionSituation& situation,
                                 const RealizationResources& res, Language lang,
                                 const StyleParams& style, MarkerPicker& picker,
                                 RealizeTrace* trace) {
  const std::string conceded =
      resolve(situation, plan.segments[0].content, lang,
              plan.segments[0].variant)
          .text;
  const std::string asserted =
      resolve(situation, plan.segments[1].content, lang,
              plan.segments[1].variant)
          .text;
  Query q = style_query(style);
  std::string body;
  try {
    auto candidates = select_relaxed(*res.lexicon, lang,
                                     MarkerGroup::SplitParticle,
                                     {Feature::Substitutive}, q);
    const MarkerEntry* entry = picker.pick(candidates);
    std::string first = entry->first_part();
    std::string opening = text::insert_after_token(
        conceded, first, text::adjunct_slot_index(conceded, lang));
    body = opening + ", " + entry->second_part() + " " + asserted;
    if (trace) {
      trace->group = MarkerGroup::SplitParticle;
      trace->lemma = entry->lemma;
    }
  } catch (const NoCandidate&) {
    auto candidates = select_relaxed(
        *res.lexicon, lang, MarkerGroup::CoordinatingConjunction, {}, q);
    const MarkerEntry* entry = picker.pick(candidates);
    body = conceded + ", " + entry->lemma + " " + asserted;
    if (trace) {
      trace->group = MarkerGroup::CoordinatingConjunction;
      trace->lemma = entry->lemma;
    }
  }
  body += causal_tail(situation, plan.causal_link, lang);
  return capitalized_chunk(body, plan.exclamatory);
}

std::string realize_paratactic(const SentencePlan& plan,
                               const ConcessionSituation& situation,
                               const RealizationResources& res, Language lang,
                               const StyleParams& style, MarkerPicker& picker,
                               RealizeTrace* trace) {
  const std::string first = resolve(situation, plan.segments[0].content, lang,
                                    plan.segments[0].variant)
                                .text;
  const std::string second = resolve(situation, plan.segments[1].content, lang,
                                     plan.segments[1].variant)
                                 .text;
  Query q = style_query(style);
  auto candidates = select_relaxed(*res.lexicon, lang,
                                   MarkerGroup::CoordinatingConjunction, {}, q);
  const MarkerEntry* entry = picker.pick(candidates);
  if (trace) {
    trace->group = MarkerGroup::CoordinatingConjunction;
    trace->lemma = entry->lemma;
  }
  // The coordinator occupies position zero of the second clause: no verb
  // movement, but German still demands the comma.
  std::string body = first + ", " + entry->lemma + " " + second;
  body += causal_tail(situation, plan.causal_link, lang);
  return capitalized_chunk(body, plan.exclamatory);
}

// Inserts the emphatic adjunct ("nevertheless" / "dennoch") into a rendered
// main clause.
std::string apply_slot(const std::string& clause,
                       const RealizationResources& res, Language lang,
                       MarkerPicker& picker, RealizeTrace* trace) {
  auto candidates =
      select_candidates(*res.lexicon, lang, MarkerGroup::ConjunctiveAdjunct,
                        {Feature::Intensified}, {Feature::Dialogic});
  const MarkerEntry* entry = picker.pick(candidates);
  if (trace) trace->slot_lemma = entry->lemma;
  return text::insert_after_token(clause, entry->lemma,
                                  text::adjunct_slot_index(clause, lang));
}

std::string realize_hypotactic(const SentencePlan& plan,
                               const ConcessionSituation& situation,
                               const RealizationResources& res, Language lang,
                               const StyleParams& style, ConcessionKind kind,
                               MarkerPicker& picker, RealizeTrace* trace) {
  bool themed = plan.theme_override.has_value();
  const Segment& conceded_seg =
      plan.segments[themed ? 1 : 0];
  const Segment& main_seg = plan.segments[themed ? 0 : 1];
  const std::string conceded_sub =
      resolve(situation, conceded_seg.content, lang, ClauseVariantKind::Subordinate)
          .text;

  // Formal style demotes the conceded statement to a preposition phrase when
  // a nominal form exists. Never on the themed pattern: the trailing
  // afterthought needs a clause.
  const Proposition* conceded_prop = situation.find(conceded_seg.content.id);
  const ClauseFormVariant* nominal =
      conceded_prop ? conceded_prop->find_form(lang, ClauseVariantKind::Nominal)
                    : nullptr;
  if (!themed && wants(plan, MarkerGroup::Preposition) &&
      style.formality == Formality::Formal && nominal) {
    Query q = style_query(style);
    auto candidates =
        select_relaxed(*res.lexicon, lang, MarkerGroup::Preposition, {}, q);
    const MarkerEntry* entry = picker.pick(candidates);
    if (trace) {
      trace->group = MarkerGroup::Preposition;
      trace->lemma = entry->lemma;
      trace->preposition_used = true;
    }
    std::string main = inverted_main(situation, main_seg.content, lang);
    if (plan.conjunctive_slot) main = apply_slot(main, res, lang, picker, trace);
    // German runs preposition phrase and clause together (the phrase fills
    // the forefield); English separates them with a comma.
    std::string body = entry->lemma + " " + nominal->text +
                       (lang == Language::De ? " " : ", ") + main;
    body += causal_tail(situation, plan.causal_link, lang);
    return capitalized_chunk(body, plan.exclamatory);
  }

  NetworkInputs inputs;
  inputs.kind = kind;
  inputs.thematic_n = themed;
  inputs.conditional = false;
  inputs.intensify = style.intensify;
  inputs.formality = style.formality;
  inputs.emphasis = style.emphasis;
  NetworkSelection sel = traverse_network(*res.networks, lang, inputs);
  if (!sel.lemma) {
    throw InvalidFeatureCombination("network delegated a hypotactic link");
  }
  if (trace) {
    trace->group = MarkerGroup::SubordinatingConjunction;
    trace->lemma = sel.lemma;
    trace->prefix = sel.prefix;
  }

  if (themed) {
    // Outcome first, the conceded clause trails as its own exclamative tail:
    // German "..., und das, obwohl ...", English a fresh "And that ..."
    // sentence.
    std::string main =
        resolve(situation, main_seg.content, lang, main_seg.variant).text;
    if (plan.conjunctive_slot) main = apply_slot(main, res, lang, picker, trace);
    std::string body = main + causal_tail(situation, plan.causal_link, lang);
    if (lang == Language::De) {
      if (sel.prefix) body += ", " + *sel.prefix;
      body += ", " + *sel.lemma + " " + conceded_sub;
      return capitalized_chunk(body, plan.exclamatory);
    }
    std::string tail = "And that " + *sel.lemma + " " + conceded_sub;
    return text::capitalize_first(body) + ". " + tail +
           (plan.exclamatory ? "!" : ".");
  }

  std::string main = inverted_main(situation, main_seg.content, lang);
  if (plan.conjunctive_slot) main = apply_slot(main, res, lang, picker, trace);
  std::string body = *sel.lemma + " " + conceded_sub + ", " + main;
  body += causal_tail(situation, plan.causal_link, lang);
  return capitalized_chunk(body, plan.exclamatory);
}

std::string realize_cohesive(const SentencePlan& plan,
                             const ConcessionSituation& situation,
                             const RealizationResources& res, Language lang,
                             const StyleParams& style, MarkerPicker& picker,
                             RealizeTrace* trace) {
  const Segment& seg = plan.segments[0];

  // A lone causal segment renders as its own "Because ..." sentence.
  if (seg.role == SegmentRole::Cause) {
    const std::string sub =
        resolve(situation, seg.content, lang, ClauseVariantKind::Subordinate)
            .text;
    std::string body = (lang == Language::De ? "weil " : "because ") + sub;
    return capitalized_chunk(body, plan.exclamatory);
  }

  std::string clause =
      resolve(situation, seg.content, lang, seg.variant).text;

  if (wants(plan, MarkerGroup::ConjunctiveAdjunct)) {
    Query q = style_query(style);
    const MarkerEntry* entry = nullptr;
    try {
      auto candidates = select_relaxed(*res.lexicon, lang,
                                       MarkerGroup::ConjunctiveAdjunct, {}, q);
      entry = picker.pick(candidates);
    } catch (const NoCandidate&) {
      if (!wants(plan, MarkerGroup::CoordinatingConjunction)) throw;
    }
    if (entry) {
      if (trace) {
        trace->group = MarkerGroup::ConjunctiveAdjunct;
        trace->lemma = entry->lemma;
      }
      std::string body;
      // Emphasis fronts the adjunct regardless of its default slot.
      if (entry->placement == Placement::ClauseInitial || style.emphasis) {
        // The adjunct takes the forefield, so German inverts.
        if (lang == Language::De) {
          body = entry->lemma + " " +
                 inverted_main(situation, seg.content, lang);
        } else {
          body = entry->lemma + ", " + clause;
        }
      } else if (lang == Language::En && entry->has(Feature::Colloquial)) {
        // "though" and its kin surface clause-finally.
        body = clause + ", " + entry->lemma;
      } else {
        body = text::insert_after_token(
            clause, entry->lemma, text::adjunct_slot_index(clause, lang));
      }
      body += causal_tail(situation, plan.causal_link, lang);
      return capitalized_chunk(body, plan.exclamatory);
    }
    // Fall through to a coordinator used cohesively ("But ...").
    auto candidates = select_relaxed(
        *res.lexicon, lang, MarkerGroup::CoordinatingConjunction, {}, q);
    const MarkerEntry* coord = picker.pick(candidates);
    if (trace) {
      trace->group = MarkerGroup::CoordinatingConjunction;
      trace->lemma = coord->lemma;
    }
    std::string body = coord->lemma + " " + clause;
    body += causal_tail(situation, plan.causal_link, lang);
    return capitalized_chunk(body, plan.exclamatory);
  }

  std::string body = clause + causal_tail(situation, plan.causal_link, lang);
  return capitalized_chunk(body, plan.exclamatory);
}

}  // namespace

std::string realize_plan(const SentencePlan& plan,
                         const ConcessionSituation& situation,
                         const RealizationResources& resources,
                         Language language, const StyleParams& style,
                         ConcessionKind kind, MarkerPicker& picker,
                         RealizeTrace* trace) {
  if (!resources.lexicon || !resources.networks) {
    throw PipelineError("realize", "realization resources not set");
  }
  if (plan.segments.empty() || plan.segments.size() > 2) {
    throw PipelineError("realize", "plan must hold one or two segments");
  }

  if (plan.segments.size() == 2) {
    if (wants(plan, MarkerGroup::SplitParticle)) {
      return realize_substitution(plan, situation, resources, language, style,
                                  picker, trace);
    }
    if (plan.taxis == Taxis::Paratactic) {
      return realize_paratactic(plan, situation, resources, language, style,
                                picker, trace);
    }
    return realize_hypotactic(plan, situation, resources, language, style,
                              kind, picker, trace);
  }
  return realize_cohesive(plan, situation, resources, language, style, picker,
                          trace);
}

RealizationResult realize_scenario(const Scenario& scenario,
                                   const std::vector<Language>& languages,
                                   const StyleParams& style,
                                   const RealizationResources& resources,
                                   const RankPolicy& policy) {
  const ConcessionSituation& situation = scenario.situation;

  ValidationReport report = validate_situation(situation, languages);
  if (!report.ok()) {
    throw PipelineError("validate", report.to_text());
  }

  RealizationResult result;
  result.tree = build_tree(scenario.goals, situation);
  result.notation = tree_to_notation(result.tree);

  ConstraintReport constraints =
      check_relation_constraints(result.tree, situation);
  if (!constraints.ok()) {
    throw PipelineError("constraints", constraints.to_text());
  }

  result.plans = linearize(result.tree, style);

  for (Language lang : languages) {
    LanguageOutput out;
    out.language = lang;
    MarkerPicker picker(policy);
    for (const SentencePlan& plan : result.plans) {
      RealizeTrace trace;
      out.sentences.push_back(realize_plan(plan, situation, resources, lang,
                                           style, result.tree.kind, picker,
                                           &trace));
      out.traces.push_back(trace);
    }
    result.outputs.push_back(std::move(out));
  }
  return result;
}

}  // namespace congen
