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

#include "congen/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "congen/errors.hpp"
#include "congen/text.hpp"

namespace congen {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw ScenarioParseError(origin + ": " + msg);
}

[[noreturn]] void fail_ref(const std::string& origin, const std::string& msg) {
  throw ScenarioReferenceError(origin + ": " + msg);
}

// Strict key check: typos in structured objects should not pass silently.
void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& origin, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) {
      fail(origin, where + ": unknown key '" + key + "'");
    }
  }
}

std::string get_string(const json& obj, const std::string& key,
                       const std::string& origin, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    fail(origin, where + ": missing string field '" + key + "'");
  }
  return obj[key].get<std::string>();
}

Language parse_language_key(const std::string& s, const std::string& origin) {
  if (s == "en") return Language::En;
  if (s == "de") return Language::De;
  fail(origin, "unknown language key '" + s + "'");
}

Polarity parse_polarity(const std::string& s, const std::string& origin) {
  if (s == "positive") return Polarity::Positive;
  if (s == "negated") return Polarity::Negated;
  fail(origin, "unknown polarity '" + s + "'");
}

// "A" or "NOT-A".
PropRef parse_prop_ref(const std::string& s, const std::string& origin) {
  PropRef ref;
  if (s.rfind("NOT-", 0) == 0) {
    ref.id = s.substr(4);
    ref.polarity = Polarity::Negated;
  } else {
    ref.id = s;
    ref.polarity = Polarity::Positive;
  }
  if (ref.id.empty()) fail(origin, "empty proposition reference");
  return ref;
}

// Clause text is a bare clause: the realizer owns punctuation and the
// sentence-initial capital.
std::string parse_clause_text(const std::string& raw, const std::string& origin,
                              const std::string& where) {
  std::string s = text::trim(raw);
  if (s.empty()) fail(origin, where + ": empty clause text");
  char last = s.back();
  if (last == '.' || last == '!' || last == '?') {
    fail(origin, where + ": clause text must not carry terminal punctuation");
  }
  return s;
}

ClauseVariantKind parse_variant_kind(const std::string& s,
                                     const std::string& origin) {
  if (s == "declarative_main") return ClauseVariantKind::DeclarativeMain;
  if (s == "subordinate") return ClauseVariantKind::Subordinate;
  if (s == "nominal") return ClauseVariantKind::Nominal;
  if (s == "elliptical") return ClauseVariantKind::Elliptical;
  fail(origin, "unknown clause variant '" + s + "'");
}

Proposition parse_proposition(const json& obj, const std::string& origin) {
  check_keys(obj,
             {"id", "polarity", "verbalized", "unrealized_action",
              "clause_forms"},
             origin, "proposition");
  Proposition p;
  p.id = get_string(obj, "id", origin, "proposition");
  if (obj.contains("polarity")) {
    p.polarity = parse_polarity(obj["polarity"].get<std::string>(), origin);
  }
  if (obj.contains("verbalized")) p.verbalized = obj["verbalized"].get<bool>();
  if (obj.contains("unrealized_action")) {
    p.unrealized_action = obj["unrealized_action"].get<bool>();
  }
  if (!obj.contains("clause_forms")) return p;

  for (const auto& [lang_key, forms] : obj["clause_forms"].items()) {
    Language lang = parse_language_key(lang_key, origin);
    if (!forms.is_object()) {
      fail(origin, "clause_forms." + lang_key + " must be an object");
    }
    std::optional<std::string> inverted;
    for (const auto& [variant_key, value] : forms.items()) {
      const std::string where = p.id + ".clause_forms." + lang_key;
      if (variant_key == "declarative_inverted") {
        inverted = parse_clause_text(value.get<std::string>(), origin, where);
        continue;
      }
      ClauseVariantKind kind = parse_variant_kind(variant_key, origin);
      ClauseFormVariant form;
      form.kind = kind;
      form.text = parse_clause_text(value.get<std::string>(), origin, where);
      p.clause_forms[lang][kind] = std::move(form);
    }
    if (inverted) {
      auto it = p.clause_forms[lang].find(ClauseVariantKind::DeclarativeMain);
      if (it == p.clause_forms[lang].end()) {
        fail(origin, p.id + ": declarative_inverted without declarative_main");
      }
      it->second.inverted_text = inverted;
    }
  }
  return p;
}

DefaultRule parse_rule(const json& obj, const std::string& origin) {
  check_keys(obj, {"if", "then", "polarity", "strength"}, origin, "rule");
  DefaultRule rule;
  rule.antecedent = get_string(obj, "if", origin, "rule");
  std::string then = get_string(obj, "then", origin, "rule");
  PropRef consequent = parse_prop_ref(then, origin);
  rule.consequent = consequent.id;
  rule.consequent_polarity = consequent.polarity;
  if (obj.contains("polarity")) {
    // Explicit polarity wins over a NOT- prefix on "then".
    rule.consequent_polarity =
        parse_polarity(obj["polarity"].get<std::string>(), origin);
  }
  std::string strength = obj.contains("strength")
                             ? obj["strength"].get<std::string>()
                             : std::string("default");
  if (strength == "default") {
    rule.strength = RuleStrength::Default;
  } else if (strength == "context_specific") {
    rule.strength = RuleStrength::ContextSpecific;
  } else {
    fail(origin, "unknown rule strength '" + strength + "'");
  }
  return rule;
}

ActKind parse_act_kind(const std::string& s, const std::string& origin) {
  if (s == "inform") return ActKind::Inform;
  if (s == "convince") return ActKind::Convince;
  if (s == "activate") return ActKind::Activate;
  fail(origin, "unknown act kind '" + s + "'");
}

CommunicativeAct parse_act(const json& obj, const std::string& origin) {
  check_keys(obj, {"kind", "content"}, origin, "act");
  CommunicativeAct act;
  act.kind = parse_act_kind(get_string(obj, "kind", origin, "act"), origin);
  act.content =
      parse_prop_ref(get_string(obj, "content", origin, "act"), origin);
  return act;
}

GoalConfig parse_goals(const json& obj, const std::string& origin) {
  check_keys(obj, {"main_act", "minor_acts", "presuppositions"}, origin,
             "goals");
  GoalConfig goals;
  if (!obj.contains("main_act")) fail(origin, "goals: missing main_act");
  goals.main_act = parse_act(obj["main_act"], origin);
  if (obj.contains("minor_acts")) {
    for (const json& act : obj["minor_acts"]) {
      goals.minor_acts.push_back(parse_act(act, origin));
    }
  }
  if (obj.contains("presuppositions")) {
    for (const json& item : obj["presuppositions"]) {
      std::string s = item.get<std::string>();
      Presupposition presup;
      auto arrow = s.find("->");
      if (arrow != std::string::npos) {
        presup.kind = Presupposition::Kind::Rule;
        presup.rule_antecedent = text::trim(s.substr(0, arrow));
        if (presup.rule_antecedent.empty()) {
          fail(origin, "presupposition '" + s + "': empty antecedent");
        }
      } else {
        presup.kind = Presupposition::Kind::Proposition;
        presup.prop = parse_prop_ref(text::trim(s), origin);
      }
      goals.presuppositions.push_back(std::move(presup));
    }
  }
  return goals;
}

StyleParams parse_style(const json& obj, const std::string& origin) {
  check_keys(obj,
             {"formality", "emphasis", "intensify", "register",
              "complexity_threshold"},
             origin, "style");
  StyleParams style;
  if (obj.contains("formality")) {
    std::string s = obj["formality"].get<std::string>();
    if (s == "neutral") style.formality = Formality::Neutral;
    else if (s == "formal") style.formality = Formality::Formal;
    else if (s == "informal") style.formality = Formality::Informal;
    else fail(origin, "unknown formality '" + s + "'");
  }
  if (obj.contains("emphasis")) style.emphasis = obj["emphasis"].get<bool>();
  if (obj.contains("intensify")) style.intensify = obj["intensify"].get<bool>();
  if (obj.contains("register")) {
    std::string s = obj["register"].get<std::string>();
    if (s == "written") style.speech_register = SpeechRegister::Written;
    else if (s == "spoken") style.speech_register = SpeechRegister::Spoken;
    else fail(origin, "unknown register '" + s + "'");
  }
  if (obj.contains("complexity_threshold")) {
    style.complexity_threshold = obj["complexity_threshold"].get<int>();
    if (style.complexity_threshold < 1) {
      fail(origin, "complexity_threshold must be >= 1");
    }
  }
  return style;
}

// Every id mentioned by rules, acts, and presuppositions must be declared.
void check_references(const Scenario& scenario, const std::string& origin) {
  const ConcessionSituation& s = scenario.situation;
  auto require_prop = [&](const std::string& id, const std::string& where) {
    if (!s.find(id)) {
      fail_ref(origin, where + " references undeclared proposition '" + id + "'");
    }
  };
  for (const DefaultRule& rule : s.rules) {
    require_prop(rule.antecedent, "rule");
    require_prop(rule.consequent, "rule");
  }
  require_prop(scenario.goals.main_act.content.id, "main act");
  for (const CommunicativeAct& act : scenario.goals.minor_acts) {
    require_prop(act.content.id, "minor act");
  }
  for (const Presupposition& presup : scenario.goals.presuppositions) {
    if (presup.kind == Presupposition::Kind::Proposition) {
      require_prop(presup.prop.id, "presupposition");
    } else {
      require_prop(presup.rule_antecedent, "presupposition");
      bool found = false;
      for (const DefaultRule& rule : s.rules) {
        if (rule.antecedent == presup.rule_antecedent) found = true;
      }
      if (!found) {
        fail_ref(origin, "presupposition references no declared rule with antecedent '" +
                             presup.rule_antecedent + "'");
      }
    }
  }
}

}  // namespace

Scenario parse_scenario(const std::string& json_text,
                        const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(origin, std::string("invalid JSON: ") + e.what());
  }

  Scenario scenario;
  try {
    if (!doc.is_object()) fail(origin, "top level must be an object");
    check_keys(doc, {"label", "meta", "propositions", "rules", "goals", "style"},
               origin, "scenario");
    if (doc.contains("label")) scenario.label = doc["label"].get<std::string>();
    if (doc.contains("meta")) {
      for (const auto& [key, value] : doc["meta"].items()) {
        scenario.metadata[key] = value.get<std::string>();
      }
    }
    if (!doc.contains("propositions") || !doc["propositions"].is_array()) {
      fail(origin, "missing propositions array");
    }
    for (const json& p : doc["propositions"]) {
      scenario.situation.propositions.push_back(parse_proposition(p, origin));
    }
    if (doc.contains("rules")) {
      for (const json& r : doc["rules"]) {
        scenario.situation.rules.push_back(parse_rule(r, origin));
      }
    }
    if (!doc.contains("goals")) fail(origin, "missing goals object");
    scenario.goals = parse_goals(doc["goals"], origin);
    if (doc.contains("style")) scenario.style = parse_style(doc["style"], origin);
  } catch (const json::exception& e) {
    fail(origin, std::string("malformed scenario: ") + e.what());
  }

  check_references(scenario, origin);
  return scenario;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path);
}

}  // namespace congen
