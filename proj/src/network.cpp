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

// Interpreter for the network description syntax; see data/networks.net for
// the bundled topology and README.md for the grammar. Systems fire the first
// matching choice; goto queues one follow-up system, parallel queues two that
// both contribute to the final selection.

#include "congen/network.hpp"

#include <deque>
#include <memory>
#include <sstream>

#include "congen/default_data.hpp"
#include "congen/errors.hpp"
#include "congen/text.hpp"

namespace congen {

namespace {

enum class CondKind {
  Always,
  KindIs,        // kind == payload_kind
  BoolFlag,      // selected boolean input == expect
  FormalityIs,   // formality == payload_formality (or !=)
};

enum class BoolInput { ThematicN, Conditional, Intensify, Emphasis };

struct Cond {
  CondKind kind = CondKind::Always;
  ConcessionKind payload_kind = ConcessionKind::ViolatedImplication;
  BoolInput flag = BoolInput::ThematicN;
  bool expect = true;
  Formality payload_formality = Formality::Neutral;
  bool negate_formality = false;

  bool eval(const NetworkInputs& in) const {
    switch (kind) {
      case CondKind::Always:
        return true;
      case CondKind::KindIs:
        return in.kind == payload_kind;
      case CondKind::BoolFlag: {
        bool v = false;
        switch (flag) {
          case BoolInput::ThematicN: v = in.thematic_n; break;
          case BoolInput::Conditional: v = in.conditional; break;
          case BoolInput::Intensify: v = in.intensify; break;
          case BoolInput::Emphasis: v = in.emphasis; break;
        }
        return v == expect;
      }
      case CondKind::FormalityIs: {
        bool eq = in.formality == payload_formality;
        return negate_formality ? !eq : eq;
      }
    }
    return false;
  }
};

enum class ActionKind { Lemma, Prefix, None, Goto, Parallel, Delegate };

struct Action {
  ActionKind kind = ActionKind::None;
  std::string payload;   // lemma text, prefix text, or goto target
  std::string payload2;  // second parallel target
  MarkerGroup group = MarkerGroup::SplitParticle;
};

struct Choice {
  std::string feature;
  Cond cond;
  Action action;
};

struct System {
  std::string name;
  std::vector<Choice> choices;
};

struct Reject {
  Cond cond;
  std::string reason;
};

struct LanguageNet {
  std::string entry;
  std::vector<Reject> rejects;
  std::map<std::string, System> systems;
};

}  // namespace

struct NetworkSet {
  std::map<Language, LanguageNet> nets;
};

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw NetworkParseError("line " + std::to_string(line) + ": " + msg);
}

Cond parse_cond(const std::string& raw, int line) {
  std::string s = text::trim(raw);
  Cond c;
  if (s == "otherwise" || s == "always") {
    c.kind = CondKind::Always;
    return c;
  }
  bool neg = false;
  if (!s.empty() && s[0] == '!') {
    neg = true;
    s = s.substr(1);
  }
  if (s == "thematic_n" || s == "conditional" || s == "intensify" ||
      s == "emphasis") {
    c.kind = CondKind::BoolFlag;
    c.expect = !neg;
    if (s == "thematic_n") c.flag = BoolInput::ThematicN;
    if (s == "conditional") c.flag = BoolInput::Conditional;
    if (s == "intensify") c.flag = BoolInput::Intensify;
    if (s == "emphasis") c.flag = BoolInput::Emphasis;
    return c;
  }
  if (neg) parse_fail(line, "'!' only negates boolean inputs: " + raw);
  auto eat = [&](const std::string& prefix) -> std::optional<std::string> {
    if (s.rfind(prefix, 0) == 0) return s.substr(prefix.size());
    return std::nullopt;
  };
  if (auto v = eat("kind=")) {
    c.kind = CondKind::KindIs;
    if (*v == "substitution") {
      c.payload_kind = ConcessionKind::Substitution;
    } else if (*v == "violated_implication") {
      c.payload_kind = ConcessionKind::ViolatedImplication;
    } else {
      parse_fail(line, "unknown kind '" + *v + "'");
    }
    return c;
  }
  std::optional<std::string> v = eat("formality!=");
  bool negf = v.has_value();
  if (!v) v = eat("formality=");
  if (v) {
    c.kind = CondKind::FormalityIs;
    c.negate_formality = negf;
    if (*v == "neutral") c.payload_formality = Formality::Neutral;
    else if (*v == "formal") c.payload_formality = Formality::Formal;
    else if (*v == "informal") c.payload_formality = Formality::Informal;
    else parse_fail(line, "unknown formality '" + *v + "'");
    return c;
  }
  parse_fail(line, "cannot parse condition '" + raw + "'");
}

std::string parse_quoted(const std::string& s, int line) {
  auto b = s.find('"');
  auto e = s.rfind('"');
  if (b == std::string::npos || e == b) parse_fail(line, "expected quoted text");
  return s.substr(b + 1, e - b - 1);
}

MarkerGroup parse_group_name(const std::string& s, int line) {
  if (s == "conjunctive_adjunct") return MarkerGroup::ConjunctiveAdjunct;
  if (s == "coordinating_conjunction") return MarkerGroup::CoordinatingConjunction;
  if (s == "subordinating_conjunction") return MarkerGroup::SubordinatingConjunction;
  if (s == "preposition") return MarkerGroup::Preposition;
  if (s == "split_particle") return MarkerGroup::SplitParticle;
  parse_fail(line, "unknown marker group '" + s + "'");
}

Action parse_action(const std::string& raw, int line) {
  std::string s = text::trim(raw);
  Action a;
  if (s.rfind("lemma", 0) == 0) {
    a.kind = ActionKind::Lemma;
    a.payload = parse_quoted(s, line);
    return a;
  }
  if (s.rfind("prefix", 0) == 0) {
    a.kind = ActionKind::Prefix;
    a.payload = parse_quoted(s, line);
    return a;
  }
  if (s == "none") {
    a.kind = ActionKind::None;
    return a;
  }
  if (s.rfind("goto", 0) == 0) {
    a.kind = ActionKind::Goto;
    a.payload = text::trim(s.substr(4));
    if (a.payload.empty()) parse_fail(line, "goto needs a system name");
    return a;
  }
  if (s.rfind("parallel", 0) == 0) {
    a.kind = ActionKind::Parallel;
    std::vector<std::string> names = text::tokens(s.substr(8));
    if (names.size() != 2) parse_fail(line, "parallel needs two system names");
    a.payload = names[0];
    a.payload2 = names[1];
    return a;
  }
  if (s.rfind("delegate", 0) == 0) {
    a.kind = ActionKind::Delegate;
    a.group = parse_group_name(text::trim(s.substr(8)), line);
    return a;
  }
  parse_fail(line, "cannot parse action '" + raw + "'");
}

}  // namespace

std::shared_ptr<const NetworkSet> load_networks(std::istream& in) {
  auto set = std::make_shared<NetworkSet>();
  LanguageNet* current = nullptr;
  System* sys = nullptr;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = text::trim(line);
    if (s.empty() || s[0] == '#') continue;
    auto hash = s.find(" #");
    if (hash != std::string::npos) s = text::trim(s.substr(0, hash));

    if (s.rfind("language", 0) == 0) {
      std::string name = text::trim(s.substr(8));
      Language lang;
      if (name == "en") lang = Language::En;
      else if (name == "de") lang = Language::De;
      else parse_fail(lineno, "unknown language '" + name + "'");
      current = &set->nets[lang];
      sys = nullptr;
      continue;
    }
    if (!current) parse_fail(lineno, "directive before any 'language' block");

    if (s.rfind("entry", 0) == 0) {
      current->entry = text::trim(s.substr(5));
      continue;
    }
    if (s.rfind("reject", 0) == 0) {
      // reject if <cond> "<reason>"
      std::string rest = text::trim(s.substr(6));
      if (rest.rfind("if", 0) != 0) parse_fail(lineno, "reject needs 'if'");
      rest = text::trim(rest.substr(2));
      auto q = rest.find('"');
      if (q == std::string::npos) parse_fail(lineno, "reject needs a reason");
      Reject r;
      r.cond = parse_cond(rest.substr(0, q), lineno);
      r.reason = parse_quoted(rest.substr(q), lineno);
      current->rejects.push_back(std::move(r));
      continue;
    }
    if (s.rfind("system", 0) == 0) {
      std::string name = text::trim(s.substr(6));
      if (name.empty()) parse_fail(lineno, "system needs a name");
      sys = &current->systems[name];
      sys->name = name;
      continue;
    }
    if (s.rfind("choice", 0) == 0) {
      if (!sys) parse_fail(lineno, "choice outside a system");
      // choice <feature> if <cond> => <action>   |   choice <feature> otherwise => <action>
      std::string rest = text::trim(s.substr(6));
      auto arrow = rest.find("=>");
      if (arrow == std::string::npos) parse_fail(lineno, "choice needs '=>'");
      std::string head = text::trim(rest.substr(0, arrow));
      std::string action = text::trim(rest.substr(arrow + 2));
      Choice c;
      auto if_pos = head.find(" if ");
      if (if_pos != std::string::npos) {
        c.feature = text::trim(head.substr(0, if_pos));
        c.cond = parse_cond(head.substr(if_pos + 4), lineno);
      } else if (head.size() > 10 &&
                 head.compare(head.size() - 9, 9, "otherwise") == 0) {
        c.feature = text::trim(head.substr(0, head.size() - 9));
        c.cond = Cond{};
      } else {
        parse_fail(lineno, "choice needs 'if <cond>' or 'otherwise'");
      }
      if (c.feature.empty()) parse_fail(lineno, "choice needs a feature name");
      c.action = parse_action(action, lineno);
      sys->choices.push_back(std::move(c));
      continue;
    }
    parse_fail(lineno, "unrecognized directive '" + s + "'");
  }

  for (const auto& [lang, net] : set->nets) {
    if (net.entry.empty()) {
      throw NetworkParseError(to_string(lang) + ": no entry system declared");
    }
    if (!net.systems.count(net.entry)) {
      throw NetworkParseError(to_string(lang) + ": entry system '" + net.entry +
                              "' not defined");
    }
  }
  return set;
}

std::shared_ptr<const NetworkSet> load_networks_from_string(const std::string& content) {
  std::istringstream in(content);
  return load_networks(in);
}

std::shared_ptr<const NetworkSet> default_networks() {
  static const std::shared_ptr<const NetworkSet> net =
      load_networks_from_string(default_network_text());
  return net;
}

NetworkSelection traverse_network(const NetworkSet& networks, Language language,
                                  const NetworkInputs& inputs) {
  auto nit = networks.nets.find(language);
  if (nit == networks.nets.end()) {
    throw InvalidFeatureCombination("no network for language " +
                                    to_string(language));
  }
  const LanguageNet& net = nit->second;
  for (const Reject& r : net.rejects) {
    if (r.cond.eval(inputs)) throw InvalidFeatureCombination(r.reason);
  }

  NetworkSelection sel;
  std::deque<std::string> work{net.entry};
  int steps = 0;
  while (!work.empty()) {
    if (++steps > 64) {
      throw InvalidFeatureCombination("network traversal does not terminate");
    }
    std::string name = work.front();
    work.pop_front();
    auto sit = net.systems.find(name);
    if (sit == net.systems.end()) {
      throw NetworkParseError("system '" + name + "' referenced but not defined");
    }
    const System& sys = sit->second;
    const Choice* fired = nullptr;
    for (const Choice& c : sys.choices) {
      if (c.cond.eval(inputs)) {
        fired = &c;
        break;
      }
    }
    if (!fired) {
      throw InvalidFeatureCombination("no selectable feature in system " + name);
    }
    sel.path.push_back({sys.name, fired->feature});
    switch (fired->action.kind) {
      case ActionKind::Lemma:
        if (sel.lemma) {
          throw InvalidFeatureCombination("two systems both realize a lemma");
        }
        sel.lemma = fired->action.payload;
        break;
      case ActionKind::Prefix:
        sel.prefix = fired->action.payload;
        break;
      case ActionKind::None:
        break;
      case ActionKind::Goto:
        work.push_back(fired->action.payload);
        break;
      case ActionKind::Parallel:
        work.push_back(fired->action.payload);
        work.push_back(fired->action.payload2);
        break;
      case ActionKind::Delegate:
        sel.delegate = fired->action.group;
        break;
    }
  }

  if (!sel.lemma && !sel.delegate) {
    throw InvalidFeatureCombination("network path selects no marker");
  }
  return sel;
}

}  // namespace congen
