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

#include "congen/lexicon.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "congen/default_data.hpp"
#include "congen/errors.hpp"
#include "congen/text.hpp"

namespace congen {

std::string to_string(MarkerGroup g) {
  switch (g) {
    case MarkerGroup::ConjunctiveAdjunct: return "conjunctive_adjunct";
    case MarkerGroup::CoordinatingConjunction: return "coordinating_conjunction";
    case MarkerGroup::SubordinatingConjunction: return "subordinating_conjunction";
    case MarkerGroup::Preposition: return "preposition";
    case MarkerGroup::SplitParticle: return "split_particle";
  }
  return "?";
}

std::string to_string(Feature f) {
  switch (f) {
    case Feature::Formal: return "formal";
    case Feature::Informal: return "informal";
    case Feature::Colloquial: return "colloquial";
    case Feature::Archaic: return "archaic";
    case Feature::Legalistic: return "legalistic";
    case Feature::Intensified: return "intensified";
    case Feature::Conditional: return "conditional";
    case Feature::Substitutive: return "substitutive";
    case Feature::Argumentative: return "argumentative";
    case Feature::ThematicNCompatible: return "thematic_n_compatible";
    case Feature::NonAdjacentCapable: return "non_adjacent_capable";
    case Feature::Dialogic: return "dialogic";
  }
  return "?";
}

std::optional<Feature> feature_from_string(const std::string& name) {
  static const std::map<std::string, Feature> table = {
      {"formal", Feature::Formal},
      {"informal", Feature::Informal},
      {"colloquial", Feature::Colloquial},
      {"archaic", Feature::Archaic},
      {"legalistic", Feature::Legalistic},
      {"intensified", Feature::Intensified},
      {"conditional", Feature::Conditional},
      {"substitutive", Feature::Substitutive},
      {"argumentative", Feature::Argumentative},
      {"thematic_n_compatible", Feature::ThematicNCompatible},
      {"non_adjacent_capable", Feature::NonAdjacentCapable},
      {"dialogic", Feature::Dialogic},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string to_string(Placement p) {
  switch (p) {
    case Placement::ClauseInitial: return "clause_initial";
    case Placement::ClauseSecondOrLater: return "clause_second_or_later";
    case Placement::PreNominal: return "pre_nominal";
    case Placement::SplitAcrossClauses: return "split_across_clauses";
  }
  return "?";
}

std::string MarkerEntry::first_part() const {
  auto pos = lemma.find('+');
  return pos == std::string::npos ? lemma : lemma.substr(0, pos);
}

std::string MarkerEntry::second_part() const {
  auto pos = lemma.find('+');
  if (pos == std::string::npos) return "";
  std::string rest = lemma.substr(pos + 1);
  // Any further '+' joins into one tail ("zwar+aber+doch" -> "aber doch").
  std::replace(rest.begin(), rest.end(), '+', ' ');
  return rest;
}

bool rank_less(const MarkerEntry& a, const MarkerEntry& b) {
  if (a.frequency.has_value() != b.frequency.has_value()) {
    return a.frequency.has_value();  // counted entries outrank uncounted
  }
  if (a.frequency && b.frequency && *a.frequency != *b.frequency) {
    return *a.frequency > *b.frequency;
  }
  return a.lemma < b.lemma;
}

namespace {

size_t bucket_index(Language lang, MarkerGroup g) {
  return static_cast<size_t>(lang) * 5 + static_cast<size_t>(g);
}

}  // namespace

Lexicon Lexicon::from_entries(std::vector<MarkerEntry> entries) {
  Lexicon lex;
  lex.entries_ = std::move(entries);
  lex.buckets_.assign(10, {});
  for (const auto& e : lex.entries_) {
    lex.buckets_[bucket_index(e.language, e.group)].push_back(&e);
  }
  for (auto& bucket : lex.buckets_) {
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const MarkerEntry* a, const MarkerEntry* b) {
                       return rank_less(*a, *b);
                     });
  }
  return lex;
}

const std::vector<const MarkerEntry*>& Lexicon::bucket(Language lang,
                                                       MarkerGroup g) const {
  return buckets_[bucket_index(lang, g)];
}

namespace {

Language parse_language(const std::string& s, int line) {
  if (s == "en") return Language::En;
  if (s == "de") return Language::De;
  throw LexiconParseError(line, "unknown language '" + s + "'");
}

MarkerGroup parse_group(const std::string& s, int line) {
  if (s == "conjunctive_adjunct") return MarkerGroup::ConjunctiveAdjunct;
  if (s == "coordinating_conjunction") return MarkerGroup::CoordinatingConjunction;
  if (s == "subordinating_conjunction") return MarkerGroup::SubordinatingConjunction;
  if (s == "preposition") return MarkerGroup::Preposition;
  if (s == "split_particle") return MarkerGroup::SplitParticle;
  throw LexiconParseError(line, "unknown marker group '" + s + "'");
}

Placement parse_placement(const std::string& s, int line) {
  if (s == "clause_initial") return Placement::ClauseInitial;
  if (s == "clause_second_or_later") return Placement::ClauseSecondOrLater;
  if (s == "pre_nominal") return Placement::PreNominal;
  if (s == "split_across_clauses") return Placement::SplitAcrossClauses;
  throw LexiconParseError(line, "unknown placement '" + s + "'");
}

void check_invariants(const std::vector<MarkerEntry>& entries) {
  // Homonyms may live in different groups (English "though" is both a
  // subordinator and a clause-final adjunct); within one group a lemma may
  // appear once per language.
  std::map<std::tuple<std::string, Language, MarkerGroup>, int> seen;
  for (const auto& e : entries) {
    auto key = std::make_tuple(e.lemma, e.language, e.group);
    if (++seen[key] > 1) {
      throw LexiconInvariantError("duplicate entry ('" + e.lemma + "', " +
                                  to_string(e.language) + ", " +
                                  to_string(e.group) + ")");
    }
    bool split_lemma = e.lemma.find('+') != std::string::npos;
    if (e.group == MarkerGroup::SplitParticle) {
      if (!split_lemma) {
        throw LexiconInvariantError("split particle '" + e.lemma +
                                    "' needs a two-part lemma (first+second)");
      }
      if (e.placement != Placement::SplitAcrossClauses) {
        throw LexiconInvariantError("split particle '" + e.lemma +
                                    "' must use split_across_clauses placement");
      }
    } else {
      if (split_lemma) {
        throw LexiconInvariantError("'" + e.lemma +
                                    "': only split particles join parts with '+'");
      }
      if (e.placement == Placement::SplitAcrossClauses) {
        throw LexiconInvariantError("'" + e.lemma +
                                    "': split placement outside split_particle");
      }
    }
    if (e.group == MarkerGroup::Preposition &&
        e.placement != Placement::PreNominal) {
      throw LexiconInvariantError("preposition '" + e.lemma +
                                  "' must use pre_nominal placement");
    }
  }
  for (Language lang : {Language::En, Language::De}) {
    for (MarkerGroup g :
         {MarkerGroup::ConjunctiveAdjunct, MarkerGroup::CoordinatingConjunction,
          MarkerGroup::SubordinatingConjunction, MarkerGroup::Preposition}) {
      bool found = false;
      for (const auto& e : entries) {
        if (e.language == lang && e.group == g) found = true;
      }
      if (!found) {
        throw LexiconInvariantError("no " + to_string(lang) + " entries in group " +
                                    to_string(g));
      }
    }
  }
}

}  // namespace

Lexicon load_lexicon(std::istream& in) {
  std::vector<MarkerEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = text::trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    // Inline comments after the record.
    auto hash = stripped.find(" #");
    if (hash != std::string::npos) stripped = text::trim(stripped.substr(0, hash));

    std::vector<std::string> fields = text::split(stripped, '|');
    if (fields.size() != 6) {
      throw LexiconParseError(lineno, "expected 6 '|' fields, got " +
                                          std::to_string(fields.size()));
    }
    MarkerEntry e;
    e.lemma = text::trim(fields[0]);
    if (e.lemma.empty()) throw LexiconParseError(lineno, "empty lemma");
    e.language = parse_language(text::trim(fields[1]), lineno);
    e.group = parse_group(text::trim(fields[2]), lineno);
    std::string feats = text::trim(fields[3]);
    if (!feats.empty()) {
      for (const std::string& raw : text::split(feats, ',')) {
        std::string name = text::trim(raw);
        if (name.empty()) continue;
        std::optional<Feature> f = feature_from_string(name);
        if (!f) throw LexiconParseError(lineno, "unknown feature '" + name + "'");
        e.features.insert(*f);
      }
    }
    std::string freq = text::trim(fields[4]);
    if (!freq.empty()) {
      try {
        size_t used = 0;
        int value = std::stoi(freq, &used);
        if (used != freq.size() || value < 0) throw std::invalid_argument(freq);
        e.frequency = value;
      } catch (const std::exception&) {
        throw LexiconParseError(lineno, "bad frequency '" + freq + "'");
      }
    }
    e.placement = parse_placement(text::trim(fields[5]), lineno);
    entries.push_back(std::move(e));
  }
  if (entries.empty()) {
    throw LexiconInvariantError("lexicon is empty");
  }
  check_invariants(entries);
  return Lexicon::from_entries(std::move(entries));
}

Lexicon load_lexicon_from_string(const std::string& content) {
  std::istringstream in(content);
  return load_lexicon(in);
}

const Lexicon& default_lexicon() {
  static const Lexicon lex = load_lexicon_from_string(default_lexicon_text());
  return lex;
}

std::vector<const MarkerEntry*> select_candidates(const Lexicon& lexicon,
                                                  Language language,
                                                  MarkerGroup group,
                                                  const FeatureSet& required,
                                                  const FeatureSet& forbidden) {
  std::vector<const MarkerEntry*> out;
  bool want_dialogic = required.count(Feature::Dialogic) != 0;
  for (const MarkerEntry* e : lexicon.bucket(language, group)) {
    if (e->has(Feature::Dialogic) && !want_dialogic) continue;
    bool ok = true;
    for (Feature f : required) {
      if (!e->has(f)) { ok = false; break; }
    }
    if (!ok) continue;
    for (Feature f : forbidden) {
      if (e->has(f)) { ok = false; break; }
    }
    if (!ok) continue;
    out.push_back(e);
  }
  if (out.empty()) {
    throw NoCandidate("no " + to_string(language) + " " + to_string(group) +
                      " matches the requested feature set");
  }
  return out;
}

const MarkerEntry* rank_and_pick(const std::vector<const MarkerEntry*>& candidates,
                                 const RankPolicy& policy, std::mt19937& rng) {
  if (candidates.empty()) throw NoCandidate("empty candidate list");
  if (!policy.seeded) return candidates.front();
  std::uniform_int_distribution<size_t> dist(0, candidates.size() - 1);
  return candidates[dist(rng)];
}

const MarkerEntry* rank_and_pick(const std::vector<const MarkerEntry*>& candidates) {
  std::mt19937 rng;  // unused by the deterministic policy
  return rank_and_pick(candidates, RankPolicy{}, rng);
}

}  // namespace congen
