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

// lexicon.hpp : the concessive marker inventory.
//
// Markers are grouped by discourse function, not part of speech: what kind of
// structural link they can realize (cohesive adjunct, paratactic conjunction,
// hypotactic subordinator, preposition over a nominalization, or a particle
// pair split across both clauses). Entries carry usage features and, for
// German, corpus frequencies that drive deterministic ranking.

#ifndef CONGEN_LEXICON_HPP
#define CONGEN_LEXICON_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "congen/types.hpp"

namespace congen {

enum class MarkerGroup {
  ConjunctiveAdjunct,
  CoordinatingConjunction,
  SubordinatingConjunction,
  Preposition,
  SplitParticle
};

std::string to_string(MarkerGroup g);

enum class Feature {
  Formal,
  Informal,
  Colloquial,
  Archaic,
  Legalistic,
  Intensified,
  Conditional,
  Substitutive,
  Argumentative,
  ThematicNCompatible,
  NonAdjacentCapable,
  Dialogic
};

using FeatureSet = std::set<Feature>;

std::string to_string(Feature f);
std::optional<Feature> feature_from_string(const std::string& name);

enum class Placement { ClauseInitial, ClauseSecondOrLater, PreNominal, SplitAcrossClauses };

std::string to_string(Placement p);

struct MarkerEntry {
  std::string lemma;  // split particles join their parts with '+'
  Language language = Language::En;
  MarkerGroup group = MarkerGroup::ConjunctiveAdjunct;
  FeatureSet features;
  std::optional<int> frequency;  // corpus counts, German entries only
  Placement placement = Placement::ClauseInitial;

  bool has(Feature f) const { return features.count(f) != 0; }
  // First and remaining parts of a split lemma ("zwar+aber" -> "zwar", "aber").
  std::string first_part() const;
  std::string second_part() const;
};

class Lexicon {
 public:
  Lexicon() = default;
  // Move-only: buckets_ points into entries_, which vector moves preserve
  // but copies would not.
  Lexicon(Lexicon&&) = default;
  Lexicon& operator=(Lexicon&&) = default;
  Lexicon(const Lexicon&) = delete;
  Lexicon& operator=(const Lexicon&) = delete;

  const std::vector<MarkerEntry>& entries() const { return entries_; }
  const std::vector<const MarkerEntry*>& bucket(Language lang, MarkerGroup g) const;

  // Internal: ranked index building; used by load_lexicon.
  static Lexicon from_entries(std::vector<MarkerEntry> entries);

 private:
  std::vector<MarkerEntry> entries_;
  // (language, group) -> entries pre-sorted by rank order
  std::vector<std::vector<const MarkerEntry*>> buckets_;
};

// Parses the line format
//   lemma|language|group|features|frequency|placement
// ('#' comments, blank lines ignored, UTF-8). Throws LexiconParseError with a
// line number on bad syntax and LexiconInvariantError on duplicate
// (lemma, language, group) triples, split/placement mismatches, or an empty
// mandatory group.
Lexicon load_lexicon(std::istream& in);
Lexicon load_lexicon_from_string(const std::string& text);

// The bundled inventory (byte-identical to data/markers.lex).
const Lexicon& default_lexicon();

// All entries of the group matching the feature constraints, in rank order:
// frequency descending, entries without frequency after all that have one,
// ties by lemma lexicographically. Entries with the dialogic feature are
// filtered out unless `required` itself asks for dialogic. Throws NoCandidate
// when nothing matches.
std::vector<const MarkerEntry*> select_candidates(const Lexicon& lexicon,
                                                  Language language,
                                                  MarkerGroup group,
                                                  const FeatureSet& required = {},
                                                  const FeatureSet& forbidden = {});

struct RankPolicy {
  bool seeded = false;
  std::uint32_t seed = 0;
};

// Deterministic policy returns the head of the ranked list; seeded policy
// returns a reproducible pseudo-random element.
const MarkerEntry* rank_and_pick(const std::vector<const MarkerEntry*>& candidates,
                                 const RankPolicy& policy, std::mt19937& rng);
const MarkerEntry* rank_and_pick(const std::vector<const MarkerEntry*>& candidates);

// True iff a precedes b in rank order. Exposed so tests can cross-check.
bool rank_less(const MarkerEntry& a, const MarkerEntry& b);

}  // namespace congen

#endif  // CONGEN_LEXICON_HPP
