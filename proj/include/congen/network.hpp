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

// network.hpp : systemic choice networks for hypotactic concessive markers.
//
// The network topology is data, not code: data/networks.net lists, per
// language, the systems, their entry conditions, and what each feature
// contributes (a marker lemma, a clause prefix, a delegation to a lexicon
// group, a jump to further systems, or two systems traversed in parallel).
// traverse_network interprets that description over a feature bundle.

#ifndef CONGEN_NETWORK_HPP
#define CONGEN_NETWORK_HPP

#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "congen/knowledge.hpp"
#include "congen/lexicon.hpp"
#include "congen/types.hpp"

namespace congen {

struct NetworkInputs {
  ConcessionKind kind = ConcessionKind::ViolatedImplication;
  bool thematic_n = false;   // nucleus moved to theme position
  bool conditional = false;  // conceded content is hypothetical
  bool intensify = false;
  Formality formality = Formality::Neutral;
  bool emphasis = false;
};

// One traversal step: which system fired which feature.
struct NetworkFeature {
  std::string system;
  std::string feature;
};

struct NetworkSelection {
  std::vector<NetworkFeature> path;
  std::optional<std::string> lemma;       // chosen marker, if any
  std::optional<std::string> prefix;      // clause prefix such as "und das"
  std::optional<MarkerGroup> delegate;    // defer choice to this lexicon group
};

struct NetworkSet;  // parsed topology, opaque to callers

// Parses data/networks.net syntax. Throws NetworkParseError.
std::shared_ptr<const NetworkSet> load_networks(std::istream& in);
std::shared_ptr<const NetworkSet> load_networks_from_string(const std::string& text);

// The bundled topology (byte-identical to data/networks.net).
std::shared_ptr<const NetworkSet> default_networks();

// Walks the language's systems over the inputs. Total over the declared
// input space except where the description itself rejects the combination
// (throws InvalidFeatureCombination, e.g. substitution in English).
NetworkSelection traverse_network(const NetworkSet& networks, Language language,
                                  const NetworkInputs& inputs);

}  // namespace congen

#endif  // CONGEN_NETWORK_HPP
