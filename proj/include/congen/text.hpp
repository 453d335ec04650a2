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

// text.hpp : small string helpers (UTF-8 aware where it matters)

#ifndef CONGEN_TEXT_HPP
#define CONGEN_TEXT_HPP

#include <string>
#include <vector>

#include "congen/types.hpp"

namespace congen {
namespace text {

std::vector<std::string> split(const std::string& s, char sep);
std::vector<std::string> tokens(const std::string& s);  // whitespace split
std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string trim(const std::string& s);

// Uppercases the first letter; handles ASCII plus the German lowercase
// umlauts (two-byte UTF-8).
std::string capitalize_first(const std::string& s);

// Inserts `word` after token index `after` (1-based count of tokens kept
// before it). Clamps to the end.
std::string insert_after_token(const std::string& clause, const std::string& word,
                               int after);

// Token index after which a medial adjunct goes for this language: English
// after the first constituent (first token; skips a leading article), German
// after the finite verb (second token) plus any pronoun cluster.
int adjunct_slot_index(const std::string& clause, Language lang);

// German verb-second inversion for clauses following a fronted constituent:
// swaps the first two tokens. Callers prefer an explicit inverted form when
// the scenario supplies one.
std::string invert_verb_second(const std::string& clause);

}  // namespace text
}  // namespace congen

#endif  // CONGEN_TEXT_HPP
