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

// types.hpp : shared enums and small value types used across the pipeline

#ifndef CONGEN_TYPES_HPP
#define CONGEN_TYPES_HPP

#include <string>

namespace congen {

enum class Language { En, De };

enum class Polarity { Positive, Negated };

inline Polarity opposite(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negated : Polarity::Positive;
}

// Reference to a proposition under a polarity. polarity is relative to the
// proposition as stored: Negated means "the negation of what the record says",
// regardless of whether the stored content is itself a negative statement.
struct PropRef {
  std::string id;
  Polarity polarity = Polarity::Positive;

  bool operator==(const PropRef& o) const {
    return id == o.id && polarity == o.polarity;
  }
  bool operator!=(const PropRef& o) const { return !(*this == o); }
};

enum class Formality { Neutral, Formal, Informal };
enum class SpeechRegister { Written, Spoken };

std::string to_string(Language lang);
std::string to_string(Polarity pol);
std::string to_string(Formality f);
std::string to_string(SpeechRegister r);

// Leaf notation: id, or NOT-id when the reference negates the stored record.
std::string to_notation(const PropRef& ref);

}  // namespace congen

#endif  // CONGEN_TYPES_HPP
