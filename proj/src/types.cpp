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

#include "congen/types.hpp"

namespace congen {

std::string to_string(Language lang) {
  return lang == Language::En ? "en" : "de";
}

std::string to_string(Polarity pol) {
  return pol == Polarity::Positive ? "positive" : "negated";
}

std::string to_string(Formality f) {
  switch (f) {
    case Formality::Neutral: return "neutral";
    case Formality::Formal: return "formal";
    case Formality::Informal: return "informal";
  }
  return "?";
}

std::string to_string(SpeechRegister r) {
  return r == SpeechRegister::Written ? "written" : "spoken";
}

std::string to_notation(const PropRef& ref) {
  return ref.polarity == Polarity::Negated ? "NOT-" + ref.id : ref.id;
}

}  // namespace congen
