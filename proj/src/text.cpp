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

#include "congen/text.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

namespace congen {
namespace text {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string capitalize_first(const std::string& s) {
  if (s.empty()) return s;
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (c0 < 0x80) {
    std::string out = s;
    out[0] = static_cast<char>(std::toupper(c0));
    return out;
  }
  // Two-byte UTF-8: map a-umlaut, o-umlaut, u-umlaut to uppercase.
  if (s.size() >= 2 && c0 == 0xC3) {
    unsigned char c1 = static_cast<unsigned char>(s[1]);
    if (c1 == 0xA4 || c1 == 0xB6 || c1 == 0xBC) {  // lowercase umlauts
      std::string out = s;
      out[1] = static_cast<char>(c1 - 0x20);
      return out;
    }
  }
  return s;
}

std::string insert_after_token(const std::string& clause, const std::string& word,
                               int after) {
  std::vector<std::string> toks = tokens(clause);
  if (toks.empty()) return word;
  size_t pos = static_cast<size_t>(after);
  if (pos > toks.size()) pos = toks.size();
  toks.insert(toks.begin() + static_cast<long>(pos), word);
  return join(toks, " ");
}

namespace {

// Unstressed German pronouns that cluster right after the finite verb; a
// medial adverb goes after them, not before.
const std::unordered_set<std::string>& de_pronouns() {
  static const std::unordered_set<std::string> set = {
      "es", "er", "sie", "ich", "du", "wir", "ihr",  "man",
      "mich", "dich", "sich", "uns", "euch", "ihn", "ihm", "ihnen"};
  return set;
}

std::string strip_punct(const std::string& tok) {
  size_t e = tok.size();
  while (e > 0 && (tok[e - 1] == ',' || tok[e - 1] == ';')) --e;
  return tok.substr(0, e);
}

}  // namespace

int adjunct_slot_index(const std::string& clause, Language lang) {
  std::vector<std::string> toks = tokens(clause);
  if (toks.empty()) return 0;
  if (lang == Language::En) {
    // After the first constituent; a bare article can't end one.
    std::string head = strip_punct(toks[0]);
    if (head == "the" || head == "a" || head == "an") {
      return toks.size() >= 2 ? 2 : 1;
    }
    return 1;
  }
  // German: Vorfeld + finite verb occupy the first two slots, unstressed
  // pronouns stack directly after the verb.
  size_t idx = toks.size() >= 2 ? 2 : toks.size();
  while (idx < toks.size() && de_pronouns().count(strip_punct(toks[idx]))) ++idx;
  return static_cast<int>(idx);
}

std::string invert_verb_second(const std::string& clause) {
  std::vector<std::string> toks = tokens(clause);
  if (toks.size() < 2) return clause;
  std::swap(toks[0], toks[1]);
  return join(toks, " ");
}

}  // namespace text
}  // namespace congen
