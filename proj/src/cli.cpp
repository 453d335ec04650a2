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

#include "congen/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "congen/errors.hpp"
#include "congen/realize.hpp"
#include "congen/scenario.hpp"
#include "congen/text.hpp"

namespace congen {

namespace {

struct Options {
  std::vector<std::string> files;
  std::string lang = "both";
  std::string formality;
  std::string speech_register;
  bool emphasis = false;
  bool no_emphasis = false;
  bool intensify = false;
  bool no_intensify = false;
  std::optional<std::uint32_t> seed;
  bool emit_tree = false;
  bool emit_plans = false;
  std::string lexicon_path;
  std::string network_path;
};

StyleParams apply_overrides(StyleParams style, const Options& opt) {
  if (opt.formality == "neutral") style.formality = Formality::Neutral;
  if (opt.formality == "formal") style.formality = Formality::Formal;
  if (opt.formality == "informal") style.formality = Formality::Informal;
  if (opt.speech_register == "written") {
    style.speech_register = SpeechRegister::Written;
  }
  if (opt.speech_register == "spoken") {
    style.speech_register = SpeechRegister::Spoken;
  }
  if (opt.emphasis) style.emphasis = true;
  if (opt.no_emphasis) style.emphasis = false;
  if (opt.intensify) style.intensify = true;
  if (opt.no_intensify) style.intensify = false;
  return style;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"congen: concessive sentence generation from situation descriptions"};
  Options opt;

  app.add_option("files", opt.files, "scenario files (JSON)")
      ->required()
      ->expected(-1);
  app.add_option("--lang", opt.lang, "output language: en, de, or both")
      ->check(CLI::IsMember({"en", "de", "both"}))
      ->capture_default_str();
  app.add_option("--formality", opt.formality,
                 "override scenario formality: neutral, formal, informal")
      ->check(CLI::IsMember({"neutral", "formal", "informal"}));
  app.add_option("--register", opt.speech_register,
                 "override speech register: written, spoken")
      ->check(CLI::IsMember({"written", "spoken"}));
  app.add_flag("--emphasis", opt.emphasis, "force emphatic style on");
  app.add_flag("--no-emphasis", opt.no_emphasis, "force emphatic style off");
  app.add_flag("--intensify", opt.intensify, "force intensified markers on");
  app.add_flag("--no-intensify", opt.no_intensify,
               "force intensified markers off");
  app.add_option("--seed", opt.seed,
                 "vary marker choice with this random seed (default: always "
                 "take the top-ranked marker)");
  app.add_flag("--emit-tree", opt.emit_tree,
               "print the discourse tree notation before the text");
  app.add_flag("--emit-plans", opt.emit_plans,
               "print the sentence plans before the text");
  app.add_option("--lexicon", opt.lexicon_path,
                 "marker inventory file (default: bundled)");
  app.add_option("--network", opt.network_path,
                 "choice network file (default: bundled)");

  try {
    std::vector<const char*> argv;
    argv.push_back("congen");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print to out and succeed.
      out << app.help();
      return 0;
    }
    err << "error [stage cli]: " << e.what() << "\n";
    return 2;
  }

  std::vector<Language> languages;
  if (opt.lang == "en") languages = {Language::En};
  else if (opt.lang == "de") languages = {Language::De};
  else languages = {Language::En, Language::De};

  RankPolicy policy;
  if (opt.seed) {
    policy.seeded = true;
    policy.seed = *opt.seed;
  }

  // Resource loading failures are input problems, like bad scenarios.
  Lexicon custom_lexicon;
  RealizationResources resources;
  try {
    if (opt.lexicon_path.empty()) {
      resources.lexicon = &default_lexicon();
    } else {
      std::ifstream in(opt.lexicon_path);
      if (!in) {
        throw LexiconInvariantError(opt.lexicon_path + ": cannot open file");
      }
      custom_lexicon = load_lexicon(in);
      resources.lexicon = &custom_lexicon;
    }
    if (opt.network_path.empty()) {
      resources.networks = default_networks();
    } else {
      std::ifstream in(opt.network_path);
      if (!in) {
        throw NetworkParseError(opt.network_path + ": cannot open file");
      }
      resources.networks = load_networks(in);
    }
  } catch (const Error& e) {
    err << "error [stage " << e.stage() << "]: " << e.what() << "\n";
    return 1;
  }

  for (const std::string& path : opt.files) {
    try {
      Scenario scenario = parse_scenario_file(path);
      StyleParams style = apply_overrides(scenario.style, opt);
      RealizationResult result =
          realize_scenario(scenario, languages, style, resources, policy);
      if (opt.emit_tree) out << result.notation << "\n";
      if (opt.emit_plans) out << plans_to_text(result.plans);
      for (const LanguageOutput& lang_out : result.outputs) {
        for (const std::string& sentence : lang_out.sentences) {
          if (languages.size() > 1) {
            out << "[" << to_string(lang_out.language) << "] ";
          }
          out << sentence << "\n";
        }
      }
    } catch (const Error& e) {
      err << "error [stage " << e.stage() << "]: " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace congen
