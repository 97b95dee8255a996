#pragma once

// Machine cascades: lines produced by one machine become the word stock of
// the next. A generation's lexicon takes, for each slot, the distinct words
// found in that slot across the previous generation's lines; quantities are
// looked up in the root lexicon, since every generated word is a root word.

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eureka/drumc.hpp"
#include "eureka/error.hpp"
#include "eureka/lexicon.hpp"
#include "eureka/mechanism.hpp"

namespace eureka {

using Line = std::array<std::string, drum_count>;

struct CascadeSpec {
  std::vector<Line> corpus;
  int depth = 1;
};

// One six-word line per non-blank line; '#' starts a comment.
inline std::vector<Line> parse_corpus(std::string_view text) {
  std::vector<Line> corpus;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() != drum_count)
      throw CascadeError("corpus line " + std::to_string(line_no) + " has " + std::to_string(words.size()) +
                         " words, expected 6");
    Line line;
    std::copy(words.begin(), words.end(), line.begin());
    corpus.push_back(std::move(line));
  }
  return corpus;
}

inline Lexicon lexicon_from_corpus(const Lexicon& root, std::span<const Line> corpus) {
  if (corpus.empty()) throw CascadeError("cascade corpus is empty");
  std::array<Lexicon::Drum, drum_count> drums;
  std::array<std::set<Word>, drum_count> seen;
  for (const Line& line : corpus) {
    for (int d = 1; d <= drum_count; ++d) {
      const auto i = static_cast<std::size_t>(d - 1);
      Word word;
      try {
        word = Word::parse(line[i]);
      } catch (const AlphabetError&) {
        throw CascadeError("corpus word '" + line[i] + "' is not in the root lexicon (drum " + std::to_string(d) + ")");
      }
      const LexiconEntry* entry = root.find(d, word);
      if (!entry)
        throw CascadeError("corpus word '" + line[i] + "' is not in the root lexicon (drum " + std::to_string(d) + ")");
      if (seen[i].insert(word).second) drums[i].push_back(*entry);
    }
  }
  return Lexicon(std::move(drums));
}

struct CascadeOptions {
  std::uint64_t seed = 0;
  std::size_t pulls = 1;             // lines composed by the last generation
  std::size_t per_generation = 100;  // lines handed from one generation to the next
};

struct CascadeRun {
  std::vector<Lexicon> generations;  // generations[k] drives machine k+1
  std::vector<CycleResult> verses;   // output of the last generation
};

inline CascadeRun run_cascade(const Lexicon& root, const CascadeSpec& spec, const CascadeOptions& options) {
  if (spec.depth < 1) throw CascadeError("cascade depth must be at least 1");
  CascadeRun run;
  std::vector<Line> corpus = spec.corpus;
  for (int gen = 1; gen <= spec.depth; ++gen) {
    run.generations.push_back(lexicon_from_corpus(root, corpus));
    Machine machine(compile_program(run.generations.back()), options.seed + static_cast<std::uint64_t>(gen - 1));
    const bool last = gen == spec.depth;
    auto results = machine.run_session(last ? options.pulls : options.per_generation);
    if (last) {
      run.verses = std::move(results);
    } else {
      corpus.clear();
      for (const auto& r : results) corpus.push_back(r.words);
    }
  }
  return run;
}

}  // namespace eureka
