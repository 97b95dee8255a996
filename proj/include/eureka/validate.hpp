#pragma once

// Metrical validation of a lexicon against its slots.
//
// Two findings are reported:
//  * a word that cannot appear in any valid hexameter at its slot, given the
//    other drums' words;
//  * a combination of (otherwise usable) words that fails to scan. A lexicon
//    with no findings therefore yields only valid hexameters, whichever rows
//    the drums stop on.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eureka/lexicon.hpp"
#include "eureka/meter.hpp"

namespace eureka {

enum class ValidationMode { strict, historical };
enum class Severity { warning, error };

struct Diagnostic {
  Severity severity = Severity::error;
  int drum = 0;      // 0 for a finding about a whole line
  std::string word;  // the word, or the offending line
  std::string message;

  std::string str() const {
    std::string out = severity == Severity::error ? "error: " : "warning: ";
    if (drum) out += "drum " + std::to_string(drum) + " ";
    return out + "'" + word + "': " + message;
  }
};

inline std::vector<Diagnostic> validate_historical(const Lexicon& lexicon, ValidationMode mode,
                                                   ScanOptions options = {}) {
  using StateSet = HexameterAutomaton::StateSet;
  const HexameterAutomaton automaton(options);
  const Severity severity = mode == ValidationMode::strict ? Severity::error : Severity::warning;
  std::vector<Diagnostic> diagnostics;

  struct Pattern {
    QuantitySeq quantities;
    std::vector<const LexiconEntry*> entries;
    bool active = true;
  };
  std::array<std::vector<Pattern>, drum_count> patterns;
  for (int d = 1; d <= drum_count; ++d) {
    auto& list = patterns[static_cast<std::size_t>(d - 1)];
    for (const LexiconEntry& e : lexicon.drum(d)) {
      auto it = std::find_if(list.begin(), list.end(),
                             [&](const Pattern& p) { return p.quantities == e.quantities; });
      if (it == list.end()) {
        list.push_back({e.quantities, {&e}, true});
      } else if (std::none_of(it->entries.begin(), it->entries.end(),
                              [&](const LexiconEntry* x) { return x->word == e.word; })) {
        it->entries.push_back(&e);
      }
    }
  }

  // Drop patterns that cannot take part in any accepted line, until stable.
  for (bool changed = true; changed;) {
    changed = false;
    std::array<StateSet, drum_count + 1> forward{};
    forward[0] = HexameterAutomaton::initial();
    for (std::size_t k = 0; k < drum_count; ++k)
      for (const Pattern& p : patterns[k])
        if (p.active) forward[k + 1] |= automaton.run(forward[k], p.quantities);

    std::array<StateSet, drum_count + 1> backward{};
    backward[drum_count] = HexameterAutomaton::accepting_states();
    for (std::size_t k = drum_count; k-- > 0;) {
      for (int s = 0; s < HexameterAutomaton::state_count; ++s) {
        const StateSet single = StateSet{1} << s;
        for (const Pattern& p : patterns[k])
          if (p.active && (automaton.run(single, p.quantities) & backward[k + 1])) backward[k] |= single;
      }
    }

    for (std::size_t k = 0; k < drum_count; ++k) {
      for (Pattern& p : patterns[k]) {
        if (!p.active || (automaton.run(forward[k], p.quantities) & backward[k + 1])) continue;
        p.active = false;
        changed = true;
        for (const LexiconEntry* e : p.entries)
          diagnostics.push_back({severity, static_cast<int>(k) + 1, e->word.str(),
                                 "quantities " + quantity_string(e->quantities) +
                                     " cannot take part in any valid hexameter at slot " +
                                     std::string(slot_name(e->category))});
      }
    }
  }

  // Closure over the remaining patterns: track every reachable state set
  // with one witness choice of patterns.
  std::map<StateSet, std::vector<std::size_t>> frontier{{HexameterAutomaton::initial(), {}}};
  for (std::size_t k = 0; k < drum_count; ++k) {
    std::map<StateSet, std::vector<std::size_t>> next;
    for (const auto& [states, witness] : frontier) {
      for (std::size_t i = 0; i < patterns[k].size(); ++i) {
        if (!patterns[k][i].active) continue;
        const StateSet after = automaton.run(states, patterns[k][i].quantities);
        if (next.count(after)) continue;
        auto w = witness;
        w.push_back(i);
        next.emplace(after, std::move(w));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [states, witness] : frontier) {
    if (HexameterAutomaton::accepts(states)) continue;
    std::string line;
    QuantitySeq q;
    for (std::size_t k = 0; k < witness.size(); ++k) {
      const Pattern& p = patterns[k][witness[k]];
      if (k) line += ' ';
      line += p.entries.front()->word.str();
      q.insert(q.end(), p.quantities.begin(), p.quantities.end());
    }
    diagnostics.push_back({severity, 0, line,
                           "line " + quantity_string(q) + " does not scan as a hexameter"});
  }

  return diagnostics;
}

// Throws MeterValidationError listing every finding, if there are any.
inline void require_strict(const Lexicon& lexicon, ScanOptions options = {}) {
  const auto diagnostics = validate_historical(lexicon, ValidationMode::strict, options);
  if (diagnostics.empty()) return;
  std::string what = "lexicon fails strict metrical validation:";
  for (const Diagnostic& d : diagnostics) what += "\n  " + d.str();
  throw MeterValidationError(what);
}

}  // namespace eureka
