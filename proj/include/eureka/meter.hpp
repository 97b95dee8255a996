#pragma once

// Dactylic hexameter scansion.
//
// Feet 1-4 are dactyls (- u u) or spondees (- -); foot 5 is a dactyl unless
// spondaic fifth feet are allowed; foot 6 is a long syllable followed by an
// anceps (either quantity). Elision is not modelled.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "eureka/error.hpp"
#include "eureka/lexicon.hpp"

namespace eureka {

inline constexpr int feet_per_line = 6;

enum class FootKind : std::uint8_t { dactyl, spondee, final };

inline char foot_letter(FootKind kind) {
  switch (kind) {
    case FootKind::dactyl: return 'D';
    case FootKind::spondee: return 'S';
    case FootKind::final: return 'X';
  }
  return '?';
}

inline std::size_t foot_length(FootKind kind) { return kind == FootKind::dactyl ? 3 : 2; }

struct Foot {
  FootKind kind = FootKind::dactyl;
  std::size_t begin = 0;  // syllable range [begin, end)
  std::size_t end = 0;

  friend bool operator==(const Foot&, const Foot&) = default;
};

struct FootParse {
  std::array<Foot, feet_per_line> feet{};

  // "D D S S D X"
  std::string letters() const {
    std::string out;
    for (std::size_t i = 0; i < feet.size(); ++i) {
      if (i) out += ' ';
      out += foot_letter(feet[i].kind);
    }
    return out;
  }

  std::array<FootKind, feet_per_line> kinds() const {
    std::array<FootKind, feet_per_line> out{};
    for (std::size_t i = 0; i < feet.size(); ++i) out[i] = feet[i].kind;
    return out;
  }

  friend bool operator==(const FootParse&, const FootParse&) = default;
};

struct ScanOptions {
  bool allow_spondaic_fifth = false;
};

struct ScanOutcome {
  std::optional<FootParse> parse;
  // On failure: the furthest syllable index the parser could not get past.
  std::size_t furthest_failure = 0;
};

namespace detail {

class Scanner {
 public:
  Scanner(std::span<const Quantity> q, ScanOptions options) : q_(q), options_(options) {}

  ScanOutcome run() {
    ScanOutcome out;
    if (foot(0, 0)) {
      out.parse = parse_;
    } else {
      out.furthest_failure = furthest_;
    }
    return out;
  }

 private:
  // Matches `pattern` at pos; records where a mismatch happened.
  bool match(std::size_t pos, std::initializer_list<std::optional<Quantity>> pattern) {
    std::size_t i = pos;
    for (const auto& want : pattern) {
      if (i >= q_.size() || (want && q_[i] != *want)) {
        furthest_ = std::max(furthest_, i);
        return false;
      }
      ++i;
    }
    return true;
  }

  bool place(int index, FootKind kind, std::size_t pos) {
    parse_.feet[static_cast<std::size_t>(index)] = {kind, pos, pos + foot_length(kind)};
    return foot(index + 1, pos + foot_length(kind));
  }

  bool foot(int index, std::size_t pos) {
    constexpr auto L = Quantity::long_;
    constexpr auto S = Quantity::short_;
    if (index == feet_per_line) {
      if (pos == q_.size()) return true;
      furthest_ = std::max(furthest_, pos);
      return false;
    }
    if (index == feet_per_line - 1) {
      return match(pos, {L, std::nullopt}) && place(index, FootKind::final, pos);
    }
    if (match(pos, {L, S, S}) && place(index, FootKind::dactyl, pos)) return true;
    const bool spondee_ok = index < 4 || options_.allow_spondaic_fifth;
    return spondee_ok && match(pos, {L, L}) && place(index, FootKind::spondee, pos);
  }

  std::span<const Quantity> q_;
  ScanOptions options_;
  FootParse parse_{};
  std::size_t furthest_ = 0;
};

}  // namespace detail

// First valid parse under left-to-right backtracking, dactyl before spondee.
inline ScanOutcome try_scan(std::span<const Quantity> quantities, ScanOptions options = {}) {
  return detail::Scanner(quantities, options).run();
}

// Throws ScanError when no parse exists.
inline FootParse scan(std::span<const Quantity> quantities, ScanOptions options = {}) {
  if (quantities.empty()) throw ScanError(0, "no valid hexameter parse: empty quantity sequence");
  auto outcome = try_scan(quantities, options);
  if (!outcome.parse)
    throw ScanError(outcome.furthest_failure,
                    "no valid hexameter parse (fails at syllable " +
                        std::to_string(outcome.furthest_failure) + ")");
  return *outcome.parse;
}

// Concatenated quantities of one word per drum; throws UnknownWordError.
inline QuantitySeq line_quantities(const Lexicon& lexicon, std::span<const std::string> words) {
  if (words.size() != static_cast<std::size_t>(drum_count))
    throw Error("a line needs exactly six words, got " + std::to_string(words.size()));
  QuantitySeq out;
  for (int d = 1; d <= drum_count; ++d) {
    const std::string& text = words[static_cast<std::size_t>(d - 1)];
    Word word;
    try {
      word = Word::parse(text);
    } catch (const AlphabetError&) {
      throw UnknownWordError("unknown word '" + text + "' for drum " + std::to_string(d));
    }
    const LexiconEntry* entry = lexicon.find(d, word);
    if (!entry) throw UnknownWordError("unknown word '" + text + "' for drum " + std::to_string(d));
    out.insert(out.end(), entry->quantities.begin(), entry->quantities.end());
  }
  return out;
}

inline FootParse scan_line(const Lexicon& lexicon, std::span<const std::string> words,
                           ScanOptions options = {}) {
  const QuantitySeq q = line_quantities(lexicon, words);
  return scan(q, options);
}

// Nondeterministic automaton for the hexameter foot grammar. A state set is a
// bitmask; stepping a set distributes over union, which lets lexicon
// validation reason about all word combinations without enumerating them.
class HexameterAutomaton {
 public:
  using StateSet = std::uint32_t;

  explicit HexameterAutomaton(ScanOptions options = {}) : options_(options) {}

  static constexpr StateSet initial() { return bit(start(0)); }
  static constexpr StateSet accepting_states() { return bit(accept_state); }
  static constexpr int state_count = 18;

  StateSet step(StateSet states, Quantity q) const {
    StateSet out = 0;
    for (int s = 0; s < state_count; ++s)
      if (states & bit(s)) out |= step_one(s, q);
    return out;
  }

  StateSet run(StateSet states, std::span<const Quantity> qs) const {
    for (Quantity q : qs) {
      if (!states) break;
      states = step(states, q);
    }
    return states;
  }

  static constexpr bool accepts(StateSet states) { return (states & accepting_states()) != 0; }

 private:
  // States: start of foot k (0..5), after the opening long of foot k (6..11),
  // after the first short of a dactyl in foot k (12..16), accept (17).
  static constexpr int start(int foot) { return foot; }
  static constexpr int after_long(int foot) { return 6 + foot; }
  static constexpr int after_short(int foot) { return 12 + foot; }
  static constexpr int accept_state = 17;
  static constexpr StateSet bit(int s) { return StateSet{1} << s; }

  StateSet step_one(int s, Quantity q) const {
    const bool is_long = q == Quantity::long_;
    if (s < 6) return is_long ? bit(after_long(s)) : 0;
    if (s < 12) {
      const int foot = s - 6;
      if (foot == 5) return bit(accept_state);  // anceps
      if (is_long) {
        const bool spondee_ok = foot < 4 || options_.allow_spondaic_fifth;
        return spondee_ok ? bit(start(foot + 1)) : 0;
      }
      return bit(after_short(foot));
    }
    if (s < 17) {
      const int foot = s - 12;
      return is_long ? 0 : bit(start(foot + 1));
    }
    return 0;
  }

  ScanOptions options_;
};

}  // namespace eureka
