#pragma once

// Word lists for the six drums, and the line-oriented lexicon file format:
//
//   # comment
//   <drum:1-6> <WORD> <quantities:[-u]+> <adj|noun|adv|verb>
//
// e.g. "1 MARTIA -uu adj". Words are case-insensitive and canonicalised to
// upper case; AE/OE may stand for Æ/Œ.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eureka/alphabet.hpp"
#include "eureka/error.hpp"

namespace eureka {

inline constexpr int drum_count = 6;

enum class Quantity : std::uint8_t { long_, short_ };

using QuantitySeq = std::vector<Quantity>;

inline char quantity_symbol(Quantity q) { return q == Quantity::long_ ? '-' : 'u'; }

inline std::string quantity_string(const QuantitySeq& qs) {
  std::string out;
  for (Quantity q : qs) out += quantity_symbol(q);
  return out;
}

// Parses "-uu" style text. Whitespace and '|' are ignored; anything else throws.
inline QuantitySeq parse_quantities(std::string_view text) {
  QuantitySeq out;
  for (char c : text) {
    switch (c) {
      case '-':
        out.push_back(Quantity::long_);
        break;
      case 'u':
      case 'U':
        out.push_back(Quantity::short_);
        break;
      case ' ':
      case '\t':
      case '|':
        break;
      default:
        throw Error(std::string("bad quantity symbol '") + c + "' (expected '-' or 'u')");
    }
  }
  return out;
}

// Grammatical slot of each drum: ADJECTIVE NOUN ADVERB VERB NOUN ADJECTIVE.
enum class Slot : std::uint8_t { adj1, noun1, adv, verb, noun2, adj2 };

inline constexpr std::array<Slot, drum_count> slot_order = {Slot::adj1, Slot::noun1, Slot::adv,
                                                             Slot::verb, Slot::noun2, Slot::adj2};

inline Slot slot_for_drum(int drum) {
  if (drum < 1 || drum > drum_count) throw Error("drum index out of range: " + std::to_string(drum));
  return slot_order[static_cast<std::size_t>(drum - 1)];
}

inline int drum_for_slot(Slot slot) { return static_cast<int>(slot) + 1; }

// File keyword for a slot's part of speech.
inline std::string_view category_keyword(Slot slot) {
  switch (slot) {
    case Slot::adj1:
    case Slot::adj2:
      return "adj";
    case Slot::noun1:
    case Slot::noun2:
      return "noun";
    case Slot::adv:
      return "adv";
    case Slot::verb:
      return "verb";
  }
  return "?";
}

inline std::string_view slot_name(Slot slot) {
  switch (slot) {
    case Slot::adj1: return "ADJ1";
    case Slot::noun1: return "NOUN1";
    case Slot::adv: return "ADV";
    case Slot::verb: return "VERB";
    case Slot::noun2: return "NOUN2";
    case Slot::adj2: return "ADJ2";
  }
  return "?";
}

struct LexiconEntry {
  int drum = 1;
  Word word;
  QuantitySeq quantities;
  Slot category = Slot::adj1;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// Entries grouped by drum, each drum in file order. Immutable once built.
class Lexicon {
 public:
  using Drum = std::vector<LexiconEntry>;

  Lexicon() = default;

  // Validates entry invariants and that every drum is non-empty.
  explicit Lexicon(std::array<Drum, drum_count> drums) : drums_(std::move(drums)) {
    for (int d = 1; d <= drum_count; ++d) {
      const Drum& entries = drum(d);
      if (entries.empty())
        throw LexiconError(LexiconError::Kind::empty_drum, 0, 0,
                           "empty drum " + std::to_string(d));
      for (const LexiconEntry& e : entries) check_entry(e, d);
    }
  }

  const Drum& drum(int d) const { return drums_.at(static_cast<std::size_t>(d - 1)); }
  const std::array<Drum, drum_count>& drums() const noexcept { return drums_; }

  // First entry on the drum spelling this word, if any.
  const LexiconEntry* find(int d, const Word& word) const {
    for (const LexiconEntry& e : drum(d))
      if (e.word == word) return &e;
    return nullptr;
  }

  // Distinct words on a drum, in order of first appearance.
  std::vector<Word> distinct_words(int d) const {
    std::vector<Word> out;
    std::set<Word> seen;
    for (const LexiconEntry& e : drum(d))
      if (seen.insert(e.word).second) out.push_back(e.word);
    return out;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const Drum& d : drums_) n += d.size();
    return n;
  }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  static void check_entry(const LexiconEntry& e, int d) {
    const auto fail = [&](const std::string& what) {
      throw LexiconError(LexiconError::Kind::syntax, 0, 0,
                         "drum " + std::to_string(d) + " word '" + e.word.str() + "': " + what);
    };
    if (e.drum != d) fail("entry filed under the wrong drum");
    if (e.word.empty()) fail("empty word");
    if (e.quantities.empty()) fail("no quantities");
    if (e.quantities.size() > e.word.size()) fail("more quantities than letters");
    if (e.category != slot_for_drum(d)) fail("category does not match drum");
  }

  std::array<Drum, drum_count> drums_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based byte column
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace detail

inline Lexicon parse_lexicon(std::string_view text) {
  using Kind = LexiconError::Kind;
  std::array<Lexicon::Drum, drum_count> drums;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 4) {
      const std::size_t col = tokens.size() > 4 ? tokens[4].column : line.size() + 1;
      throw LexiconError(Kind::syntax, line_no, col,
                         "expected '<drum> <word> <quantities> <category>', got " +
                             std::to_string(tokens.size()) + " field(s)");
    }

    const detail::Token drum_tok = tokens[0];
    int drum = 0;
    for (char c : drum_tok.text) {
      if (c < '0' || c > '9' || drum > 1000)
        throw LexiconError(Kind::syntax, line_no, drum_tok.column,
                           "drum must be an integer, got '" + std::string(drum_tok.text) + "'");
      drum = drum * 10 + (c - '0');
    }
    if (drum < 1 || drum > drum_count)
      throw LexiconError(Kind::drum_range, line_no, drum_tok.column,
                         "drum index " + std::to_string(drum) + " out of range 1..6");

    const detail::Token word_tok = tokens[1];
    Word word;
    {
      // Locate the offending letter for the column.
      std::size_t p = 0;
      while (p < word_tok.text.size()) {
        const std::size_t start = p;
        const char32_t cp = detail::next_code_point(word_tok.text, p);
        if (!detail::code_point_index(cp))
          throw LexiconError(Kind::alphabet, line_no, word_tok.column + start,
                             "letter '" + std::string(word_tok.text.substr(start, p - start)) +
                                 "' in '" + std::string(word_tok.text) + "' is not in the stave alphabet");
      }
      word = Word::parse(word_tok.text);
    }

    const detail::Token qty_tok = tokens[2];
    QuantitySeq quantities;
    for (std::size_t i = 0; i < qty_tok.text.size(); ++i) {
      const char c = qty_tok.text[i];
      if (c == '-') {
        quantities.push_back(Quantity::long_);
      } else if (c == 'u' || c == 'U') {
        quantities.push_back(Quantity::short_);
      } else {
        throw LexiconError(Kind::syntax, line_no, qty_tok.column + i,
                           std::string("bad quantity symbol '") + c + "' (expected '-' or 'u')");
      }
    }
    if (quantities.size() > word.size())
      throw LexiconError(Kind::quantity, line_no, qty_tok.column,
                         "word '" + word.str() + "' has " + std::to_string(word.size()) +
                             " letter(s) but " + std::to_string(quantities.size()) + " quantities");

    const detail::Token cat_tok = tokens[3];
    std::string cat;
    for (char c : cat_tok.text) cat += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    const Slot slot = slot_for_drum(drum);
    if (cat != "adj" && cat != "noun" && cat != "adv" && cat != "verb")
      throw LexiconError(Kind::syntax, line_no, cat_tok.column,
                         "unknown category '" + std::string(cat_tok.text) + "'");
    if (cat != category_keyword(slot))
      throw LexiconError(Kind::category, line_no, cat_tok.column,
                         "drum " + std::to_string(drum) + " holds " +
                             std::string(category_keyword(slot)) + " words, not " + cat);

    drums[static_cast<std::size_t>(drum - 1)].push_back({drum, std::move(word), std::move(quantities), slot});
  }

  for (int d = 1; d <= drum_count; ++d)
    if (drums[static_cast<std::size_t>(d - 1)].empty())
      throw LexiconError(Kind::empty_drum, 0, 0, "empty drum " + std::to_string(d));

  return Lexicon(std::move(drums));
}

// Inverse of parse_lexicon.
inline std::string render_lexicon(const Lexicon& lexicon) {
  std::ostringstream out;
  for (int d = 1; d <= drum_count; ++d)
    for (const LexiconEntry& e : lexicon.drum(d))
      out << d << ' ' << e.word.str() << ' ' << quantity_string(e.quantities) << ' '
          << category_keyword(e.category) << '\n';
  return out.str();
}

// Product over drums of the number of distinct words on each drum.
inline std::uint64_t count_distinct_lines(const Lexicon& lexicon) {
  std::uint64_t total = 1;
  for (int d = 1; d <= drum_count; ++d) total *= lexicon.distinct_words(d).size();
  return total;
}

}  // namespace eureka
