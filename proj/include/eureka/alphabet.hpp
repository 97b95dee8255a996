#pragma once

// The 27-letter stave alphabet: A Æ B C D E F G H I J K L M N O Œ P Q R S T U V X Y Z.
// Æ and Œ are single letters; there is no W.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eureka/error.hpp"

namespace eureka {

inline constexpr int alphabet_size = 27;

namespace detail {

inline constexpr std::array<std::string_view, alphabet_size> glyphs = {
    "A", "Æ", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L", "M",
    "N", "O", "Œ", "P", "Q", "R", "S", "T", "U", "V", "X", "Y", "Z"};

// Decodes one UTF-8 code point starting at text[pos]; advances pos. Returns
// 0xFFFD on malformed input.
inline char32_t next_code_point(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  std::size_t extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + extra >= text.size()) {
    pos = text.size();
    return 0xFFFD;
  }
  for (std::size_t i = 1; i <= extra; ++i) {
    if ((byte(pos + i) & 0xC0) != 0x80) {
      pos += i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (byte(pos + i) & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

inline std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

// Index 1..27 of an upper- or lower-case letter code point, or nullopt.
inline std::optional<int> code_point_index(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') cp = cp - U'a' + U'A';
  switch (cp) {
    case U'Æ':
    case U'æ':
      return 2;
    case U'Œ':
    case U'œ':
      return 17;
    case U'W':
      return std::nullopt;
    default:
      break;
  }
  if (cp < U'A' || cp > U'Z') return std::nullopt;
  // Positions shift after Æ (+1), after Œ (+1), and V X Y Z skip W.
  int index = static_cast<int>(cp - U'A') + 1;
  if (cp >= U'B') ++index;
  if (cp >= U'P') ++index;
  if (cp >= U'X') --index;
  return index;
}

}  // namespace detail

// One stave letter, held as its 1-based position in the alphabet.
class Letter {
 public:
  constexpr Letter() = default;

  static Letter from_index(int index) {
    if (index < 1 || index > alphabet_size)
      throw AlphabetError("letter index out of range: " + std::to_string(index));
    Letter l;
    l.index_ = static_cast<std::uint8_t>(index);
    return l;
  }

  constexpr int index() const noexcept { return index_; }
  constexpr std::string_view glyph() const noexcept { return detail::glyphs[index_ - 1]; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint8_t index_ = 1;
};

// Position 1..27 of a single-letter string (e.g. "A", "Œ", "œ").
inline int letter_index(std::string_view letter) {
  std::size_t pos = 0;
  if (!letter.empty()) {
    const char32_t cp = detail::next_code_point(letter, pos);
    if (pos == letter.size()) {
      if (auto index = detail::code_point_index(cp)) return *index;
    }
  }
  throw AlphabetError("unknown letter: '" + std::string(letter) + "'");
}

inline std::string_view letter_at(int index) { return Letter::from_index(index).glyph(); }

// A word over the stave alphabet.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Parses UTF-8 text, case-insensitively. "AE"/"OE" digraphs fold to Æ/Œ.
  static Word parse(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::size_t start = pos;
      const char32_t cp = detail::next_code_point(text, pos);
      auto index = detail::code_point_index(cp);
      if (!index) {
        throw AlphabetError("letter '" + std::string(text.substr(start, pos - start)) +
                            "' is not in the stave alphabet");
      }
      if ((*index == 1 || *index == 16) && pos < text.size() && (text[pos] == 'E' || text[pos] == 'e')) {
        // A+E -> Æ, O+E -> Œ
        index = *index == 1 ? 2 : 17;
        ++pos;
      }
      letters.push_back(Letter::from_index(*index));
    }
    return Word(std::move(letters));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  std::string str() const {
    std::string out;
    for (Letter l : letters_) out += l.glyph();
    return out;
  }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Canonical upper-case form of a word: "praenarrant" -> "PRÆNARRANT".
inline std::string canonical_word(std::string_view text) { return Word::parse(text).str(); }

}  // namespace eureka
