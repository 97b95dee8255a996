#pragma once

// John Peter's 1677 versifying tables.
//
// Each table is a row-major run of cells hiding nine words. The word for
// digit d starts at cell first_position(d) (1-based) and continues every
// ninth cell until a black square. Positions are 1-based in this header's
// interface; storage is a 0-based vector, converted only in cell_at().
//
// Table file format:
//
//   % <row_width>
//   tristiaxq
//   r#....
//
// A '%' line opens a table; rows follow, '#' (or '█') is a black square,
// letters are case-insensitive and whitespace inside rows is ignored.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eureka/error.hpp"

namespace eureka::peter {

inline constexpr int words_per_table = 9;
inline constexpr int tables_per_line = 6;
inline constexpr std::string_view black_glyph = "█";

class Cell {
 public:
  static constexpr Cell black() { return Cell(0); }
  static Cell letter(char c) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c < 'a' || c > 'z') throw PeterError(std::string("'") + c + "' is not a Latin letter");
    return Cell(c);
  }

  constexpr bool is_black() const noexcept { return value_ == 0; }
  constexpr char letter() const noexcept { return value_; }

  friend constexpr bool operator==(Cell, Cell) = default;

 private:
  constexpr explicit Cell(char v) : value_(v) {}
  char value_;
};

struct Table {
  std::vector<Cell> cells;
  std::size_t row_width = 9;  // display only

  std::size_t size() const noexcept { return cells.size(); }
  // 1-based position.
  Cell cell_at(std::size_t position) const { return cells.at(position - 1); }

  friend bool operator==(const Table&, const Table&) = default;
};

struct Key {
  std::array<int, tables_per_line> digits{};

  // "467182"
  static Key parse(std::string_view text) {
    if (text.size() != tables_per_line)
      throw PeterError("a key is six digits from 1 to 9, got '" + std::string(text) + "'");
    Key key;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] < '1' || text[i] > '9')
        throw PeterError("a key is six digits from 1 to 9, got '" + std::string(text) + "'");
      key.digits[i] = text[i] - '0';
    }
    return key;
  }

  std::string str() const {
    std::string out;
    for (int d : digits) out += static_cast<char>('0' + d);
    return out;
  }
};

// Where the walk for a digit starts: count from the digit after it up to 9
// along the top row, so 4 lands on the fifth cell. Digit 9 counts from the
// first cell to the ninth.
inline int first_position(int digit) {
  if (digit < 1 || digit > 9) throw PeterError("digit out of range 1..9: " + std::to_string(digit));
  return digit == 9 ? 9 : 9 - digit;
}

inline std::string decode_word(const Table& table, int digit) {
  std::string word;
  for (std::size_t pos = static_cast<std::size_t>(first_position(digit)); pos <= table.size(); pos += 9) {
    const Cell c = table.cell_at(pos);
    if (c.is_black()) return word;
    word += c.letter();
  }
  throw PeterError("malformed table: the walk for digit " + std::to_string(digit) +
                   " ran off the end without reaching a black square");
}

inline std::array<std::string, tables_per_line> decode_line(std::span<const Table> tables, const Key& key) {
  if (tables.size() != tables_per_line)
    throw PeterError("a line needs six tables, got " + std::to_string(tables.size()));
  std::array<std::string, tables_per_line> words;
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = decode_word(tables[i], key.digits[i]);
  return words;
}

// Checks that every digit's cells hold a non-empty word and exactly one black square.
inline void validate_table(const Table& table) {
  if (table.row_width == 0) throw PeterError("row width must be positive");
  for (int digit = 1; digit <= 9; ++digit) {
    const auto start = static_cast<std::size_t>(first_position(digit));
    int blacks = 0;
    for (std::size_t pos = start; pos <= table.size(); pos += 9)
      if (table.cell_at(pos).is_black()) ++blacks;
    if (blacks != 1)
      throw PeterError("malformed table: digit " + std::to_string(digit) + " has " + std::to_string(blacks) +
                       " black squares, expected 1");
    if (table.cell_at(start).is_black())
      throw PeterError("malformed table: digit " + std::to_string(digit) + " hides an empty word");
  }
}

namespace detail {

inline std::uint64_t fnv1a(std::string_view text, std::uint64_t extra) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&](unsigned char b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  };
  for (char c : text) mix(static_cast<unsigned char>(c));
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(extra >> (8 * i)));
  return h;
}

}  // namespace detail

// Hides nine words (index 0 holds digit 1's word) in one table. Cells a
// word does not use are filled with decoy letters taken from that same word,
// chosen by a hash of the word and the position, so each digit's word only
// ever touches its own cells.
inline Table encode_table(std::span<const std::string> words, std::size_t row_width = 9) {
  if (words.size() != words_per_table)
    throw PeterError("a table hides nine words, got " + std::to_string(words.size()));
  if (row_width == 0) throw PeterError("row width must be positive");

  std::array<std::string, words_per_table> lower;
  std::size_t length = 0;
  for (int digit = 1; digit <= 9; ++digit) {
    std::string& w = lower[static_cast<std::size_t>(digit - 1)];
    for (char c : words[static_cast<std::size_t>(digit - 1)]) w += Cell::letter(c).letter();
    if (w.empty()) throw PeterError("empty word for digit " + std::to_string(digit));
    length = std::max(length, static_cast<std::size_t>(first_position(digit)) + 9 * w.size());
  }
  length = (length + row_width - 1) / row_width * row_width;

  Table table;
  table.row_width = row_width;
  table.cells.assign(length, Cell::black());
  for (int digit = 1; digit <= 9; ++digit) {
    const std::string& w = lower[static_cast<std::size_t>(digit - 1)];
    const auto start = static_cast<std::size_t>(first_position(digit));
    std::size_t k = 0;
    for (std::size_t pos = start; pos <= length; pos += 9, ++k) {
      if (k < w.size()) {
        table.cells[pos - 1] = Cell::letter(w[k]);
      } else if (k == w.size()) {
        table.cells[pos - 1] = Cell::black();
      } else {
        table.cells[pos - 1] = Cell::letter(w[detail::fnv1a(w, pos) % w.size()]);
      }
    }
  }
  return table;
}

inline constexpr std::uint64_t count_peter_lines() {
  std::uint64_t n = 1;
  for (int i = 0; i < tables_per_line; ++i) n *= words_per_table;
  return n;
}

// Distinct lines the tables can produce (keys that decode to the same words
// count once).
inline std::uint64_t count_distinct_peter_lines(std::span<const Table> tables) {
  std::uint64_t n = 1;
  for (const Table& t : tables) {
    std::set<std::string> words;
    for (int digit = 1; digit <= 9; ++digit) words.insert(decode_word(t, digit));
    n *= words.size();
  }
  return n;
}

// Printable grid: row_width cells per row, upper-case letters, black squares
// as '█', cells separated by spaces.
inline std::string render_table(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Cell c = table.cells[i];
    if (i % table.row_width) out += ' ';
    if (c.is_black()) {
      out += black_glyph;
    } else {
      out += static_cast<char>(c.letter() - 'a' + 'A');
    }
    if ((i + 1) % table.row_width == 0 || i + 1 == table.size()) out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<Cell> parse_row(std::string_view row, std::size_t line_no) {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < row.size();) {
    const char c = row[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      cells.push_back(Cell::black());
      ++i;
    } else if (row.substr(i, black_glyph.size()) == black_glyph) {
      cells.push_back(Cell::black());
      i += black_glyph.size();
    } else {
      try {
        cells.push_back(Cell::letter(c));
      } catch (const PeterError&) {
        throw PeterError("line " + std::to_string(line_no) + ": bad cell '" + std::string(1, c) + "'");
      }
      ++i;
    }
  }
  return cells;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    lines.push_back(text.substr(pos, eol - pos));
    pos = eol + 1;
  }
  return lines;
}

}  // namespace detail

// Reads back the output of render_table (row width taken from the first row).
inline Table parse_rendered_table(std::string_view text) {
  Table table;
  table.row_width = 0;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    auto row = detail::parse_row(line, line_no);
    if (row.empty()) continue;
    if (table.row_width == 0) table.row_width = row.size();
    if (row.size() > table.row_width) throw PeterError("line " + std::to_string(line_no) + ": row too wide");
    table.cells.insert(table.cells.end(), row.begin(), row.end());
  }
  if (table.row_width == 0) throw PeterError("empty table");
  return table;
}

inline std::vector<Table> parse_tables(std::string_view text) {
  std::vector<Table> tables;
  std::size_t line_no = 0;
  bool short_row_seen = false;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '%') {
      std::size_t width = 0;
      std::istringstream in{std::string(line.substr(first + 1))};
      if (!(in >> width) || width == 0)
        throw PeterError("line " + std::to_string(line_no) + ": expected '% <row_width>'");
      tables.push_back({{}, width});
      short_row_seen = false;
      continue;
    }
    if (tables.empty()) throw PeterError("line " + std::to_string(line_no) + ": row before the first '%' header");
    Table& t = tables.back();
    auto row = detail::parse_row(line, line_no);
    if (row.size() > t.row_width || short_row_seen)
      throw PeterError("line " + std::to_string(line_no) + ": row does not fit the table width");
    short_row_seen = row.size() < t.row_width;
    t.cells.insert(t.cells.end(), row.begin(), row.end());
  }
  for (const Table& t : tables) validate_table(t);
  return tables;
}

inline std::string write_tables(std::span<const Table> tables) {
  std::string out;
  for (const Table& t : tables) {
    out += "% " + std::to_string(t.row_width) + "\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
      out += t.cells[i].is_black() ? '#' : t.cells[i].letter();
      if ((i + 1) % t.row_width == 0 || i + 1 == t.size()) out += '\n';
    }
  }
  return out;
}

}  // namespace eureka::peter
