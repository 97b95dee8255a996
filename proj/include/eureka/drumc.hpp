#pragma once

// Drum compiler: words become rows of wire lengths.
//
// A letter at alphabet index i is a wire of length 28 - i, so A is the
// longest wire (27) and Z the shortest (1); the stave resting on it falls
// exactly i positions. 0 means no wire, used only to pad a short word out to
// the drum width.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eureka/alphabet.hpp"
#include "eureka/error.hpp"
#include "eureka/lexicon.hpp"

namespace eureka {

using WireLength = std::uint8_t;

inline constexpr WireLength no_wire = 0;
inline constexpr int blank_depth = 28;  // a stave over a missing wire falls past Z

inline constexpr WireLength wire_for(Letter letter) {
  return static_cast<WireLength>(28 - letter.index());
}

inline Letter letter_for_wire(WireLength length) {
  if (length == no_wire || length > alphabet_size)
    throw MalformedRowError("wire length " + std::to_string(length) + " encodes no letter");
  return Letter::from_index(28 - length);
}

// One drum: a row of wires per word, one column per stave.
class WireMatrix {
 public:
  using Row = std::vector<WireLength>;

  WireMatrix() = default;
  WireMatrix(Slot slot, std::size_t width, std::vector<Row> rows)
      : slot_(slot), width_(width), rows_(std::move(rows)) {}

  Slot slot() const noexcept { return slot_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const Row& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  friend bool operator==(const WireMatrix&, const WireMatrix&) = default;

 private:
  Slot slot_ = Slot::adj1;
  std::size_t width_ = 0;
  std::vector<Row> rows_;
};

inline WireMatrix compile_drum(std::span<const Word> words, Slot slot) {
  if (words.empty()) throw CompileError("cannot compile an empty word list");
  std::size_t width = 0;
  for (const Word& w : words) {
    if (w.empty()) throw CompileError("cannot compile an empty word");
    width = std::max(width, w.size());
  }
  std::vector<WireMatrix::Row> rows;
  rows.reserve(words.size());
  for (const Word& w : words) {
    WireMatrix::Row row(width, no_wire);
    for (std::size_t j = 0; j < w.size(); ++j) row[j] = wire_for(w[j]);
    rows.push_back(std::move(row));
  }
  return WireMatrix(slot, width, std::move(rows));
}

// Reads a row back as a word. Padding must be a suffix.
inline Word decode_row(const WireMatrix& matrix, std::size_t row_index) {
  if (row_index >= matrix.row_count())
    throw Error("row " + std::to_string(row_index) + " out of range (drum has " +
                std::to_string(matrix.row_count()) + " rows)");
  const auto& row = matrix.row(row_index);
  std::vector<Letter> letters;
  bool padding = false;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == no_wire) {
      padding = true;
    } else if (padding) {
      throw MalformedRowError("row " + std::to_string(row_index) + ": wire at column " +
                              std::to_string(j) + " follows a gap");
    } else {
      letters.push_back(letter_for_wire(row[j]));
    }
  }
  return Word(std::move(letters));
}

// The six drums, in slot order.
class MachineProgram {
 public:
  MachineProgram() = default;
  explicit MachineProgram(std::array<WireMatrix, drum_count> drums) : drums_(std::move(drums)) {
    for (std::size_t d = 0; d < drums_.size(); ++d) {
      if (drums_[d].slot() != slot_order[d]) throw CompileError("drums out of slot order");
      if (drums_[d].row_count() == 0) throw CompileError("drum with no rows");
    }
  }

  const WireMatrix& drum(int d) const { return drums_.at(static_cast<std::size_t>(d - 1)); }
  const std::array<WireMatrix, drum_count>& drums() const noexcept { return drums_; }

  std::size_t stave_count() const {
    std::size_t n = 0;
    for (const auto& m : drums_) n += m.width();
    return n;
  }

  friend bool operator==(const MachineProgram&, const MachineProgram&) = default;

 private:
  std::array<WireMatrix, drum_count> drums_;
};

// Every lexicon row becomes a drum row, duplicates included.
inline MachineProgram compile_program(const Lexicon& lexicon) {
  std::array<WireMatrix, drum_count> drums;
  for (int d = 1; d <= drum_count; ++d) {
    std::vector<Word> words;
    for (const LexiconEntry& e : lexicon.drum(d)) words.push_back(e.word);
    drums[static_cast<std::size_t>(d - 1)] = compile_drum(words, slot_for_drum(d));
  }
  return MachineProgram(std::move(drums));
}

// Text dump: one "[drum N SLOT width=W]" section per drum, rows as
// comma-separated wire lengths.
inline std::string dump_program(const MachineProgram& program) {
  std::ostringstream out;
  for (int d = 1; d <= drum_count; ++d) {
    const WireMatrix& m = program.drum(d);
    out << "[drum " << d << ' ' << slot_name(m.slot()) << " width=" << m.width() << "]\n";
    for (const auto& row : m.rows()) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << static_cast<int>(row[j]);
      out << '\n';
    }
  }
  return out.str();
}

inline MachineProgram parse_program_dump(std::string_view text) {
  std::array<WireMatrix, drum_count> drums;
  int current = 0;
  std::size_t width = 0;
  std::vector<WireMatrix::Row> rows;
  const auto flush = [&] {
    if (current) drums[static_cast<std::size_t>(current - 1)] = WireMatrix(slot_for_drum(current), width, rows);
    rows.clear();
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fail = [&](const std::string& what) {
      throw Error("program dump line " + std::to_string(line_no) + ": " + what);
    };
    if (line.front() == '[') {
      flush();
      int d = 0;
      char slot_buf[16] = {};
      unsigned long w = 0;
      if (std::sscanf(line.c_str(), "[drum %d %15s width=%lu]", &d, slot_buf, &w) != 3) fail("bad section header");
      if (d != current + 1) fail("drum sections out of order");
      current = d;
      width = w;
      continue;
    }
    if (!current) fail("row before the first section");
    WireMatrix::Row row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      int value = -1;
      try {
        value = std::stoi(cell);
      } catch (const std::exception&) {
        fail("bad wire length '" + cell + "'");
      }
      if (value < 0 || value > alphabet_size) fail("wire length out of range");
      row.push_back(static_cast<WireLength>(value));
    }
    if (row.size() != width) fail("row width does not match section width");
    rows.push_back(std::move(row));
  }
  flush();
  if (current != drum_count) throw Error("program dump needs six drum sections");
  return MachineProgram(std::move(drums));
}

}  // namespace eureka
