#pragma once

// Cycle-level simulation of the verse machine.
//
// A pull of the lever kicks every drum to a new row, lets the staves fall one
// alphabet position per tick until each rests on its wire, rings the bell,
// then lifts the staves back. One full wind gives five cycles.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eureka/drumc.hpp"
#include "eureka/error.hpp"
#include "eureka/random.hpp"

namespace eureka {

inline constexpr int cycles_per_wind = 5;

enum class Phase { ready, interpreting, dwell, resetting };

inline const char* phase_name(Phase p) {
  switch (p) {
    case Phase::ready: return "READY";
    case Phase::interpreting: return "INTERPRETING";
    case Phase::dwell: return "DWELL";
    case Phase::resetting: return "RESETTING";
  }
  return "?";
}

struct MachineConfig {
  bool auto_wind = true;  // run_session winds whenever the weight is down
};

struct Frame {
  int tick = 0;
  std::vector<int> drops;  // per stave, 0..28
  std::string display;

  friend bool operator==(const Frame&, const Frame&) = default;
};

struct CycleResult {
  std::array<std::string, drum_count> words;
  std::string verse;  // words joined by single spaces
  std::array<std::size_t, drum_count> rows{};
  std::array<std::size_t, drum_count> kicks{};
  std::vector<Frame> trace;
  int bell_tick = 0;
  std::uint64_t cycle = 0;  // 1-based odometer reading after this cycle

  friend bool operator==(const CycleResult&, const CycleResult&) = default;
};

namespace detail {

inline std::string join_words(const std::array<std::string, drum_count>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i];
  }
  return out;
}

}  // namespace detail

class Machine {
 public:
  Machine(MachineProgram program, std::uint64_t seed, MachineConfig config = {})
      : program_(std::move(program)), config_(config), seed_(seed), rng_(seed) {
    for (int d = 1; d <= drum_count; ++d) {
      const WireMatrix& m = program_.drum(d);
      for (std::size_t col = 0; col < m.width(); ++col) staves_.push_back({d, col});
    }
    drops_.assign(staves_.size(), 0);
    targets_.assign(staves_.size(), 0);
  }

  const MachineProgram& program() const noexcept { return program_; }
  const MachineConfig& config() const noexcept { return config_; }
  std::uint64_t seed() const noexcept { return seed_; }
  Phase phase() const noexcept { return phase_; }
  int energy() const noexcept { return energy_; }
  std::uint64_t odometer() const noexcept { return odometer_; }
  int tick() const noexcept { return tick_; }
  const std::array<std::size_t, drum_count>& drum_positions() const noexcept { return positions_; }
  const std::vector<int>& stave_drops() const noexcept { return drops_; }
  std::size_t stave_count() const noexcept { return staves_.size(); }

  // Tops the weight up to a full five cycles.
  void wind() {
    if (phase_ != Phase::ready) throw PhaseError(std::string("cannot wind while ") + phase_name(phase_));
    energy_ = cycles_per_wind;
  }

  // Releases the brake: kicks the drums and starts the staves falling.
  std::array<std::size_t, drum_count> begin_cycle() {
    if (phase_ != Phase::ready) throw PhaseError(std::string("lever pulled while ") + phase_name(phase_));
    if (energy_ == 0) throw NeedsWinding();
    --energy_;
    std::array<std::size_t, drum_count> kicks{};
    for (int d = 1; d <= drum_count; ++d) {
      const std::size_t rows = program_.drum(d).row_count();
      const auto i = static_cast<std::size_t>(d - 1);
      kicks[i] = static_cast<std::size_t>(rng_.between(1, rows));
      positions_[i] = (positions_[i] + kicks[i]) % rows;
    }
    for (std::size_t s = 0; s < staves_.size(); ++s) {
      const auto [d, col] = staves_[s];
      const WireLength wire = program_.drum(d).row(positions_[static_cast<std::size_t>(d - 1)])[col];
      targets_[s] = wire == no_wire ? blank_depth : 28 - wire;
    }
    tick_ = 0;
    phase_ = Phase::interpreting;
    return kicks;
  }

  // Every stave still above its wire drops one position.
  void descend_tick() {
    if (phase_ != Phase::interpreting) throw PhaseError(std::string("descend_tick while ") + phase_name(phase_));
    for (std::size_t s = 0; s < drops_.size(); ++s)
      if (drops_[s] < targets_[s]) ++drops_[s];
    ++tick_;
  }

  bool at_rest() const {
    for (std::size_t s = 0; s < drops_.size(); ++s)
      if (drops_[s] != targets_[s]) return false;
    return true;
  }

  // Per-stave letter at its current depth (blank at depth 0 and 28), with a
  // single space between drums.
  std::string read_display() const {
    std::string out;
    int last_drum = 1;
    for (std::size_t s = 0; s < staves_.size(); ++s) {
      if (staves_[s].first != last_drum) {
        out += ' ';
        last_drum = staves_[s].first;
      }
      out += glyph_at(drops_[s]);
    }
    return out;
  }

  // The words currently spelled out by the staves, per drum.
  std::array<std::string, drum_count> read_words() const {
    std::array<std::string, drum_count> words;
    for (std::size_t s = 0; s < staves_.size(); ++s) {
      const int depth = drops_[s];
      if (depth >= 1 && depth <= alphabet_size) words[static_cast<std::size_t>(staves_[s].first - 1)] += letter_at(depth);
    }
    return words;
  }

  Frame frame() const { return {tick_, drops_, read_display()}; }

  // One full cycle: kick, fall, bell, read, reset.
  CycleResult pull_lever() {
    CycleResult result;
    result.kicks = begin_cycle();
    result.trace.push_back(frame());
    while (!at_rest()) {
      descend_tick();
      result.trace.push_back(frame());
    }
    result.bell_tick = tick_;
    phase_ = Phase::dwell;
    result.words = read_words();
    result.verse = detail::join_words(result.words);
    result.rows = positions_;

    phase_ = Phase::resetting;
    std::fill(drops_.begin(), drops_.end(), 0);
    phase_ = Phase::ready;
    result.cycle = ++odometer_;
    return result;
  }

  std::vector<CycleResult> run_session(std::size_t pulls) {
    std::vector<CycleResult> results;
    results.reserve(pulls);
    for (std::size_t i = 0; i < pulls; ++i) {
      if (energy_ == 0 && config_.auto_wind) wind();
      results.push_back(pull_lever());
    }
    return results;
  }

 private:
  static std::string glyph_at(int depth) {
    if (depth <= 0 || depth >= blank_depth) return " ";
    return std::string(letter_at(depth));
  }

  MachineProgram program_;
  MachineConfig config_;
  std::uint64_t seed_;
  KickGenerator rng_;
  std::vector<std::pair<int, std::size_t>> staves_;  // (drum, column)
  std::vector<int> drops_;
  std::vector<int> targets_;
  std::array<std::size_t, drum_count> positions_{};
  Phase phase_ = Phase::ready;
  int energy_ = 0;
  int tick_ = 0;
  std::uint64_t odometer_ = 0;
};

inline Machine new_machine(MachineProgram program, std::uint64_t seed, MachineConfig config = {}) {
  return Machine(std::move(program), seed, config);
}

// Number of results whose verse already appeared earlier in the session.
inline std::size_t count_repeats(const std::vector<CycleResult>& results) {
  std::set<std::string> seen;
  std::size_t repeats = 0;
  for (const auto& r : results)
    if (!seen.insert(r.verse).second) ++repeats;
  return repeats;
}

// ---------------------------------------------------------------------------
// Enumeration of the verse space

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

struct Verse {
  std::array<std::string, drum_count> words;
  std::string text() const { return detail::join_words(words); }
  friend auto operator<=>(const Verse&, const Verse&) = default;
};

// Distinct words on each drum of a program, in row order.
inline std::array<std::vector<std::string>, drum_count> distinct_drum_words(const MachineProgram& program) {
  std::array<std::vector<std::string>, drum_count> out;
  for (int d = 1; d <= drum_count; ++d) {
    std::set<std::string> seen;
    const WireMatrix& m = program.drum(d);
    for (std::size_t r = 0; r < m.row_count(); ++r) {
      std::string w = decode_row(m, r).str();
      if (seen.insert(w).second) out[static_cast<std::size_t>(d - 1)].push_back(std::move(w));
    }
  }
  return out;
}

inline std::uint64_t count_program_lines(const MachineProgram& program) {
  std::uint64_t n = 1;
  for (const auto& words : distinct_drum_words(program)) n *= words.size();
  return n;
}

// Calls `visit(const Verse&)` for every distinct line, drum 1 varying
// slowest. Throws CapExceeded before visiting anything if the space is too big.
template <typename Visitor>
std::uint64_t for_each_line(const MachineProgram& program, std::uint64_t cap, Visitor&& visit) {
  const auto words = distinct_drum_words(program);
  std::uint64_t total = 1;
  for (const auto& w : words) total *= w.size();
  if (total > cap)
    throw CapExceeded(std::to_string(total) + " lines exceed the enumeration cap of " + std::to_string(cap));

  std::array<std::size_t, drum_count> index{};
  Verse verse;
  for (std::uint64_t n = 0; n < total; ++n) {
    for (std::size_t d = 0; d < drum_count; ++d) verse.words[d] = words[d][index[d]];
    visit(static_cast<const Verse&>(verse));
    for (std::size_t d = drum_count; d-- > 0;) {
      if (++index[d] < words[d].size()) break;
      index[d] = 0;
    }
  }
  return total;
}

inline std::vector<Verse> enumerate_lines(const MachineProgram& program,
                                          std::uint64_t cap = default_enumeration_cap) {
  std::vector<Verse> out;
  for_each_line(program, cap, [&](const Verse& v) { out.push_back(v); });
  return out;
}

}  // namespace eureka
