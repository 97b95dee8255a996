#pragma once

// Trace output for machine sessions.
//
// JSON Lines: one {"tick","drops","display"} object per frame, followed by
// one {"verse","words","cycle","seed"} summary per cycle.

#include <cstdint>
#include <ostream>

#include <json.hpp>

#include "eureka/mechanism.hpp"

namespace eureka {

inline nlohmann::ordered_json frame_json(const Frame& frame) {
  return {{"tick", frame.tick}, {"drops", frame.drops}, {"display", frame.display}};
}

inline nlohmann::ordered_json summary_json(const CycleResult& result, std::uint64_t seed) {
  return {{"verse", result.verse}, {"words", result.words}, {"cycle", result.cycle}, {"seed", seed}};
}

inline void write_jsonl(std::ostream& out, const CycleResult& result, std::uint64_t seed,
                        bool with_frames = true) {
  if (with_frames)
    for (const Frame& f : result.trace) out << frame_json(f).dump() << '\n';
  out << summary_json(result, seed).dump() << '\n';
}

// Text trace: the display at every tick, then the bell and the verse.
inline void write_text_trace(std::ostream& out, const CycleResult& result) {
  out << "cycle " << result.cycle << '\n';
  for (const Frame& f : result.trace) {
    out << (f.tick < 10 ? " " : "") << f.tick << " |" << f.display << "|\n";
  }
  out << "bell at tick " << result.bell_tick << ": " << result.verse << '\n';
}

}  // namespace eureka
