#pragma once

#include <cstdint>

namespace fulltree::ops {

// Deterministic work counters. `clauses` counts executed match arms and
// closure bodies inside the balancing algorithms; `allocs` counts tree and
// packed-pair node constructions. They are always compiled in: incrementing
// a thread-local integer is cheap and keeps measured runs identical to
// ordinary ones. Thread-local so concurrent checks cannot interleave.
struct Counters {
  std::uint64_t clauses = 0;
  std::uint64_t allocs = 0;
  std::uint64_t cons_clauses = 0;  // bl_cons arms only, for amortization checks
};

inline Counters& counters() {
  thread_local Counters c;
  return c;
}

inline void clause() { ++counters().clauses; }
inline void alloc() { ++counters().allocs; }

inline void cons_clause() {
  ++counters().clauses;
  ++counters().cons_clauses;
}

inline void reset() { counters() = Counters{}; }
inline Counters read() { return counters(); }

}  // namespace fulltree::ops
