#pragma once

#include <cstdint>

namespace gridabe {

// Per-thread operation tally. Tests use these to pin down algorithmic
// behavior (a path that must not pair, a decryption that must walk the
// tree exactly once) independently of wall-clock noise.
struct OpCounts {
  std::uint64_t pairings = 0;
  std::uint64_t g1_exps = 0;
  std::uint64_t g2_exps = 0;
  std::uint64_t gt_exps = 0;
  std::uint64_t interpolations = 0;
  std::uint64_t decrypt_node_runs = 0;

  friend OpCounts operator-(const OpCounts& a, const OpCounts& b) {
    return {a.pairings - b.pairings,         a.g1_exps - b.g1_exps,
            a.g2_exps - b.g2_exps,           a.gt_exps - b.gt_exps,
            a.interpolations - b.interpolations,
            a.decrypt_node_runs - b.decrypt_node_runs};
  }
  friend bool operator==(const OpCounts& a, const OpCounts& b) {
    return a.pairings == b.pairings && a.g1_exps == b.g1_exps && a.g2_exps == b.g2_exps &&
           a.gt_exps == b.gt_exps && a.interpolations == b.interpolations &&
           a.decrypt_node_runs == b.decrypt_node_runs;
  }
};

inline OpCounts& op_counts() {
  thread_local OpCounts counts;
  return counts;
}

inline void reset_op_counts() { op_counts() = OpCounts{}; }

}  // namespace gridabe
