#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gridabe/bls12_381.hpp"
#include "gridabe/ops.hpp"

namespace gridabe {

using DefaultBackend = Bls12_381;

// One simulated collection round, driven entirely by a virtual microsecond
// clock and a single seed. Arrival order decides who forms the batch; the
// transaction period decides who is rejected.
struct ScenarioArrival {
  std::uint32_t ru = 0;  // 1-based
  std::uint64_t t_us = 0;
};

struct ScenarioConfig {
  std::uint32_t n = 0;  // registered reporting units
  std::uint32_t k = 0;  // batch threshold
  std::uint64_t tp_us = 0;
  std::uint64_t seed = 0;
  std::size_t msg_bytes = 0;
  std::vector<std::string> universe;
  std::vector<std::string> area;  // ciphertext attribute labels
  std::string policy_json;        // operator key policy
  std::vector<ScenarioArrival> arrivals;
  std::vector<std::uint64_t> ao_decrypt_at_us;
};

// throws std::invalid_argument on malformed or inconsistent documents
ScenarioConfig parse_scenario(const std::string& json_text);

struct ScenarioSummary {
  bool batch_finalized = false;
  std::size_t finished = 0;
  std::size_t rejected = 0;
  std::size_t recovered = 0;  // payloads the operator verified
  OpCounts ops;
};

// Runs the round and writes one JSON object per line to `transcript`.
// Identical config (seed included) yields byte-identical output.
ScenarioSummary run_scenario(const ScenarioConfig& cfg, std::ostream& transcript);

}  // namespace gridabe
